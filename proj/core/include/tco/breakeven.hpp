#pragma once

// Break-even between buying hardware and renting an API.
//
// Local spend is hardware + electricity * t; API spend is api_monthly * t.
// The curves cross at
//
//   t* = hardware / (api_monthly - electricity)
//
// when the denominator is positive. Otherwise the local curve never catches
// up (status Never). A zero hardware bill with a positive margin pays off at
// t* = 0 (status Immediate).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tco/catalog.hpp"
#include "tco/cost_engine.hpp"

namespace tco {

enum class BreakEvenStatus { Immediate, BreaksEven, Never };

/// Payback horizon buckets. Boundaries 6 and 24 belong to the lower tier.
enum class DecisionTier { Rapid, Strategic, Challenging };

std::string_view status_name(BreakEvenStatus s);   // "immediate", ...
std::string_view tier_name(DecisionTier t);        // "rapid", ...
std::string_view tier_label(DecisionTier t);       // "Rapid", ...

/// Throws DomainError for negative input.
DecisionTier classify_tier(double t_star);

/// Per-benchmark score deltas (open minus commercial) over the benchmarks
/// both sides report, and their arithmetic mean.
struct PerformanceGap {
  std::map<Benchmark, Decimal> per_benchmark;
  Decimal delta_sum;
  std::int64_t count = 0;

  double mean_delta() const {
    return delta_sum.to_double() / static_cast<double>(count);
  }
  /// Mean rounded half away from zero to `decimals` places, computed on the
  /// exact sum.
  std::string mean_str(int decimals) const;

  friend bool operator==(const PerformanceGap&,
                         const PerformanceGap&) = default;
};

/// Throws DomainError when the two score sets share no benchmark.
PerformanceGap performance_gap(const BenchmarkScores& open,
                               const BenchmarkScores& commercial);

struct BreakEvenResult {
  std::string deployment_id;
  std::string offering_id;
  BreakEvenStatus status = BreakEvenStatus::Never;
  std::optional<double> t_star;  // months; set unless status is Never
  Money monthly_api_cost;
  Money monthly_electricity;
  Money hardware;
  Tokens capacity;            // tokens/month priced on the API side
  std::int64_t replicas = 1;  // deployments needed for the priced volume
  std::optional<DecisionTier> tier;
  std::optional<PerformanceGap> gap;
  /// Zero hardware and no positive margin: the curves never separate.
  bool degenerate = false;

  friend bool operator==(const BreakEvenResult&,
                         const BreakEvenResult&) = default;
};

/// Solves one scenario. Without a demand the API side is priced at the
/// deployment's full monthly capacity; with one, the deployment is replicated
/// to cover the demand and hardware and electricity scale with the replica
/// count. Degenerate scenarios are reported as status Never with
/// `degenerate` set rather than thrown. Throws DomainError on an invalid
/// workload.
BreakEvenResult solve_break_even(const DeploymentSpec& spec,
                                 const ApiOffering& offering,
                                 const WorkloadProfile& w);

struct MatrixRow {
  std::string id;
  std::string name;
};

struct ScenarioMatrix {
  WorkloadProfile workload;
  std::vector<MatrixRow> deployments;  // rows
  std::vector<MatrixRow> offerings;    // columns
  std::vector<BreakEvenResult> cells;  // row-major
  /// (min t*, max t*) over the row's cells with a finite t*.
  std::vector<std::optional<std::pair<double, double>>> row_ranges;

  const BreakEvenResult& cell(std::size_t row, std::size_t col) const {
    return cells[row * offerings.size() + col];
  }
};

ScenarioMatrix break_even_matrix(const Catalog& catalog,
                                 const WorkloadProfile& w);

struct CurvePoint {
  Months t;
  Money local_cost;
  Money api_cost;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CostCurveSeries {
  Months horizon;
  Months step;
  std::vector<CurvePoint> points;
  std::optional<double> break_even_marker;

  friend bool operator==(const CostCurveSeries&,
                         const CostCurveSeries&) = default;
};

/// Samples both cumulative-cost curves at 0, step, 2*step, ... up to the
/// horizon; the horizon itself is always the last sample. Throws
/// DomainError unless 0 < step <= horizon.
CostCurveSeries cost_curves(const DeploymentSpec& spec,
                            const ApiOffering& offering,
                            const WorkloadProfile& w, Months horizon,
                            Months step);

enum class SweepParameter {
  ElectricityRate,
  HoursPerDay,
  DaysPerMonth,
  OutputShare,
  GpuUnitPrice,
  InputPrice,
  OutputPrice,
  Throughput,
};

std::string_view sweep_parameter_name(SweepParameter p);
std::optional<SweepParameter> sweep_parameter_from_name(std::string_view name);

struct SweepPoint {
  Fraction value;
  BreakEvenResult result;
};

/// Re-solves the scenario once per grid value, varying only `parameter`.
/// Non-share parameters use the value rounded to micro resolution; sweeping
/// output_price moves both the listed and the accounting output price.
/// Throws DomainError naming the first out-of-domain grid value, or on an
/// empty grid.
std::vector<SweepPoint> sweep(const DeploymentSpec& spec,
                              const ApiOffering& offering,
                              const WorkloadProfile& w,
                              SweepParameter parameter,
                              const std::vector<Fraction>& grid);

}  // namespace tco
