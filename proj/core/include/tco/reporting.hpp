#pragma once

// Text renderers for capacity tables, break-even matrices, cost curves, and
// sweeps. Three output formats:
//
//   Plain  aligned, pipe-separated table for terminals
//   Csv    header row, "," separator, "." decimal point, "\n" line ends,
//          RFC 4180 quoting where a field needs it
//   Json   structured document mirroring the in-memory types; money is
//          always a decimal string
//
// Paper rounding: money to cents, hardware as "$240k", capacities as
// "506.9M", months to one decimal (two below 3.0), signed gaps "+0.45%".
// Full precision: money and tokens at micro resolution, months and gap
// means as shortest round-trip doubles.

#include <optional>
#include <string>
#include <vector>

#include "tco/breakeven.hpp"
#include "tco/catalog.hpp"
#include "tco/cost_engine.hpp"

namespace tco {

enum class OutputFormat { Plain, Csv, Json };
enum class Rounding { Paper, Full };

struct RenderSpec {
  OutputFormat format = OutputFormat::Plain;
  Rounding rounding = Rounding::Paper;
  /// Column keys to keep, in order, for Plain and Csv. Empty keeps all.
  std::vector<std::string> columns;
};

// Paper-style scalar formatting.
std::string months_paper(double t_star);          // "69.3", "2.26"
std::string hardware_paper(Money m);              // "$240k", "$2.5k"
std::string tokens_paper(Tokens q);               // "506.9M"
std::string gap_paper(const PerformanceGap& g);   // "+0.45%"
std::string cell_paper(const BreakEvenResult& r); // "6.5 (+7.25%)", "never"

/// `v` rounded half away from zero to `decimals` places.
std::string fixed_str(double v, int decimals);

/// Shortest decimal that parses back to the same double.
std::string double_str(double v);

/// One-line summary of the effective workload.
std::string workload_header(const WorkloadProfile& w);

/// Throws std::invalid_argument for unknown column keys.
std::string render_capacity_table(const Catalog& catalog,
                                  const WorkloadProfile& w,
                                  const RenderSpec& r);

std::string render_breakeven_matrix(const ScenarioMatrix& matrix,
                                    const RenderSpec& r);

std::string render_curves(const CostCurveSeries& series, const RenderSpec& r);

std::string render_sweep(SweepParameter parameter,
                         const std::vector<SweepPoint>& points,
                         const RenderSpec& r);

std::string render_breakeven(const DeploymentSpec& spec,
                             const ApiOffering& offering,
                             const WorkloadProfile& w,
                             const BreakEvenResult& result,
                             const RenderSpec& r);

/// Catalog listing. Json is the catalog file format itself.
std::string render_catalog(const Catalog& catalog, const RenderSpec& r);

}  // namespace tco
