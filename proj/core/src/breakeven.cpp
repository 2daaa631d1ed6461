#include "tco/breakeven.hpp"

#include <algorithm>
#include <array>

#include "tco/errors.hpp"

namespace tco {

namespace {

constexpr std::array<std::string_view, 3> kStatusNames = {
    "immediate", "breaks_even", "never"};
constexpr std::array<std::string_view, 3> kTierNames = {"rapid", "strategic",
                                                        "challenging"};
constexpr std::array<std::string_view, 3> kTierLabels = {"Rapid", "Strategic",
                                                         "Challenging"};
constexpr std::array<std::string_view, 8> kSweepNames = {
    "electricity_rate", "hours_per_day", "days_per_month", "output_share",
    "gpu_unit_price",   "input_price",   "output_price",   "throughput"};

std::optional<PerformanceGap> maybe_gap(const BenchmarkScores& open,
                                        const BenchmarkScores& commercial) {
  for (const auto& [b, v] : open)
    if (commercial.count(b)) return performance_gap(open, commercial);
  return std::nullopt;
}

}  // namespace

std::string_view status_name(BreakEvenStatus s) {
  return kStatusNames[static_cast<std::size_t>(s)];
}

std::string_view tier_name(DecisionTier t) {
  return kTierNames[static_cast<std::size_t>(t)];
}

std::string_view tier_label(DecisionTier t) {
  return kTierLabels[static_cast<std::size_t>(t)];
}

DecisionTier classify_tier(double t_star) {
  if (!(t_star >= 0.0))
    throw DomainError("t* must be >= 0", "t_star");
  if (t_star <= 6.0) return DecisionTier::Rapid;
  if (t_star <= 24.0) return DecisionTier::Strategic;
  return DecisionTier::Challenging;
}

std::string PerformanceGap::mean_str(int decimals) const {
  if (count == 0) throw DomainError("empty performance gap");
  std::int64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  // Round the exact mean at the requested precision, then print it at micro
  // resolution so format_micro does not round a second time.
  const int128 scaled = div_round(static_cast<int128>(delta_sum.micro()) * pow10,
                                  static_cast<int128>(count) * kMicro);
  const auto micro = static_cast<std::int64_t>(scaled * (kMicro / pow10));
  return format_micro(micro, decimals);
}

PerformanceGap performance_gap(const BenchmarkScores& open,
                               const BenchmarkScores& commercial) {
  PerformanceGap gap;
  for (const auto& [b, score] : open) {
    auto it = commercial.find(b);
    if (it == commercial.end()) continue;
    const Decimal delta = score - it->second;
    gap.per_benchmark[b] = delta;
    gap.delta_sum += delta;
    ++gap.count;
  }
  if (gap.count == 0)
    throw DomainError("score sets share no benchmark", "scores");
  return gap;
}

BreakEvenResult solve_break_even(const DeploymentSpec& spec,
                                 const ApiOffering& offering,
                                 const WorkloadProfile& w) {
  validate_workload(w);
  BreakEvenResult r;
  r.deployment_id = spec.id;
  r.offering_id = offering.id;

  const Tokens capacity = monthly_capacity(spec, w);
  if (w.demand) {
    r.replicas = required_replicas(spec, w, *w.demand);
    r.capacity = r.replicas == 0 ? Tokens{} : *w.demand;
  } else {
    r.replicas = 1;
    r.capacity = capacity;
  }
  r.hardware = hardware_cost(spec) * r.replicas;
  r.monthly_electricity = electricity_monthly(spec, w) * r.replicas;
  r.monthly_api_cost = api_monthly_cost(offering, r.capacity, w.output_share);

  const Money margin = r.monthly_api_cost - r.monthly_electricity;
  if (margin > Money{}) {
    if (r.hardware.is_zero()) {
      r.status = BreakEvenStatus::Immediate;
      r.t_star = 0.0;
    } else {
      r.status = BreakEvenStatus::BreaksEven;
      r.t_star = static_cast<double>(
          static_cast<long double>(r.hardware.micro()) /
          static_cast<long double>(margin.micro()));
    }
    r.tier = classify_tier(*r.t_star);
  } else {
    r.status = BreakEvenStatus::Never;
    r.degenerate = r.hardware.is_zero();
  }
  r.gap = maybe_gap(spec.scores, offering.scores);
  return r;
}

ScenarioMatrix break_even_matrix(const Catalog& catalog,
                                 const WorkloadProfile& w) {
  validate_workload(w);
  ScenarioMatrix m;
  m.workload = w;
  for (const auto& d : catalog.deployments) m.deployments.push_back({d.id, d.name});
  for (const auto& o : catalog.offerings) m.offerings.push_back({o.id, o.name});
  m.cells.reserve(catalog.deployments.size() * catalog.offerings.size());

  for (const auto& d : catalog.deployments) {
    std::optional<std::pair<double, double>> range;
    for (const auto& o : catalog.offerings) {
      m.cells.push_back(solve_break_even(d, o, w));
      const auto& t = m.cells.back().t_star;
      if (!t) continue;
      if (!range)
        range = std::pair{*t, *t};
      else
        range = std::pair{std::min(range->first, *t),
                          std::max(range->second, *t)};
    }
    m.row_ranges.push_back(range);
  }
  return m;
}

CostCurveSeries cost_curves(const DeploymentSpec& spec,
                            const ApiOffering& offering,
                            const WorkloadProfile& w, Months horizon,
                            Months step) {
  if (horizon <= Months{})
    throw DomainError("horizon must be > 0", "horizon");
  if (step <= Months{} || step > horizon)
    throw DomainError("step must be in (0, horizon]", "step");

  const BreakEvenResult r = solve_break_even(spec, offering, w);
  CostCurveSeries series;
  series.horizon = horizon;
  series.step = step;

  auto sample = [&](Months t) {
    series.points.push_back(CurvePoint{
        .t = t,
        .local_cost = r.hardware + mul_round<Money>(r.monthly_electricity, t),
        .api_cost = mul_round<Money>(r.monthly_api_cost, t),
    });
  };
  const std::int64_t n = horizon.micro() / step.micro();
  for (std::int64_t k = 0; k <= n; ++k) sample(step * k);
  if (series.points.back().t < horizon) sample(horizon);

  if (r.t_star && *r.t_star <= horizon.to_double())
    series.break_even_marker = r.t_star;
  return series;
}

std::string_view sweep_parameter_name(SweepParameter p) {
  return kSweepNames[static_cast<std::size_t>(p)];
}

std::optional<SweepParameter> sweep_parameter_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSweepNames.size(); ++i)
    if (kSweepNames[i] == name) return static_cast<SweepParameter>(i);
  return std::nullopt;
}

std::vector<SweepPoint> sweep(const DeploymentSpec& spec,
                              const ApiOffering& offering,
                              const WorkloadProfile& w,
                              SweepParameter parameter,
                              const std::vector<Fraction>& grid) {
  if (grid.empty()) throw DomainError("sweep grid is empty", "grid");
  validate_workload(w);

  const std::string pname(sweep_parameter_name(parameter));
  auto reject = [&](const Fraction& v, const char* domain) {
    throw DomainError("sweep value " + v.str() + " for " + pname +
                          " is outside " + domain,
                      pname);
  };

  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (const Fraction& v : grid) {
    DeploymentSpec s = spec;
    ApiOffering o = offering;
    WorkloadProfile wl = w;
    const std::int64_t micro = v.to_micro();
    const bool negative = v < Fraction{0, 1};
    switch (parameter) {
      case SweepParameter::ElectricityRate:
        if (negative) reject(v, "[0, inf)");
        wl.electricity_rate = Money::from_micro(micro);
        break;
      case SweepParameter::HoursPerDay:
        if (micro <= 0 || micro > 24 * kMicro) reject(v, "(0, 24]");
        wl.hours_per_day = Decimal::from_micro(micro);
        break;
      case SweepParameter::DaysPerMonth:
        if (micro <= 0 || micro > 31 * kMicro) reject(v, "(0, 31]");
        wl.days_per_month = Decimal::from_micro(micro);
        break;
      case SweepParameter::OutputShare:
        if (negative || v > Fraction{1, 1}) reject(v, "[0, 1]");
        wl.output_share = v;
        break;
      case SweepParameter::GpuUnitPrice:
        if (negative) reject(v, "[0, inf)");
        s.gpu.unit_price = Money::from_micro(micro);
        break;
      case SweepParameter::InputPrice:
        if (negative) reject(v, "[0, inf)");
        o.input_price = Money::from_micro(micro);
        break;
      case SweepParameter::OutputPrice:
        if (negative) reject(v, "[0, inf)");
        o.output_price = Money::from_micro(micro);
        o.accounting_output_price = Money::from_micro(micro);
        break;
      case SweepParameter::Throughput:
        if (micro <= 0) reject(v, "(0, inf)");
        s.throughput = Decimal::from_micro(micro);
        break;
    }
    out.push_back(SweepPoint{v, solve_break_even(s, o, wl)});
  }
  return out;
}

}  // namespace tco
