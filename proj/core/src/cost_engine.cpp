#include "tco/cost_engine.hpp"

#include "tco/errors.hpp"

namespace tco {

namespace {

constexpr int128 kMicro128 = kMicro;

std::int64_t narrow(int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw DomainError(std::string(what) + " overflows the fixed-point range");
  return static_cast<std::int64_t>(v);
}

void require_nonnegative(Months months) {
  if (months < Months{})
    throw DomainError("months must be >= 0, got " + months.trimmed(),
                      "months");
}

}  // namespace

void validate_workload(const WorkloadProfile& w) {
  if (w.hours_per_day <= Decimal{} || w.hours_per_day > Decimal::from_units(24))
    throw DomainError("hours_per_day must be in (0, 24], got " +
                          w.hours_per_day.trimmed(),
                      "hours_per_day");
  if (w.days_per_month <= Decimal{} ||
      w.days_per_month > Decimal::from_units(31))
    throw DomainError("days_per_month must be in (0, 31], got " +
                          w.days_per_month.trimmed(),
                      "days_per_month");
  if (w.electricity_rate < Money{})
    throw DomainError("electricity_rate must be >= 0, got " +
                          w.electricity_rate.trimmed(),
                      "electricity_rate");
  if (w.output_share < Fraction{0, 1} || w.output_share > Fraction{1, 1})
    throw DomainError(
        "output_share must be in [0, 1], got " + w.output_share.str(),
        "output_share");
  if (w.demand && *w.demand < Tokens{})
    throw DomainError("demand must be >= 0, got " + w.demand->trimmed(),
                      "demand");
}

Decimal operating_hours(const WorkloadProfile& w) {
  return mul_round<Decimal>(w.hours_per_day, w.days_per_month);
}

Money hardware_cost(const DeploymentSpec& spec) {
  return Money::from_micro(narrow(
      static_cast<int128>(spec.gpu.unit_price.micro()) * spec.gpu_count,
      "hardware cost"));
}

Money electricity_monthly(const DeploymentSpec& spec,
                          const WorkloadProfile& w) {
  // count * W * h/day * days/month * $/kWh, each factor micro-scaled; the
  // 1/1000 turns watts into kilowatts.
  const int128 num = static_cast<int128>(spec.gpu_count) *
                     spec.gpu.accounting_power.micro() *
                     w.hours_per_day.micro() * w.days_per_month.micro() *
                     w.electricity_rate.micro();
  return Money::from_micro(narrow(
      div_round(num, kMicro128 * kMicro128 * kMicro128 * 1000),
      "electricity cost"));
}

Money local_cumulative_cost(const DeploymentSpec& spec,
                            const WorkloadProfile& w, Months months) {
  require_nonnegative(months);
  return hardware_cost(spec) +
         mul_round<Money>(electricity_monthly(spec, w), months);
}

Tokens monthly_capacity(const DeploymentSpec& spec, const WorkloadProfile& w) {
  const int128 num = static_cast<int128>(spec.throughput.micro()) *
                     w.hours_per_day.micro() * w.days_per_month.micro() * 3600;
  return Tokens::from_micro(
      narrow(div_round(num, kMicro128 * kMicro128), "monthly capacity"));
}

Money api_monthly_cost(const ApiOffering& offering, Tokens tokens,
                       const Fraction& output_share) {
  const std::int64_t out_part = output_share.num();
  const std::int64_t in_part = output_share.den() - output_share.num();
  const int128 blended =
      static_cast<int128>(in_part) * offering.input_price.micro() +
      static_cast<int128>(out_part) * offering.accounting_output_price.micro();
  const int128 num = static_cast<int128>(tokens.micro()) * blended;
  const int128 den =
      static_cast<int128>(output_share.den()) * kMicro128 * kMicro128;
  return Money::from_micro(narrow(div_round(num, den), "API cost"));
}

Money api_cumulative_cost(const ApiOffering& offering, Tokens tokens,
                          const Fraction& output_share, Months months) {
  require_nonnegative(months);
  return mul_round<Money>(api_monthly_cost(offering, tokens, output_share),
                          months);
}

std::int64_t required_replicas(const DeploymentSpec& spec,
                               const WorkloadProfile& w, Tokens demand) {
  if (demand < Tokens{})
    throw DomainError("demand must be >= 0, got " + demand.trimmed(),
                      "demand");
  if (demand.is_zero()) return 0;
  const Tokens capacity = monthly_capacity(spec, w);
  if (capacity <= Tokens{})
    throw DomainError("positive demand against zero capacity", "demand");
  return (demand.micro() + capacity.micro() - 1) / capacity.micro();
}

}  // namespace tco
