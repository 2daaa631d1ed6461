#pragma once

// Hardware, electricity, capacity, and API-equivalent cost arithmetic.
//
//   hardware            = gpu_count * unit_price
//   electricity/month   = gpu_count * accounting_power[kW] * H * rate
//   local(t)            = hardware + electricity/month * t
//   capacity/month (Q)  = throughput * H * 3600
//   api/month           = Q * ((1 - s) * input + s * output) / 1e6
//   api(t)              = api/month * t
//
// where H = hours_per_day * days_per_month and s is the output share. All
// results are exact at micro-dollar (micro-token) resolution: each formula
// is evaluated as one 128-bit integer product and rounded once.

#include <cstdint>
#include <optional>

#include "tco/catalog.hpp"
#include "tco/fixed.hpp"
#include "tco/fraction.hpp"

namespace tco {

struct WorkloadProfile {
  Decimal hours_per_day = Decimal::from_units(8);
  Decimal days_per_month = Decimal::from_units(22);
  Money electricity_rate = Money::parse("0.15");  // USD per kWh
  Fraction output_share{2, 3};
  std::optional<Tokens> demand;  // absent: demand equals capacity

  friend bool operator==(const WorkloadProfile&,
                         const WorkloadProfile&) = default;
};

/// 8 h/day, 22 days/month, $0.15/kWh, output share 2/3, no demand cap.
inline WorkloadProfile paper_workload() { return {}; }

/// Throws DomainError naming the field when any knob is out of range:
/// hours_per_day in (0, 24], days_per_month in (0, 31], rate >= 0,
/// output_share in [0, 1], demand >= 0.
void validate_workload(const WorkloadProfile& w);

/// H_operation, hours per month.
Decimal operating_hours(const WorkloadProfile& w);

Money hardware_cost(const DeploymentSpec& spec);

Money electricity_monthly(const DeploymentSpec& spec, const WorkloadProfile& w);

/// Throws DomainError when months < 0.
Money local_cumulative_cost(const DeploymentSpec& spec,
                            const WorkloadProfile& w, Months months);

Tokens monthly_capacity(const DeploymentSpec& spec, const WorkloadProfile& w);

/// Blended spend for `tokens` per month; uses accounting_output_price.
Money api_monthly_cost(const ApiOffering& offering, Tokens tokens,
                       const Fraction& output_share);

/// Throws DomainError when months < 0.
Money api_cumulative_cost(const ApiOffering& offering, Tokens tokens,
                          const Fraction& output_share, Months months);

/// Number of identical deployments needed to serve `demand` tokens a month:
/// 0 for zero demand, otherwise ceil(demand / capacity). Throws DomainError
/// for negative demand, or positive demand against zero capacity.
std::int64_t required_replicas(const DeploymentSpec& spec,
                               const WorkloadProfile& w, Tokens demand);

}  // namespace tco
