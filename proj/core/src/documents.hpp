#pragma once

// Structured-document (JSON) forms of the engine types. Shared by the
// reporting renderers and the HTTP service so both emit identical bytes.

#include <vector>

#include "json_io.hpp"
#include "tco/breakeven.hpp"
#include "tco/reporting.hpp"

namespace tco::documents {

using json_io::ojson;

ojson workload(const WorkloadProfile& w);
ojson gap(const PerformanceGap& g);
ojson result(const BreakEvenResult& r, Rounding rounding);
ojson matrix(const ScenarioMatrix& m, Rounding rounding);
ojson curves(const CostCurveSeries& s, Rounding rounding);
ojson sweep(SweepParameter p, const std::vector<SweepPoint>& points,
            Rounding rounding);

/// Applies a partial override object onto `base`. Accepted keys:
/// hours_per_day, days_per_month, electricity_rate, output_share, demand.
/// Throws DomainError naming the offending field.
WorkloadProfile apply_workload_overrides(WorkloadProfile base,
                                         const ojson& overrides);

std::string dump(const ojson& doc);

}  // namespace tco::documents
