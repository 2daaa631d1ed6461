#include "documents.hpp"

#include <cmath>

#include "tco/errors.hpp"

namespace tco::documents {

namespace {

std::string money(Money m, Rounding r) {
  return r == Rounding::Full ? m.str(6) : m.str(2);
}

std::string tokens(Tokens q, Rounding r) {
  return r == Rounding::Full ? q.trimmed() : q.str(0);
}

ojson months(double t, Rounding r) {
  if (r == Rounding::Full) return t;
  const long double scale = t < 3.0 ? 100.0L : 10.0L;
  return static_cast<double>(std::round(static_cast<long double>(t) * scale) /
                             scale);
}

template <typename T>
ojson optional_or_null(const std::optional<T>& v, auto&& fn) {
  return v ? ojson(fn(*v)) : ojson(nullptr);
}

}  // namespace

ojson workload(const WorkloadProfile& w) {
  using json_io::decimal_to_json_number;
  return {
      {"hours_per_day", decimal_to_json_number(w.hours_per_day)},
      {"days_per_month", decimal_to_json_number(w.days_per_month)},
      {"operating_hours", decimal_to_json_number(operating_hours(w))},
      {"electricity_rate", json_io::money_string(w.electricity_rate)},
      {"output_share", w.output_share.str()},
      {"demand", w.demand ? ojson(w.demand->trimmed()) : ojson(nullptr)},
  };
}

ojson gap(const PerformanceGap& g) {
  ojson per = ojson::object();
  for (const auto& [b, d] : g.per_benchmark)
    per[std::string(benchmark_name(b))] = json_io::decimal_to_json_number(d);
  return {{"per_benchmark", per}, {"mean_delta", g.mean_delta()}};
}

ojson result(const BreakEvenResult& r, Rounding rounding) {
  return {
      {"deployment_id", r.deployment_id},
      {"offering_id", r.offering_id},
      {"status", std::string(status_name(r.status))},
      {"t_star", optional_or_null(r.t_star,
                                  [&](double t) { return months(t, rounding); })},
      {"tier", optional_or_null(r.tier,
                                [](DecisionTier t) {
                                  return std::string(tier_name(t));
                                })},
      {"monthly_api_cost", money(r.monthly_api_cost, rounding)},
      {"monthly_electricity", money(r.monthly_electricity, rounding)},
      {"hardware", money(r.hardware, rounding)},
      {"capacity", tokens(r.capacity, rounding)},
      {"replicas", r.replicas},
      {"degenerate", r.degenerate},
      {"gap", optional_or_null(r.gap,
                               [](const PerformanceGap& g) { return gap(g); })},
  };
}

ojson matrix(const ScenarioMatrix& m, Rounding rounding) {
  ojson rows = ojson::array();
  for (const auto& d : m.deployments) rows.push_back({{"id", d.id}, {"name", d.name}});
  ojson cols = ojson::array();
  for (const auto& o : m.offerings) cols.push_back({{"id", o.id}, {"name", o.name}});
  ojson cells = ojson::array();
  for (const auto& c : m.cells) cells.push_back(result(c, rounding));
  ojson ranges = ojson::array();
  for (std::size_t i = 0; i < m.row_ranges.size(); ++i) {
    const auto& rr = m.row_ranges[i];
    ranges.push_back({
        {"deployment_id", m.deployments[i].id},
        {"min", rr ? months(rr->first, rounding) : ojson(nullptr)},
        {"max", rr ? months(rr->second, rounding) : ojson(nullptr)},
    });
  }
  return {
      {"workload", workload(m.workload)},
      {"deployments", rows},
      {"offerings", cols},
      {"cells", cells},
      {"row_ranges", ranges},
  };
}

ojson curves(const CostCurveSeries& s, Rounding rounding) {
  ojson points = ojson::array();
  for (const auto& p : s.points) {
    points.push_back({
        {"t", json_io::decimal_to_json_number(Decimal::from_micro(p.t.micro()))},
        {"local_cost", money(p.local_cost, rounding)},
        {"api_cost", money(p.api_cost, rounding)},
    });
  }
  return {
      {"horizon", json_io::decimal_to_json_number(Decimal::from_micro(s.horizon.micro()))},
      {"step", json_io::decimal_to_json_number(Decimal::from_micro(s.step.micro()))},
      {"points", points},
      {"break_even_marker", s.break_even_marker ? ojson(*s.break_even_marker)
                                                : ojson(nullptr)},
  };
}

ojson sweep(SweepParameter p, const std::vector<SweepPoint>& points,
            Rounding rounding) {
  ojson out = ojson::array();
  for (const auto& pt : points)
    out.push_back({{"value", pt.value.str()}, {"result", result(pt.result, rounding)}});
  return {{"parameter", std::string(sweep_parameter_name(p))}, {"points", out}};
}

WorkloadProfile apply_workload_overrides(WorkloadProfile base,
                                         const ojson& overrides) {
  if (overrides.is_null()) return base;
  if (!overrides.is_object())
    throw DomainError("workload must be an object", "workload");
  for (const auto& [key, value] : overrides.items()) {
    const std::string field = "workload." + key;
    try {
      if (key == "hours_per_day") {
        base.hours_per_day = json_io::fixed_from_json<Decimal>(value);
      } else if (key == "days_per_month") {
        base.days_per_month = json_io::fixed_from_json<Decimal>(value);
      } else if (key == "electricity_rate") {
        base.electricity_rate = json_io::fixed_from_json<Money>(value);
      } else if (key == "output_share") {
        base.output_share =
            value.is_string()
                ? Fraction::parse(value.get<std::string>())
                : Fraction::from_micro(
                      json_io::decimal_from_json_number(value).micro());
      } else if (key == "demand") {
        if (value.is_null())
          base.demand.reset();
        else
          base.demand = json_io::fixed_from_json<Tokens>(value);
      } else if (key == "operating_hours") {
        continue;  // derived; echoed back by responses
      } else {
        throw DomainError("unknown workload field '" + key + "'", field);
      }
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception& e) {
      throw DomainError("invalid value for " + key + ": " + e.what(), field);
    }
  }
  try {
    validate_workload(base);
  } catch (const DomainError& e) {
    throw DomainError(e.what(), "workload." + e.field());
  }
  return base;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace tco::documents
