#include "tco/reporting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "documents.hpp"

namespace tco {

namespace {

struct Column {
  std::string key;
  std::string title;
  bool right = true;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;

  void select(const std::vector<std::string>& keys) {
    if (keys.empty()) return;
    std::vector<std::size_t> idx;
    for (const auto& k : keys) {
      auto it = std::find_if(columns.begin(), columns.end(),
                             [&](const Column& c) { return c.key == k; });
      if (it == columns.end())
        throw std::invalid_argument("unknown column '" + k + "'");
      idx.push_back(static_cast<std::size_t>(it - columns.begin()));
    }
    std::vector<Column> cols;
    for (auto i : idx) cols.push_back(columns[i]);
    for (auto& row : rows) {
      std::vector<std::string> kept;
      for (auto i : idx) kept.push_back(row[i]);
      row = std::move(kept);
    }
    columns = std::move(cols);
  }

  std::string plain() const {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      width[c] = columns[c].title.size();
      for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](auto&& cell_of) {
      std::string out;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::string s = cell_of(c);
        const std::string pad(width[c] - s.size(), ' ');
        out += c == 0 ? "| " : " | ";
        out += columns[c].right ? pad + s : s + pad;
      }
      return out + " |\n";
    };
    std::string out = line([&](std::size_t c) { return columns[c].title; });
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out += "|";
      out += std::string(width[c] + 2, '-');
    }
    out += "|\n";
    for (const auto& row : rows) out += line([&](std::size_t c) { return row[c]; });
    return out;
  }

  std::string csv() const {
    std::string out;
    auto field = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    for (std::size_t c = 0; c < columns.size(); ++c)
      out += (c ? "," : "") + field(columns[c].key);
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out += (c ? "," : "") + field(row[c]);
      out += "\n";
    }
    return out;
  }

  std::string render(const RenderSpec& r) {
    select(r.columns);
    return r.format == OutputFormat::Csv ? csv() : plain();
  }
};

std::string money_text(Money m, Rounding r) {
  return r == Rounding::Full ? m.str(6) : m.str(2);
}

std::string dollars_text(Money m, Rounding r) {
  return "$" + money_text(m, r);
}

std::string months_text(double t, Rounding r) {
  return r == Rounding::Full ? double_str(t) : months_paper(t);
}

std::string optional_months(const BreakEvenResult& res, Rounding r) {
  if (!res.t_star) return "";
  if (res.status == BreakEvenStatus::Immediate && r == Rounding::Paper)
    return "0.0";
  return months_text(*res.t_star, r);
}

std::string tier_text(const BreakEvenResult& res) {
  return res.tier ? std::string(tier_name(*res.tier)) : "";
}

std::string gap_text(const BreakEvenResult& res, Rounding r) {
  if (!res.gap) return "";
  return r == Rounding::Full ? double_str(res.gap->mean_delta())
                             : res.gap->mean_str(2);
}

std::string tokens_text(Tokens q, Rounding r) {
  return r == Rounding::Full ? q.trimmed() : q.str(0);
}

std::vector<Column> result_columns() {
  return {{"status", "status"},
          {"t_star", "t_star"},
          {"tier", "tier"},
          {"monthly_api_cost", "monthly_api_cost"},
          {"monthly_electricity", "monthly_electricity"},
          {"hardware", "hardware"},
          {"capacity", "capacity"},
          {"replicas", "replicas"},
          {"mean_gap", "mean_gap"},
          {"degenerate", "degenerate"}};
}

std::vector<std::string> result_fields(const BreakEvenResult& res,
                                       Rounding r) {
  return {std::string(status_name(res.status)),
          optional_months(res, r),
          tier_text(res),
          money_text(res.monthly_api_cost, r),
          money_text(res.monthly_electricity, r),
          money_text(res.hardware, r),
          tokens_text(res.capacity, r),
          std::to_string(res.replicas),
          gap_text(res, r),
          res.degenerate ? "true" : "false"};
}

std::string range_text(const std::optional<std::pair<double, double>>& range,
                       Rounding r) {
  if (!range) return "never";
  return months_text(range->first, r) + "-" + months_text(range->second, r);
}

}  // namespace

std::string double_str(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string fixed_str(double v, int decimals) {
  long double scale = 1.0L;
  for (int i = 0; i < decimals; ++i) scale *= 10.0L;
  const long double rounded = std::round(static_cast<long double>(v) * scale);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << static_cast<double>(rounded / scale);
  return os.str();
}

std::string months_paper(double t_star) {
  return fixed_str(t_star, t_star < 3.0 ? 2 : 1);
}

std::string hardware_paper(Money m) {
  // Thousands to one decimal, trailing ".0" dropped.
  const int128 tenths = div_round(m.micro(), static_cast<int128>(100) * kMicro);
  std::string s = format_micro(static_cast<std::int64_t>(tenths) * 100000, 1);
  if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0) s.resize(s.size() - 2);
  return "$" + s + "k";
}

std::string tokens_paper(Tokens q) {
  const int128 tenths =
      div_round(q.micro(), static_cast<int128>(100'000) * kMicro);
  return format_micro(static_cast<std::int64_t>(tenths) * 100000, 1) + "M";
}

std::string gap_paper(const PerformanceGap& g) {
  std::string s = g.mean_str(2);
  if (s.front() != '-') s.insert(s.begin(), '+');
  return s + "%";
}

std::string cell_paper(const BreakEvenResult& r) {
  std::string s;
  switch (r.status) {
    case BreakEvenStatus::Never:
      s = "never";
      break;
    case BreakEvenStatus::Immediate:
      s = "0.0";
      break;
    case BreakEvenStatus::BreaksEven:
      s = months_paper(*r.t_star);
      break;
  }
  if (r.gap) s += " (" + gap_paper(*r.gap) + ")";
  return s;
}

std::string workload_header(const WorkloadProfile& w) {
  std::string s = "# workload: " + w.hours_per_day.trimmed() + " h/day x " +
                  w.days_per_month.trimmed() + " days/month = " +
                  operating_hours(w).trimmed() + " h/month, electricity $" +
                  json_io::money_string(w.electricity_rate) +
                  "/kWh, output share " + w.output_share.str();
  if (w.demand) s += ", demand " + w.demand->trimmed() + " tokens/month";
  return s + "\n";
}

std::string render_capacity_table(const Catalog& catalog,
                                  const WorkloadProfile& w,
                                  const RenderSpec& r) {
  validate_workload(w);
  if (r.format == OutputFormat::Json) {
    documents::ojson rows = documents::ojson::array();
    for (const auto& d : catalog.deployments) {
      rows.push_back({
          {"id", d.id},
          {"name", d.name},
          {"hardware_cost", money_text(hardware_cost(d), r.rounding)},
          {"monthly_electricity",
           money_text(electricity_monthly(d, w), r.rounding)},
          {"throughput", json_io::decimal_to_json_number(d.throughput)},
          {"monthly_capacity", tokens_text(monthly_capacity(d, w), r.rounding)},
      });
    }
    return documents::dump(
        {{"workload", documents::workload(w)}, {"deployments", rows}});
  }

  const bool paper_plain =
      r.format == OutputFormat::Plain && r.rounding == Rounding::Paper;
  Table t;
  t.columns = {{"model", "Model", false},
               {"hardware_cost", "Hardware Cost"},
               {"monthly_electricity", "Electricity/Month"},
               {"throughput", "Throughput (tok/s)"},
               {"monthly_capacity", "Token Capacity/Month"}};
  if (r.format == OutputFormat::Csv) {
    t.columns.insert(t.columns.begin(), Column{"id", "id", false});
    t.columns[1].key = "name";
  }
  for (const auto& d : catalog.deployments) {
    const Money hw = hardware_cost(d);
    const Money el = electricity_monthly(d, w);
    const Tokens q = monthly_capacity(d, w);
    std::vector<std::string> row;
    if (r.format == OutputFormat::Csv) row.push_back(d.id);
    row.push_back(d.name);
    row.push_back(paper_plain ? hardware_paper(hw) : money_text(hw, r.rounding));
    row.push_back(paper_plain ? dollars_text(el, r.rounding)
                              : money_text(el, r.rounding));
    row.push_back(d.throughput.trimmed());
    row.push_back(paper_plain ? tokens_paper(q) : tokens_text(q, r.rounding));
    t.rows.push_back(std::move(row));
  }
  return t.render(r);
}

std::string render_breakeven_matrix(const ScenarioMatrix& m,
                                    const RenderSpec& r) {
  if (r.format == OutputFormat::Json)
    return documents::dump(documents::matrix(m, r.rounding));

  Table t;
  if (r.format == OutputFormat::Csv) {
    t.columns = {{"deployment_id", "deployment_id"},
                 {"offering_id", "offering_id"}};
    for (auto& c : result_columns()) t.columns.push_back(c);
    for (std::size_t i = 0; i < m.deployments.size(); ++i) {
      for (std::size_t j = 0; j < m.offerings.size(); ++j) {
        const auto& cell = m.cell(i, j);
        std::vector<std::string> row = {cell.deployment_id, cell.offering_id};
        for (auto& f : result_fields(cell, r.rounding)) row.push_back(std::move(f));
        t.rows.push_back(std::move(row));
      }
    }
    return t.render(r);
  }

  t.columns.push_back({"model", "Open Model", false});
  for (const auto& o : m.offerings) t.columns.push_back({o.id, o.name});
  t.columns.push_back({"range", "Range"});
  for (std::size_t i = 0; i < m.deployments.size(); ++i) {
    std::vector<std::string> row = {m.deployments[i].name};
    for (std::size_t j = 0; j < m.offerings.size(); ++j) {
      const auto& cell = m.cell(i, j);
      if (r.rounding == Rounding::Paper) {
        row.push_back(cell_paper(cell));
      } else {
        std::string s = cell.t_star ? double_str(*cell.t_star) : "never";
        if (cell.gap) s += " (" + double_str(cell.gap->mean_delta()) + "%)";
        row.push_back(s);
      }
    }
    row.push_back(range_text(m.row_ranges[i], r.rounding));
    t.rows.push_back(std::move(row));
  }
  return t.render(r);
}

std::string render_curves(const CostCurveSeries& s, const RenderSpec& r) {
  if (r.format == OutputFormat::Json)
    return documents::dump(documents::curves(s, r.rounding));

  Table t;
  t.columns = {{"t", "t"}, {"local_cost", "local_cost"}, {"api_cost", "api_cost"}};
  for (const auto& p : s.points)
    t.rows.push_back({p.t.trimmed(), money_text(p.local_cost, r.rounding),
                      money_text(p.api_cost, r.rounding)});
  std::string out = t.render(r);
  if (s.break_even_marker) {
    const std::string at = r.rounding == Rounding::Full
                               ? double_str(*s.break_even_marker)
                               : fixed_str(*s.break_even_marker, 3);
    out += r.format == OutputFormat::Csv ? "break_even," + at + "\n"
                                         : "break-even at " + at + " months\n";
  }
  return out;
}

std::string render_sweep(SweepParameter parameter,
                         const std::vector<SweepPoint>& points,
                         const RenderSpec& r) {
  if (r.format == OutputFormat::Json)
    return documents::dump(documents::sweep(parameter, points, r.rounding));
  Table t;
  const std::string name(sweep_parameter_name(parameter));
  t.columns = {{name, name}};
  for (auto& c : result_columns()) t.columns.push_back(c);
  for (const auto& p : points) {
    std::vector<std::string> row = {p.value.str()};
    for (auto& f : result_fields(p.result, r.rounding)) row.push_back(std::move(f));
    t.rows.push_back(std::move(row));
  }
  return t.render(r);
}

std::string render_breakeven(const DeploymentSpec& spec,
                             const ApiOffering& offering,
                             const WorkloadProfile& w,
                             const BreakEvenResult& res, const RenderSpec& r) {
  if (r.format == OutputFormat::Json) {
    return documents::dump({{"workload", documents::workload(w)},
                            {"result", documents::result(res, r.rounding)}});
  }
  if (r.format == OutputFormat::Csv) {
    Table t;
    t.columns = {{"deployment_id", "deployment_id"}, {"offering_id", "offering_id"}};
    for (auto& c : result_columns()) t.columns.push_back(c);
    std::vector<std::string> row = {res.deployment_id, res.offering_id};
    for (auto& f : result_fields(res, r.rounding)) row.push_back(std::move(f));
    t.rows.push_back(std::move(row));
    return t.render(r);
  }

  std::ostringstream os;
  os << "scenario:            " << spec.name << " (";
  if (res.replicas != 1) os << res.replicas << " replicas of ";
  os << spec.gpu_count << " x " << spec.gpu.name << ") vs " << offering.name
     << "\n";
  os << "hardware:            " << dollars_text(res.hardware, r.rounding) << "\n";
  os << "electricity/month:   " << dollars_text(res.monthly_electricity, r.rounding)
     << "\n";
  os << "api spend/month:     " << dollars_text(res.monthly_api_cost, r.rounding)
     << "\n";
  os << "tokens/month:        " << res.capacity.trimmed() << "\n";
  os << "status:              " << status_name(res.status)
     << (res.degenerate ? " (zero hardware, no positive margin)" : "") << "\n";
  if (res.t_star) {
    os << "break-even months:   " << optional_months(res, r.rounding);
    if (r.rounding == Rounding::Paper) os << " (" << double_str(*res.t_star) << ")";
    os << "\n";
    os << "tier:                " << tier_label(*res.tier) << "\n";
  }
  if (res.gap) {
    os << "performance gap:     "
       << (r.rounding == Rounding::Paper ? gap_paper(*res.gap)
                                         : double_str(res.gap->mean_delta()) + "%");
    for (const auto& [b, d] : res.gap->per_benchmark)
      os << " " << benchmark_name(b) << " " << (d.micro() >= 0 ? "+" : "")
         << d.trimmed();
    os << "\n";
  }
  return os.str();
}

std::string render_catalog(const Catalog& catalog, const RenderSpec& r) {
  if (r.format == OutputFormat::Json) return dump_catalog(catalog);

  Table t;
  t.columns = {{"kind", "kind", false},
               {"id", "id", false},
               {"name", "name", false},
               {"detail", "detail", false}};
  for (const auto& g : catalog.gpus)
    t.rows.push_back({"gpu", g.id, g.name,
                      g.vram.trimmed() + " GB, " + g.rated_power.trimmed() +
                          " W rated / " + g.accounting_power.trimmed() +
                          " W accounting, $" +
                          json_io::money_string(g.unit_price)});
  for (const auto& d : catalog.deployments)
    t.rows.push_back({"deployment", d.id, d.name,
                      std::to_string(d.gpu_count) + " x " + d.gpu.id + ", " +
                          d.throughput.trimmed() + " tok/s, " +
                          d.vram_required.trimmed() + " GB"});
  for (const auto& o : catalog.offerings) {
    std::string detail = "$" + json_io::money_string(o.input_price) + " in / $" +
                         json_io::money_string(o.output_price) + " out";
    if (o.accounting_output_price != o.output_price)
      detail += " ($" + json_io::money_string(o.accounting_output_price) +
                " accounting)";
    t.rows.push_back({"offering", o.id, o.name, detail + " per 1M"});
  }
  std::string out = t.render(r);
  if (r.format == OutputFormat::Plain) {
    out += std::to_string(catalog.gpus.size()) + " gpus, " +
           std::to_string(catalog.deployments.size()) + " deployments, " +
           std::to_string(catalog.offerings.size()) + " offerings\n";
  }
  return out;
}

}  // namespace tco
