#include "cli.hpp"

#include <pthread.h>

#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tco/breakeven.hpp"
#include "tco/catalog.hpp"
#include "tco/errors.hpp"
#include "tco/reporting.hpp"
#include "tco/service.hpp"

namespace tco::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  bool builtin = false;
  std::string catalog_path;
  std::string hours_per_day;
  std::string days_per_month;
  std::string electricity_rate;
  std::string output_share;
  std::string demand;
  std::string format = "paper";
  std::string precision = "paper";
  std::string columns;
};

struct ScenarioOptions {
  std::string model;
  std::string api;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_flag("--builtin", o.builtin, "Use the built-in reference catalog");
  cmd->add_option("--catalog", o.catalog_path,
                  std::string("Catalog JSON file (default: $") + kCatalogEnv +
                      ", else the built-in catalog)");
  cmd->add_option("--hours-per-day", o.hours_per_day,
                  "Operating hours per day, (0, 24] (default 8)");
  cmd->add_option("--days-per-month", o.days_per_month,
                  "Operating days per month, (0, 31] (default 22)");
  cmd->add_option("--electricity-rate", o.electricity_rate,
                  "USD per kWh (default 0.15)");
  cmd->add_option("--output-share", o.output_share,
                  "Fraction of tokens that are output, e.g. 2/3 or 0.5 "
                  "(default 2/3)");
  cmd->add_option("--demand", o.demand,
                  "Tokens per month to serve (default: full capacity)");
  cmd->add_option("--format", o.format, "paper | csv | json")
      ->check(CLI::IsMember({"paper", "csv", "json"}));
  cmd->add_option("--precision", o.precision, "paper | full")
      ->check(CLI::IsMember({"paper", "full"}));
  cmd->add_option("--columns", o.columns,
                  "Comma-separated column keys to keep (paper/csv formats)");
}

void add_scenario(CLI::App* cmd, ScenarioOptions& o) {
  cmd->add_option("--model", o.model, "Deployment id")->required();
  cmd->add_option("--api", o.api, "API offering id")->required();
}

template <typename T>
T parse_value(const std::string& text, const char* flag) {
  try {
    return T::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not a number: '" + text + "'");
  }
}

WorkloadProfile workload_from(const CommonOptions& o) {
  WorkloadProfile w = paper_workload();
  if (!o.hours_per_day.empty())
    w.hours_per_day = parse_value<Decimal>(o.hours_per_day, "--hours-per-day");
  if (!o.days_per_month.empty())
    w.days_per_month = parse_value<Decimal>(o.days_per_month, "--days-per-month");
  if (!o.electricity_rate.empty())
    w.electricity_rate = parse_value<Money>(o.electricity_rate, "--electricity-rate");
  if (!o.output_share.empty())
    w.output_share = parse_value<Fraction>(o.output_share, "--output-share");
  if (!o.demand.empty()) w.demand = parse_value<Tokens>(o.demand, "--demand");
  try {
    validate_workload(w);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid workload: ") + e.what());
  }
  return w;
}

RenderSpec render_spec_from(const CommonOptions& o) {
  RenderSpec r;
  r.format = o.format == "csv"    ? OutputFormat::Csv
             : o.format == "json" ? OutputFormat::Json
                                  : OutputFormat::Plain;
  r.rounding = o.precision == "full" ? Rounding::Full : Rounding::Paper;
  std::stringstream ss(o.columns);
  for (std::string col; std::getline(ss, col, ',');)
    if (!col.empty()) r.columns.push_back(col);
  return r;
}

Catalog catalog_from(const CommonOptions& o,
                     const std::string& positional = {}) {
  if (o.builtin && (!o.catalog_path.empty() || !positional.empty()))
    throw UsageError("--builtin conflicts with a catalog path");
  if (o.builtin) return builtin_paper_catalog();
  std::string path = !positional.empty() ? positional : o.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kCatalogEnv); env && *env) path = env;
  }
  if (path.empty()) return builtin_paper_catalog();
  return load_catalog_file(path);
}

const DeploymentSpec& find_model(const Catalog& c, const std::string& id) {
  if (const auto* d = c.find_deployment(id)) return *d;
  throw DomainError("unknown model id '" + id + "'", "model");
}

const ApiOffering& find_api(const Catalog& c, const std::string& id) {
  if (const auto* o = c.find_offering(id)) return *o;
  throw DomainError("unknown api id '" + id + "'", "api");
}

std::vector<Fraction> linspace(const std::string& from, const std::string& to,
                               int steps) {
  const Fraction a = parse_value<Fraction>(from, "--from");
  const Fraction b = parse_value<Fraction>(to, "--to");
  if (steps < 1) throw UsageError("--steps must be >= 1");
  if (steps == 1) return {a};
  std::vector<Fraction> grid;
  const std::int64_t lo = a.to_micro();
  const std::int64_t hi = b.to_micro();
  for (int i = 0; i < steps; ++i) {
    if (i == 0) {
      grid.push_back(a);
    } else if (i == steps - 1) {
      grid.push_back(b);
    } else {
      grid.emplace_back(lo * (steps - 1 - i) + hi * i,
                        static_cast<std::int64_t>(steps - 1) * kMicro);
    }
  }
  return grid;
}

std::vector<Fraction> explicit_grid(const std::string& list) {
  std::vector<Fraction> grid;
  std::stringstream ss(list);
  for (std::string v; std::getline(ss, v, ',');)
    grid.push_back(parse_value<Fraction>(v, "--grid"));
  return grid;
}

void print_header(std::ostream& out, const RenderSpec& r,
                  const WorkloadProfile& w) {
  if (r.format == OutputFormat::Plain) out << workload_header(w);
}

// Serves until SIGINT or SIGTERM. The signals are blocked in every server
// thread and consumed by a watcher thread with sigwait().
void serve_until_signal(HttpServer& server) {
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &stop_signals, &previous);

  std::thread watcher([&] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    server.stop();
  });
  server.listen();
  // listen() can also return on its own; wake the watcher if so.
  pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Cost-of-ownership and break-even analysis for self-hosted LLM "
      "deployments versus commercial APIs.\n"
      "Workload defaults: 8 h/day, 22 days/month, $0.15/kWh, output share "
      "2/3.\n"
      "Set $" + std::string(kCatalogEnv) +
          " to use a catalog file by default.",
      "tco"};
  app.require_subcommand(1);

  CommonOptions common;
  ScenarioOptions scenario;

  auto* catalog_cmd = app.add_subcommand("catalog", "List and validate a catalog");
  std::string catalog_pos;
  bool validate_only = false;
  catalog_cmd->add_option("path", catalog_pos, "Catalog JSON file");
  catalog_cmd->add_flag("--validate", validate_only, "Print the validation report only");
  add_common(catalog_cmd, common);

  auto* capacity_cmd =
      app.add_subcommand("capacity", "Hardware, electricity, and token capacity per deployment");
  add_common(capacity_cmd, common);

  auto* breakeven_cmd = app.add_subcommand("breakeven", "Solve one deployment/API scenario");
  add_common(breakeven_cmd, common);
  add_scenario(breakeven_cmd, scenario);

  auto* matrix_cmd = app.add_subcommand("matrix", "Break-even matrix for every deployment/API pair");
  add_common(matrix_cmd, common);

  auto* curves_cmd = app.add_subcommand("curves", "Cumulative cost curves for one scenario");
  add_common(curves_cmd, common);
  add_scenario(curves_cmd, scenario);
  std::string horizon = "12";
  std::string step = "1";
  curves_cmd->add_option("--horizon", horizon, "Months to cover (default 12)");
  curves_cmd->add_option("--step", step, "Sampling step in months (default 1)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Vary one parameter and re-solve a scenario");
  add_common(sweep_cmd, common);
  add_scenario(sweep_cmd, scenario);
  std::string param;
  std::string from;
  std::string to;
  int steps = 0;
  std::string grid_list;
  std::vector<std::string> param_names;
  for (int i = 0; i <= static_cast<int>(SweepParameter::Throughput); ++i)
    param_names.emplace_back(sweep_parameter_name(static_cast<SweepParameter>(i)));
  sweep_cmd->add_option("--param", param, "Parameter to vary")
      ->required()
      ->check(CLI::IsMember(param_names));
  auto* from_opt = sweep_cmd->add_option("--from", from, "First grid value");
  auto* to_opt = sweep_cmd->add_option("--to", to, "Last grid value");
  auto* steps_opt = sweep_cmd->add_option("--steps", steps, "Number of evenly spaced grid values");
  auto* grid_opt = sweep_cmd->add_option("--grid", grid_list,
                                         "Explicit comma-separated grid (e.g. 0,2/3)");
  from_opt->needs(to_opt, steps_opt)->excludes(grid_opt);
  to_opt->needs(from_opt);
  steps_opt->needs(from_opt);

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  add_common(serve_cmd, common);
  std::string host = "127.0.0.1";
  int port = 8080;
  std::vector<std::string> cors;
  serve_cmd->add_option("--host", host, "Listen address (default 127.0.0.1)");
  serve_cmd->add_option("--port", port, "Listen port (default 8080; 0 picks one)");
  serve_cmd->add_option("--cors-origin", cors,
                        "Allowed CORS origin, repeatable (default: any)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const RenderSpec r = render_spec_from(common);
    const WorkloadProfile w = workload_from(common);

    if (catalog_cmd->parsed()) {
      Catalog cat;
      try {
        cat = catalog_from(common, catalog_pos);
      } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& v : e.violations())
          err << "  " << v.record_id << ": " << v.rule << "\n";
        if (validate_only) out << e.violations().size() << " violations\n";
        return kDomainError;
      }
      const auto violations = validate_catalog(cat);
      if (!validate_only) out << render_catalog(cat, r);
      if (validate_only || r.format == OutputFormat::Plain)
        out << violations.size() << " violations\n";
      return violations.empty() ? kOk : kDomainError;
    }

    const Catalog cat = catalog_from(common);

    if (capacity_cmd->parsed()) {
      print_header(out, r, w);
      out << render_capacity_table(cat, w, r);
    } else if (breakeven_cmd->parsed()) {
      const auto& spec = find_model(cat, scenario.model);
      const auto& offering = find_api(cat, scenario.api);
      const BreakEvenResult res = solve_break_even(spec, offering, w);
      print_header(out, r, w);
      out << render_breakeven(spec, offering, w, res, r);
    } else if (matrix_cmd->parsed()) {
      print_header(out, r, w);
      out << render_breakeven_matrix(break_even_matrix(cat, w), r);
    } else if (curves_cmd->parsed()) {
      const auto& spec = find_model(cat, scenario.model);
      const auto& offering = find_api(cat, scenario.api);
      const auto series =
          cost_curves(spec, offering, w, parse_value<Months>(horizon, "--horizon"),
                      parse_value<Months>(step, "--step"));
      print_header(out, r, w);
      out << render_curves(series, r);
    } else if (sweep_cmd->parsed()) {
      const auto& spec = find_model(cat, scenario.model);
      const auto& offering = find_api(cat, scenario.api);
      std::vector<Fraction> grid;
      if (!grid_list.empty())
        grid = explicit_grid(grid_list);
      else if (!from.empty())
        grid = linspace(from, to, steps);
      else
        throw UsageError("sweep needs --from/--to/--steps or --grid");
      const auto parameter = *sweep_parameter_from_name(param);
      print_header(out, r, w);
      out << render_sweep(parameter, sweep(spec, offering, w, parameter, grid), r);
    } else if (serve_cmd->parsed()) {
      ServiceOptions opts;
      if (!cors.empty()) opts.cors_origins = cors;
      const Service service(cat, opts);
      HttpServer server(service);
      const int bound = server.bind(host, port);
      err << "listening on http://" << host << ":" << bound << "\n";
      serve_until_signal(server);
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace tco::cli
