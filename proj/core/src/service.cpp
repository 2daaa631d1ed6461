#include "tco/service.hpp"

#include <algorithm>
#include <stdexcept>

#include "documents.hpp"
#include "httplib.h"
#include "tco/breakeven.hpp"
#include "tco/errors.hpp"

namespace tco {

namespace {

using documents::ojson;

struct ApiError {
  int status;
  std::string code;
  std::string message;
  std::string field;
};

HttpResponse json_response(int status, const ojson& doc) {
  HttpResponse r;
  r.status = status;
  r.body = documents::dump(doc);
  return r;
}

ojson error_doc(const ApiError& e) {
  return {{"error",
           {{"code", e.code},
            {"message", e.message},
            {"field", e.field.empty() ? ojson(nullptr) : ojson(e.field)}}}};
}

HttpResponse error_response(const ApiError& e) {
  return json_response(e.status, error_doc(e));
}

ojson parse_body(const std::string& body) {
  if (body.find_first_not_of(" \t\r\n") == std::string::npos)
    return ojson::object();
  try {
    ojson doc = ojson::parse(body);
    if (!doc.is_object())
      throw ApiError{400, "invalid_body", "request body must be a JSON object", ""};
    return doc;
  } catch (const ojson::parse_error& e) {
    throw ApiError{400, "invalid_body", e.what(), ""};
  }
}

WorkloadProfile workload_of(const ojson& body) {
  auto it = body.find("workload");
  if (it == body.end()) return paper_workload();
  try {
    return documents::apply_workload_overrides(paper_workload(), *it);
  } catch (const DomainError& e) {
    throw ApiError{400, "invalid_workload", e.what(), e.field()};
  }
}

std::string string_member(const ojson& body, const char* key,
                          const char* missing_code) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string())
    throw ApiError{400, missing_code,
                   std::string(key) + " must be a string", key};
  return it->get<std::string>();
}

const DeploymentSpec& deployment_of(const Catalog& cat, const ojson& body) {
  const std::string id = string_member(body, "model_id", "unknown_model");
  const DeploymentSpec* d = cat.find_deployment(id);
  if (!d) throw ApiError{400, "unknown_model", "unknown model id '" + id + "'", "model_id"};
  return *d;
}

const ApiOffering& offering_of(const Catalog& cat, const ojson& body) {
  const std::string id = string_member(body, "api_id", "unknown_api");
  const ApiOffering* o = cat.find_offering(id);
  if (!o) throw ApiError{400, "unknown_api", "unknown api id '" + id + "'", "api_id"};
  return *o;
}

Months months_member(const ojson& obj, const char* key, double fallback) {
  auto it = obj.find(key);
  try {
    if (it == obj.end() || it->is_null()) return Months::from_double(fallback);
    return json_io::fixed_from_json<Months>(*it);
  } catch (const std::exception& e) {
    throw ApiError{400, "invalid_curve", e.what(), std::string("curve.") + key};
  }
}

Fraction grid_value(const ojson& v, std::size_t index) {
  try {
    if (v.is_string()) return Fraction::parse(v.get<std::string>());
    return Fraction::from_micro(json_io::decimal_from_json_number(v).micro());
  } catch (const std::exception& e) {
    throw ApiError{400, "invalid_grid", e.what(),
                   "grid[" + std::to_string(index) + "]"};
  }
}

}  // namespace

Service::Service(Catalog catalog, ServiceOptions options)
    : catalog_(std::move(catalog)), options_(std::move(options)) {}

HttpResponse Service::handle(const HttpRequest& request) const {
  HttpResponse response;
  try {
    const std::string& m = request.method;
    const std::string& p = request.path;
    if (m == "OPTIONS") {
      response.status = 204;
      response.content_type.clear();
    } else if (p == "/healthz") {
      if (m != "GET") throw ApiError{405, "method_not_allowed", "use GET", ""};
      response = json_response(
          200, {{"status", "ok"}, {"schema_version", catalog_.schema_version}});
    } else if (p == "/api/v1/catalog") {
      if (m != "GET") throw ApiError{405, "method_not_allowed", "use GET", ""};
      response.body = dump_catalog(catalog_);
    } else if (p == "/api/v1/breakeven") {
      if (m != "POST") throw ApiError{405, "method_not_allowed", "use POST", ""};
      response = breakeven(request.body);
    } else if (p == "/api/v1/matrix") {
      if (m != "POST") throw ApiError{405, "method_not_allowed", "use POST", ""};
      response = matrix(request.body);
    } else if (p == "/api/v1/sweep") {
      if (m != "POST") throw ApiError{405, "method_not_allowed", "use POST", ""};
      response = sweep(request.body);
    } else {
      throw ApiError{404, "not_found", "no route for " + p, ""};
    }
  } catch (const ApiError& e) {
    response = error_response(e);
  } catch (const DomainError& e) {
    response = error_response({400, "invalid_request", e.what(), e.field()});
  } catch (const std::exception& e) {
    response = error_response({500, "internal", e.what(), ""});
  }
  add_cors(request, response);
  return response;
}

HttpResponse Service::breakeven(const std::string& raw) const {
  const ojson body = parse_body(raw);
  const DeploymentSpec& spec = deployment_of(catalog_, body);
  const ApiOffering& offering = offering_of(catalog_, body);
  const WorkloadProfile w = workload_of(body);

  ojson curve_opts = ojson::object();
  if (auto it = body.find("curve"); it != body.end() && !it->is_null()) {
    if (!it->is_object())
      throw ApiError{400, "invalid_curve", "curve must be an object", "curve"};
    curve_opts = *it;
  }
  const Months horizon =
      months_member(curve_opts, "horizon", options_.default_horizon_months);
  const Months step =
      months_member(curve_opts, "step", options_.default_step_months);

  const BreakEvenResult result = solve_break_even(spec, offering, w);
  CostCurveSeries series;
  try {
    series = cost_curves(spec, offering, w, horizon, step);
  } catch (const DomainError& e) {
    throw ApiError{400, "invalid_curve", e.what(), "curve." + e.field()};
  }

  ojson doc = {{"workload", documents::workload(w)},
               {"result", documents::result(result, Rounding::Full)},
               {"curve", documents::curves(series, Rounding::Full)}};
  if (result.degenerate) {
    ojson err = error_doc({422, "degenerate_scenario",
                           "zero hardware and no positive monthly margin: the "
                           "cost curves never separate",
                           ""});
    err.update(doc);
    return json_response(422, err);
  }
  return json_response(200, doc);
}

HttpResponse Service::matrix(const std::string& raw) const {
  const ojson body = parse_body(raw);
  const WorkloadProfile w = workload_of(body);
  return json_response(
      200, documents::matrix(break_even_matrix(catalog_, w), Rounding::Full));
}

HttpResponse Service::sweep(const std::string& raw) const {
  const ojson body = parse_body(raw);
  const DeploymentSpec& spec = deployment_of(catalog_, body);
  const ApiOffering& offering = offering_of(catalog_, body);
  const WorkloadProfile w = workload_of(body);

  const std::string pname = string_member(body, "parameter", "unknown_parameter");
  const auto parameter = sweep_parameter_from_name(pname);
  if (!parameter)
    throw ApiError{400, "unknown_parameter",
                   "unknown sweep parameter '" + pname + "'", "parameter"};

  auto it = body.find("grid");
  if (it == body.end() || !it->is_array() || it->empty())
    throw ApiError{400, "invalid_grid", "grid must be a non-empty array", "grid"};
  std::vector<Fraction> grid;
  for (std::size_t i = 0; i < it->size(); ++i) grid.push_back(grid_value((*it)[i], i));

  std::vector<SweepPoint> points;
  try {
    points = tco::sweep(spec, offering, w, *parameter, grid);
  } catch (const DomainError& e) {
    throw ApiError{400, "invalid_grid", e.what(), "grid"};
  }
  ojson doc = documents::sweep(*parameter, points, Rounding::Full);
  doc["workload"] = documents::workload(w);
  return json_response(200, doc);
}

void Service::add_cors(const HttpRequest& request,
                       HttpResponse& response) const {
  const auto& allowed = options_.cors_origins;
  const bool any = std::find(allowed.begin(), allowed.end(), "*") != allowed.end();
  std::string value;
  if (any) {
    value = "*";
  } else if (request.origin &&
             std::find(allowed.begin(), allowed.end(), *request.origin) !=
                 allowed.end()) {
    value = *request.origin;
    response.headers.emplace_back("Vary", "Origin");
  }
  if (value.empty()) return;
  response.headers.emplace_back("Access-Control-Allow-Origin", value);
  response.headers.emplace_back("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
  response.headers.emplace_back("Access-Control-Allow-Headers", "Content-Type");
}

struct HttpServer::Impl {
  const Service& service;
  httplib::Server server;

  explicit Impl(const Service& s) : service(s) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      HttpRequest in{req.method, req.path, req.body, std::nullopt};
      if (req.has_header("Origin")) in.origin = req.get_header_value("Origin");
      const HttpResponse out = service.handle(in);
      res.status = out.status;
      for (const auto& [k, v] : out.headers) res.set_header(k, v);
      if (!out.content_type.empty()) res.set_content(out.body, out.content_type);
    };
    server.Get(".*", route);
    server.Post(".*", route);
    server.Options(".*", route);
  }
};

HttpServer::HttpServer(const Service& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0)
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace tco
