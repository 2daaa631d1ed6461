#pragma once

// Stateless HTTP facade over the engine.
//
//   GET  /healthz            liveness + catalog schema version
//   GET  /api/v1/catalog     the loaded catalog, in catalog file format
//   POST /api/v1/breakeven   {model_id, api_id, workload?, curve?}
//   POST /api/v1/matrix      {workload?}
//   POST /api/v1/sweep       {model_id, api_id, workload?, parameter, grid}
//
// Workload overrides are partial; omitted fields take the default workload
// and every response echoes the effective one. Money is serialized as
// decimal strings at micro resolution. Errors carry
// {"error": {"code", "message", "field"}}: 400 for bad input, 422 for a
// degenerate scenario (the result is still included).

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tco/catalog.hpp"

namespace tco {

struct HttpRequest {
  std::string method;
  std::string path;
  std::string body;
  std::optional<std::string> origin;  // Origin header, if any
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json; charset=utf-8";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
};

struct ServiceOptions {
  /// Origins allowed by CORS. "*" allows any origin.
  std::vector<std::string> cors_origins = {"*"};
  /// Curve sampling when a breakeven request names none.
  double default_horizon_months = 24.0;
  double default_step_months = 1.0;
};

class Service {
 public:
  explicit Service(Catalog catalog, ServiceOptions options = {});

  /// Pure function of the request and the loaded catalog.
  HttpResponse handle(const HttpRequest& request) const;

  const Catalog& catalog() const { return catalog_; }

 private:
  HttpResponse breakeven(const std::string& body) const;
  HttpResponse matrix(const std::string& body) const;
  HttpResponse sweep(const std::string& body) const;
  void add_cors(const HttpRequest& request, HttpResponse& response) const;

  Catalog catalog_;
  ServiceOptions options_;
};

/// Serves a Service over HTTP/1.1 on a background thread pool.
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds `host:port` (port 0 picks a free port) and returns the bound
  /// port. Throws std::runtime_error when binding fails.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tco
