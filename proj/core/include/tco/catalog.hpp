#pragma once

// Data model for accelerators, open-model deployments, and commercial API
// offerings, plus loading, validation, and the built-in reference dataset.
//
// INVARIANTS (checked by validate_catalog):
//   GpuSku         vram, rated_power, accounting_power > 0; unit_price >= 0
//   DeploymentSpec gpu_count >= 1; throughput > 0;
//                  total_params >= active_params > 0;
//                  gpu_count * gpu.vram >= vram_required
//   ApiOffering    all prices >= 0
//   scores         every present score within [0, 100]
//   Catalog        ids unique per collection; every gpu_sku resolves
//
// A Catalog is immutable once loaded and may be shared across threads.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tco/errors.hpp"
#include "tco/fixed.hpp"

namespace tco {

enum class Benchmark { Gpqa, Math500, LiveCodeBench, MmluPro };

inline constexpr std::array<Benchmark, 4> kAllBenchmarks = {
    Benchmark::Gpqa, Benchmark::Math500, Benchmark::LiveCodeBench,
    Benchmark::MmluPro};

std::string_view benchmark_name(Benchmark b);
std::optional<Benchmark> benchmark_from_name(std::string_view name);

/// Percentage points per benchmark. Missing keys mean "not reported".
using BenchmarkScores = std::map<Benchmark, Decimal>;

enum class SizeClass { Large, Medium, Small };

std::string_view size_class_name(SizeClass c);
std::optional<SizeClass> size_class_from_name(std::string_view name);

struct GpuSku {
  std::string id;
  std::string name;
  Decimal vram;              // GB
  Decimal rated_power;       // W, as listed on the spec sheet
  Decimal accounting_power;  // W, used by the electricity arithmetic
  Money unit_price;

  friend bool operator==(const GpuSku&, const GpuSku&) = default;
};

struct DeploymentSpec {
  std::string id;
  std::string name;
  SizeClass size_class = SizeClass::Small;
  bool is_moe = false;
  Decimal total_params;   // billions
  Decimal active_params;  // billions
  Decimal vram_required;  // GB
  GpuSku gpu;             // resolved copy of the referenced SKU
  std::int64_t gpu_count = 0;
  Decimal throughput;  // tokens/s
  BenchmarkScores scores;

  friend bool operator==(const DeploymentSpec&,
                         const DeploymentSpec&) = default;
};

struct ApiOffering {
  std::string id;
  std::string provider;
  std::string name;
  Money input_price;              // per 1M tokens
  Money output_price;             // per 1M tokens, as listed
  Money accounting_output_price;  // per 1M tokens, used in arithmetic
  BenchmarkScores scores;

  friend bool operator==(const ApiOffering&, const ApiOffering&) = default;
};

struct Catalog {
  int schema_version = 1;
  std::vector<GpuSku> gpus;
  std::vector<DeploymentSpec> deployments;
  std::vector<ApiOffering> offerings;

  const GpuSku* find_gpu(std::string_view id) const;
  const DeploymentSpec* find_deployment(std::string_view id) const;
  const ApiOffering* find_offering(std::string_view id) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

inline constexpr int kSchemaVersion = 1;

/// Parses a catalog JSON document. Loading is all-or-nothing: throws
/// CatalogError (Parse, Reference, or Constraint) rather than returning a
/// partial catalog.
Catalog load_catalog(std::string_view document);
Catalog load_catalog_file(const std::string& path);

/// Serializes to the catalog file format (pretty-printed, two-space indent).
std::string dump_catalog(const Catalog& catalog);

/// Every invariant violation, in catalog order. Empty iff the catalog is
/// valid.
std::vector<Violation> validate_catalog(const Catalog& catalog);

/// The nine deployments, five offerings, and two GPUs from the reference
/// study, with reconciled accounting values (A100 300 W, RTX 5090 500 W,
/// Gemini 2.5 Pro output at $11.00/1M).
const Catalog& builtin_paper_catalog();

}  // namespace tco
