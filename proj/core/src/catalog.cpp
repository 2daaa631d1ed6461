#include "tco/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "json_io.hpp"

namespace tco {

using ojson = nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 4> kBenchmarkNames = {
    "GPQA", "MATH-500", "LiveCodeBench", "MMLU-Pro"};
constexpr std::array<std::string_view, 3> kSizeClassNames = {"Large", "Medium",
                                                             "Small"};

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw CatalogError(CatalogError::Kind::Parse,
                     "catalog parse error at " + path + ": " + msg);
}

const ojson& field(const ojson& obj, const std::string& path,
                   const char* name) {
  if (!obj.is_object()) parse_fail(path, "expected object");
  auto it = obj.find(name);
  if (it == obj.end()) parse_fail(path + "/" + name, "missing field");
  return *it;
}

std::string string_field(const ojson& obj, const std::string& path,
                         const char* name) {
  const ojson& v = field(obj, path, name);
  if (!v.is_string()) parse_fail(path + "/" + name, "expected string");
  return v.get<std::string>();
}

bool bool_field(const ojson& obj, const std::string& path, const char* name) {
  const ojson& v = field(obj, path, name);
  if (!v.is_boolean()) parse_fail(path + "/" + name, "expected boolean");
  return v.get<bool>();
}

Decimal number_value(const ojson& v, const std::string& path) {
  if (!v.is_number()) parse_fail(path, "expected number");
  try {
    return json_io::decimal_from_json_number(v);
  } catch (const std::exception& e) {
    parse_fail(path, e.what());
  }
}

Decimal number_field(const ojson& obj, const std::string& path,
                     const char* name) {
  return number_value(field(obj, path, name), path + "/" + name);
}

std::int64_t integer_field(const ojson& obj, const std::string& path,
                           const char* name) {
  const ojson& v = field(obj, path, name);
  if (!v.is_number_integer())
    parse_fail(path + "/" + name, "expected integer");
  return v.get<std::int64_t>();
}

Money price_value(const ojson& v, const std::string& path) {
  if (!v.is_string()) parse_fail(path, "expected decimal string");
  try {
    return Money::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    parse_fail(path, e.what());
  }
}

Money price_field(const ojson& obj, const std::string& path,
                  const char* name) {
  return price_value(field(obj, path, name), path + "/" + name);
}

BenchmarkScores scores_field(const ojson& obj, const std::string& path) {
  BenchmarkScores out;
  auto it = obj.find("scores");
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_object()) parse_fail(path + "/scores", "expected object");
  for (const auto& [key, value] : it->items()) {
    auto b = benchmark_from_name(key);
    if (!b) parse_fail(path + "/scores/" + key, "unknown benchmark");
    if (value.is_null()) continue;
    out[*b] = number_value(value, path + "/scores/" + key);
  }
  return out;
}

const ojson& array_field(const ojson& root, const char* name) {
  const ojson& v = field(root, "", name);
  if (!v.is_array()) parse_fail(std::string("/") + name, "expected array");
  return v;
}

ojson scores_json(const BenchmarkScores& scores) {
  ojson out = ojson::object();
  for (const auto& [b, v] : scores)
    out[std::string(benchmark_name(b))] = json_io::decimal_to_json_number(v);
  return out;
}

int line_of_offset(std::string_view doc, std::size_t offset) {
  offset = std::min(offset, doc.size());
  return 1 + static_cast<int>(
                 std::count(doc.begin(), doc.begin() + offset, '\n'));
}

template <typename T>
void check_unique(const std::vector<T>& items, std::vector<Violation>& out) {
  std::set<std::string> seen;
  for (const auto& item : items)
    if (!seen.insert(item.id).second) out.push_back({item.id, "unique id"});
}

void check_scores(const std::string& id, const BenchmarkScores& scores,
                  std::vector<Violation>& out) {
  for (const auto& [b, v] : scores)
    if (v < Decimal::from_units(0) || v > Decimal::from_units(100))
      out.push_back({id, std::string(benchmark_name(b)) + " score in [0, 100]"});
}

}  // namespace

std::string_view benchmark_name(Benchmark b) {
  return kBenchmarkNames[static_cast<std::size_t>(b)];
}

std::optional<Benchmark> benchmark_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kBenchmarkNames.size(); ++i)
    if (kBenchmarkNames[i] == name) return static_cast<Benchmark>(i);
  return std::nullopt;
}

std::string_view size_class_name(SizeClass c) {
  return kSizeClassNames[static_cast<std::size_t>(c)];
}

std::optional<SizeClass> size_class_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSizeClassNames.size(); ++i)
    if (kSizeClassNames[i] == name) return static_cast<SizeClass>(i);
  return std::nullopt;
}

const GpuSku* Catalog::find_gpu(std::string_view id) const {
  for (const auto& g : gpus)
    if (g.id == id) return &g;
  return nullptr;
}

const DeploymentSpec* Catalog::find_deployment(std::string_view id) const {
  for (const auto& d : deployments)
    if (d.id == id) return &d;
  return nullptr;
}

const ApiOffering* Catalog::find_offering(std::string_view id) const {
  for (const auto& o : offerings)
    if (o.id == id) return &o;
  return nullptr;
}

Catalog load_catalog(std::string_view document) {
  ojson root;
  try {
    root = ojson::parse(document);
  } catch (const ojson::parse_error& e) {
    throw CatalogError(
        CatalogError::Kind::Parse,
        "catalog parse error at line " +
            std::to_string(line_of_offset(document, e.byte == 0 ? 0 : e.byte - 1)) +
            ": " + e.what());
  }
  if (!root.is_object()) parse_fail("/", "expected object");

  Catalog cat;
  const ojson& version = field(root, "", "schema_version");
  if (!version.is_number_integer())
    parse_fail("/schema_version", "expected integer");
  cat.schema_version = version.get<int>();
  if (cat.schema_version != kSchemaVersion)
    parse_fail("/schema_version",
               "unsupported version " + std::to_string(cat.schema_version));

  const ojson& gpus = array_field(root, "gpus");
  for (std::size_t i = 0; i < gpus.size(); ++i) {
    const std::string p = "/gpus/" + std::to_string(i);
    const ojson& g = gpus[i];
    cat.gpus.push_back(GpuSku{
        .id = string_field(g, p, "id"),
        .name = string_field(g, p, "name"),
        .vram = number_field(g, p, "vram"),
        .rated_power = number_field(g, p, "rated_power"),
        .accounting_power = number_field(g, p, "accounting_power"),
        .unit_price = price_field(g, p, "unit_price"),
    });
  }

  std::vector<std::string> dangling;
  const ojson& deployments = array_field(root, "deployments");
  for (std::size_t i = 0; i < deployments.size(); ++i) {
    const std::string p = "/deployments/" + std::to_string(i);
    const ojson& d = deployments[i];
    DeploymentSpec spec;
    spec.id = string_field(d, p, "id");
    spec.name = string_field(d, p, "name");
    const std::string sc = string_field(d, p, "size_class");
    auto size_class = size_class_from_name(sc);
    if (!size_class) parse_fail(p + "/size_class", "unknown size class '" + sc + "'");
    spec.size_class = *size_class;
    spec.is_moe = bool_field(d, p, "is_moe");
    spec.total_params = number_field(d, p, "total_params");
    spec.active_params = number_field(d, p, "active_params");
    spec.vram_required = number_field(d, p, "vram_required");
    const std::string sku = string_field(d, p, "gpu_sku");
    spec.gpu_count = integer_field(d, p, "gpu_count");
    spec.throughput = number_field(d, p, "throughput");
    spec.scores = scores_field(d, p);
    if (const GpuSku* g = cat.find_gpu(sku)) {
      spec.gpu = *g;
    } else {
      spec.gpu.id = sku;
      dangling.push_back(sku);
    }
    cat.deployments.push_back(std::move(spec));
  }

  const ojson& offerings = array_field(root, "offerings");
  for (std::size_t i = 0; i < offerings.size(); ++i) {
    const std::string p = "/offerings/" + std::to_string(i);
    const ojson& o = offerings[i];
    ApiOffering off;
    off.id = string_field(o, p, "id");
    off.provider = string_field(o, p, "provider");
    off.name = string_field(o, p, "name");
    off.input_price = price_field(o, p, "input_price");
    off.output_price = price_field(o, p, "output_price");
    auto acc = o.find("accounting_output_price");
    off.accounting_output_price =
        acc == o.end() || acc->is_null()
            ? off.output_price
            : price_value(*acc, p + "/accounting_output_price");
    off.scores = scores_field(o, p);
    cat.offerings.push_back(std::move(off));
  }

  if (!dangling.empty()) {
    std::vector<Violation> v;
    std::string names;
    for (const auto& d : cat.deployments)
      if (!cat.find_gpu(d.gpu.id)) {
        v.push_back({d.id, "gpu_sku resolves"});
      }
    for (const auto& s : dangling) names += (names.empty() ? "" : ", ") + ("\"" + s + "\"");
    throw CatalogError(CatalogError::Kind::Reference,
                       "unknown gpu_sku id " + names, std::move(v));
  }

  auto violations = validate_catalog(cat);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << violations.size() << " catalog constraint violation(s):";
    for (const auto& v : violations) msg << " [" << v.record_id << ": " << v.rule << "]";
    throw CatalogError(CatalogError::Kind::Constraint, msg.str(),
                       std::move(violations));
  }
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CatalogError(CatalogError::Kind::Parse,
                       "cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

std::string dump_catalog(const Catalog& catalog) {
  using json_io::decimal_to_json_number;
  using json_io::money_string;
  ojson root;
  root["schema_version"] = catalog.schema_version;
  root["gpus"] = ojson::array();
  for (const auto& g : catalog.gpus) {
    root["gpus"].push_back({
        {"id", g.id},
        {"name", g.name},
        {"vram", decimal_to_json_number(g.vram)},
        {"rated_power", decimal_to_json_number(g.rated_power)},
        {"accounting_power", decimal_to_json_number(g.accounting_power)},
        {"unit_price", money_string(g.unit_price)},
    });
  }
  root["deployments"] = ojson::array();
  for (const auto& d : catalog.deployments) {
    root["deployments"].push_back({
        {"id", d.id},
        {"name", d.name},
        {"size_class", std::string(size_class_name(d.size_class))},
        {"is_moe", d.is_moe},
        {"total_params", decimal_to_json_number(d.total_params)},
        {"active_params", decimal_to_json_number(d.active_params)},
        {"vram_required", decimal_to_json_number(d.vram_required)},
        {"gpu_sku", d.gpu.id},
        {"gpu_count", d.gpu_count},
        {"throughput", decimal_to_json_number(d.throughput)},
        {"scores", scores_json(d.scores)},
    });
  }
  root["offerings"] = ojson::array();
  for (const auto& o : catalog.offerings) {
    root["offerings"].push_back({
        {"id", o.id},
        {"provider", o.provider},
        {"name", o.name},
        {"input_price", money_string(o.input_price)},
        {"output_price", money_string(o.output_price)},
        {"accounting_output_price", money_string(o.accounting_output_price)},
        {"scores", scores_json(o.scores)},
    });
  }
  return root.dump(2) + "\n";
}

std::vector<Violation> validate_catalog(const Catalog& catalog) {
  std::vector<Violation> out;
  const Decimal zero;
  check_unique(catalog.gpus, out);
  check_unique(catalog.deployments, out);
  check_unique(catalog.offerings, out);

  for (const auto& g : catalog.gpus) {
    if (g.vram <= zero) out.push_back({g.id, "vram > 0"});
    if (g.rated_power <= zero) out.push_back({g.id, "rated_power > 0"});
    if (g.accounting_power <= zero)
      out.push_back({g.id, "accounting_power > 0"});
    if (g.unit_price < Money{}) out.push_back({g.id, "unit_price >= 0"});
  }

  for (const auto& d : catalog.deployments) {
    if (!catalog.find_gpu(d.gpu.id)) out.push_back({d.id, "gpu_sku resolves"});
    if (d.gpu_count < 1) out.push_back({d.id, "gpu_count >= 1"});
    if (d.throughput <= zero) out.push_back({d.id, "throughput > 0"});
    if (d.active_params <= zero) out.push_back({d.id, "active_params > 0"});
    if (d.total_params < d.active_params)
      out.push_back({d.id, "total_params >= active_params"});
    // Memory fit is judged against the SKU as stored in the catalog.
    const GpuSku* g = catalog.find_gpu(d.gpu.id);
    const Decimal vram = g ? g->vram : d.gpu.vram;
    if (static_cast<int128>(vram.micro()) * d.gpu_count <
        static_cast<int128>(d.vram_required.micro()))
      out.push_back({d.id, "memory fit"});
    check_scores(d.id, d.scores, out);
  }

  for (const auto& o : catalog.offerings) {
    if (o.input_price < Money{}) out.push_back({o.id, "input_price >= 0"});
    if (o.output_price < Money{}) out.push_back({o.id, "output_price >= 0"});
    if (o.accounting_output_price < Money{})
      out.push_back({o.id, "accounting_output_price >= 0"});
    check_scores(o.id, o.scores, out);
  }
  return out;
}

}  // namespace tco
