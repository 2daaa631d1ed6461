#pragma once

// JSON conversions shared by the catalog loader, the structured-document
// renderers, and the HTTP service.

#include <string>

#include "json.hpp"
#include "tco/fixed.hpp"

namespace tco::json_io {

using ojson = nlohmann::ordered_json;

/// Integral values become JSON integers, the rest shortest-round-trip doubles.
ojson decimal_to_json_number(Decimal v);
Decimal decimal_from_json_number(const ojson& v);

/// At least two fractional digits, more only when needed ("15000.00",
/// "0.075").
std::string money_string(Money m);

/// Accepts a JSON number or a decimal string.
template <typename T>
T fixed_from_json(const ojson& v) {
  if (v.is_string()) return T::parse(v.get<std::string>());
  return T::from_micro(decimal_from_json_number(v).micro());
}

}  // namespace tco::json_io
