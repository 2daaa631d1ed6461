#include "json_io.hpp"

#include <stdexcept>

namespace tco::json_io {

ojson decimal_to_json_number(Decimal v) {
  if (v.micro() % kMicro == 0) return v.micro() / kMicro;
  return v.to_double();
}

Decimal decimal_from_json_number(const ojson& v) {
  if (v.is_number_integer()) {
    const auto i = v.get<std::int64_t>();
    if (i > INT64_MAX / kMicro || i < INT64_MIN / kMicro)
      throw std::invalid_argument("number out of range");
    return Decimal::from_units(i);
  }
  if (v.is_number()) return Decimal::from_double(v.get<double>());
  throw std::invalid_argument("expected number");
}

std::string money_string(Money m) {
  std::string s = m.trimmed();
  const auto dot = s.find('.');
  if (dot == std::string::npos) return s + ".00";
  if (s.size() - dot - 1 < 2) s += '0';
  return s;
}

}  // namespace tco::json_io
