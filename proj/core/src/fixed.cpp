#include "tco/fixed.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <system_error>

#include "tco/fraction.hpp"

namespace tco {

namespace {

constexpr std::int64_t kPow10[] = {1,      10,      100,      1000,
                                   10000,  100000,  1000000};

[[noreturn]] void bad_decimal(std::string_view text) {
  throw std::invalid_argument("not a decimal literal: '" + std::string(text) +
                              "'");
}

}  // namespace

std::int64_t parse_micro(std::string_view text) {
  if (text.empty()) bad_decimal(text);
  std::string_view s = text;
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) bad_decimal(text);
  if (dot != std::string_view::npos && frac.empty()) bad_decimal(text);
  if (frac.size() > 6) bad_decimal(text);
  for (char c : whole)
    if (c < '0' || c > '9') bad_decimal(text);
  for (char c : frac)
    if (c < '0' || c > '9') bad_decimal(text);

  int128 value = 0;
  for (char c : whole) {
    value = value * 10 + (c - '0');
    if (value > static_cast<int128>(INT64_MAX)) bad_decimal(text);
  }
  value *= kMicro;
  std::int64_t f = 0;
  for (char c : frac) f = f * 10 + (c - '0');
  value += f * kPow10[6 - frac.size()];
  if (value > static_cast<int128>(INT64_MAX)) bad_decimal(text);
  return static_cast<std::int64_t>(negative ? -value : value);
}

std::string format_micro(std::int64_t micro, int decimals) {
  if (decimals < 0 || decimals > 6)
    throw std::invalid_argument("decimals must be within [0, 6]");
  const std::int64_t scale = kPow10[6 - decimals];
  const int128 scaled = div_round(micro, scale);
  const bool negative = scaled < 0;
  const int128 mag = negative ? -scaled : scaled;
  const std::int64_t unit = kPow10[decimals];
  std::string out = negative ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(mag / unit));
  if (decimals > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(mag % unit));
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string format_micro_trimmed(std::int64_t micro) {
  std::string s = format_micro(micro, 6);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::int64_t micro_from_double(double value) {
  char buf[64];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) throw std::invalid_argument("unrepresentable number");
  std::string_view s(buf, static_cast<std::size_t>(end - buf));
  const auto dot = s.find('.');
  if (dot == std::string_view::npos || s.size() - dot - 1 <= 6)
    return parse_micro(s);
  // More than six fractional digits: keep seven, round once.
  const std::string seven(s.substr(0, dot + 8));
  std::string digits;
  for (char c : seven)
    if (c != '.') digits += c;
  const bool negative = digits.front() == '-';
  if (negative) digits.erase(0, 1);
  int128 v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  const int128 r = div_round(negative ? -v : v, 10);
  if (r > INT64_MAX || r < INT64_MIN)
    throw std::invalid_argument("number out of range");
  return static_cast<std::int64_t>(r);
}

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Fraction Fraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_micro(parse_micro(text));
  const std::string_view n = text.substr(0, slash);
  const std::string_view d = text.substr(slash + 1);
  std::int64_t num = 0;
  std::int64_t den = 0;
  auto r1 = std::from_chars(n.data(), n.data() + n.size(), num);
  auto r2 = std::from_chars(d.data(), d.data() + d.size(), den);
  if (r1.ec != std::errc{} || r1.ptr != n.data() + n.size() ||
      r2.ec != std::errc{} || r2.ptr != d.data() + d.size() || den == 0)
    throw std::invalid_argument("not a fraction: '" + std::string(text) + "'");
  return {num, den};
}

std::string Fraction::str() const {
  if (kMicro % den_ == 0) return format_micro_trimmed(num_ * (kMicro / den_));
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace tco
