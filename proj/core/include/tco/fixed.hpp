#pragma once

// Fixed-point decimal quantities with micro (10^-6) resolution.
//
// Every quantity the engine does arithmetic on (dollars, tokens, watts,
// hours, rates) is stored as a signed count of millionths. Products of two
// fixed values are formed in 128-bit integers and rounded once, half away
// from zero, back to micro resolution.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tco {

using int128 = __int128;

inline constexpr std::int64_t kMicro = 1'000'000;

/// Integer division rounding half away from zero. `den` must be nonzero.
constexpr int128 div_round(int128 num, int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int128 q = num / den;
  const int128 r = num % den;
  const int128 twice = (r < 0 ? -r : r) * 2;
  if (twice >= den) return num < 0 ? q - 1 : q + 1;
  return q;
}

/// Parses a plain decimal literal ("15", "-0.15", "1.250000") into micro
/// units. Throws std::invalid_argument on anything else, including more
/// than six fractional digits.
std::int64_t parse_micro(std::string_view text);

/// Formats micro units with exactly `decimals` fractional digits
/// (0..6), rounding half away from zero.
std::string format_micro(std::int64_t micro, int decimals);

/// Formats micro units with trailing fractional zeros removed ("2", "0.15").
std::string format_micro_trimmed(std::int64_t micro);

/// Converts a double to micro units, rounding half away from zero at the
/// shortest round-trip decimal representation of the value.
std::int64_t micro_from_double(double value);

template <typename Tag>
class Fixed {
 public:
  constexpr Fixed() = default;

  static constexpr Fixed from_micro(std::int64_t micro) { return Fixed(micro); }
  static constexpr Fixed from_units(std::int64_t units) {
    return Fixed(units * kMicro);
  }
  static Fixed parse(std::string_view text) { return Fixed(parse_micro(text)); }
  static Fixed from_double(double value) {
    return Fixed(micro_from_double(value));
  }

  constexpr std::int64_t micro() const { return micro_; }
  constexpr double to_double() const {
    return static_cast<double>(micro_) / static_cast<double>(kMicro);
  }
  constexpr bool is_zero() const { return micro_ == 0; }

  std::string str(int decimals = 6) const {
    return format_micro(micro_, decimals);
  }
  std::string trimmed() const { return format_micro_trimmed(micro_); }

  constexpr Fixed operator-() const { return Fixed(-micro_); }
  constexpr Fixed& operator+=(Fixed o) {
    micro_ += o.micro_;
    return *this;
  }
  constexpr Fixed& operator-=(Fixed o) {
    micro_ -= o.micro_;
    return *this;
  }
  friend constexpr Fixed operator+(Fixed a, Fixed b) { return a += b; }
  friend constexpr Fixed operator-(Fixed a, Fixed b) { return a -= b; }
  friend constexpr Fixed operator*(Fixed a, std::int64_t k) {
    return Fixed(a.micro_ * k);
  }
  friend constexpr Fixed operator*(std::int64_t k, Fixed a) { return a * k; }

  friend constexpr auto operator<=>(Fixed, Fixed) = default;
  friend constexpr bool operator==(Fixed, Fixed) = default;

 private:
  constexpr explicit Fixed(std::int64_t micro) : micro_(micro) {}
  std::int64_t micro_ = 0;
};

struct DecimalTag {};
struct MoneyTag {};
struct TokensTag {};
struct MonthsTag {};

/// Dimensionless or unit-annotated decimal (watts, hours, USD/kWh, GB).
using Decimal = Fixed<DecimalTag>;
/// US dollars.
using Money = Fixed<MoneyTag>;
/// Token counts (per month unless noted).
using Tokens = Fixed<TokensTag>;
/// Elapsed months.
using Months = Fixed<MonthsTag>;

/// Rounds the exact product a * b of two micro-scaled values to micro.
template <typename R, typename A, typename B>
constexpr R mul_round(Fixed<A> a, Fixed<B> b) {
  return R::from_micro(static_cast<std::int64_t>(
      div_round(static_cast<int128>(a.micro()) * b.micro(), kMicro)));
}

}  // namespace tco
