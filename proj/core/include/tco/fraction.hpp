#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tco/fixed.hpp"

namespace tco {

/// Exact nonnegative-denominator rational, always reduced. Used for shares
/// that have no finite decimal form, such as the default 2/3 output share.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den);

  /// Accepts "p/q" or a decimal literal ("0.5", "1").
  static Fraction parse(std::string_view text);
  static Fraction from_micro(std::int64_t micro) { return {micro, kMicro}; }
  template <typename Tag>
  static Fraction from_fixed(Fixed<Tag> v) {
    return from_micro(v.micro());
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// Nearest micro value, half away from zero.
  std::int64_t to_micro() const {
    return static_cast<std::int64_t>(
        div_round(static_cast<int128>(num_) * kMicro, den_));
  }
  /// "2/3" for non-decimal values, otherwise the trimmed decimal ("0.5").
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) {
    return static_cast<int128>(a.num_) * b.den_ <=>
           static_cast<int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tco
