// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace greendoc {

/// Exact fixed-point decimal with six fractional digits, stored as a scaled
/// 64-bit integer. Used for invoice amounts.
class Decimal {
 public:
  static constexpr int kScaleDigits = 6;
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Decimal() = default;

  static constexpr Decimal from_units(std::int64_t units) {
    Decimal d;
    d.units_ = units;
    return d;
  }
  static Decimal from_int(std::int64_t v);

  /// Accepts "1234.56", "1,234.56", "-3", "0.5". Thousands separators must
  /// group by three. Returns nullopt on anything else, including more than six
  /// fractional digits.
  static std::optional<Decimal> parse(std::string_view text);

  /// Like parse() but throws InvariantError.
  static Decimal from_string(std::string_view text);

  std::int64_t units() const noexcept { return units_; }
  double to_double() const noexcept { return static_cast<double>(units_) / kScale; }

  Decimal abs() const noexcept { return from_units(units_ < 0 ? -units_ : units_); }

  /// Rounds half away from zero to `digits` fractional digits.
  Decimal rounded(int digits) const;

  /// Shortest form: trailing fractional zeros dropped ("40", "2.5").
  std::string to_string() const;
  /// Fixed number of fractional digits, half away from zero ("85.00").
  std::string to_fixed(int digits) const;

  friend Decimal operator+(Decimal a, Decimal b);
  friend Decimal operator-(Decimal a, Decimal b);
  /// Product rounded half away from zero to six digits. Throws on overflow.
  friend Decimal operator*(Decimal a, Decimal b);

  friend constexpr auto operator<=>(const Decimal&, const Decimal&) = default;

 private:
  std::int64_t units_ = 0;
};

}  // namespace greendoc
