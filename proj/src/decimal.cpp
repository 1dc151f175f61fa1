// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/decimal.hpp"

#include <cctype>
#include <limits>

#include "greendoc/error.hpp"

namespace greendoc {

namespace {

__extension__ typedef __int128 wide;

constexpr std::int64_t pow10(int n) {
  std::int64_t r = 1;
  while (n-- > 0) r *= 10;
  return r;
}

std::int64_t narrow(wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw InvariantError("decimal overflow");
  }
  return static_cast<std::int64_t>(v);
}

// Half away from zero.
wide div_round(wide num, wide den) {
  const wide q = num / den;
  const wide r = num % den;
  const wide twice = (r < 0 ? -r : r) * 2;
  if (twice >= den) return num < 0 ? q - 1 : q + 1;
  return q;
}

}  // namespace

Decimal Decimal::from_int(std::int64_t v) { return from_units(narrow(static_cast<wide>(v) * kScale)); }

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }

  wide whole = 0;
  int digits = 0;
  int group = 0;  // digits since the last separator
  bool grouped = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    const char c = text[i];
    if (c == ',') {
      if (digits == 0 || (grouped && group != 3) || (!grouped && group > 3)) return std::nullopt;
      grouped = true;
      group = 0;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    whole = whole * 10 + (c - '0');
    if (whole > std::numeric_limits<std::int64_t>::max() / kScale) return std::nullopt;
    ++digits;
    ++group;
  }
  if (grouped && group != 3) return std::nullopt;

  wide frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    ++i;  // '.'
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      if (++frac_digits > kScaleDigits) return std::nullopt;
      frac = frac * 10 + (c - '0');
    }
    if (frac_digits == 0) return std::nullopt;
  }
  if (digits == 0 && frac_digits == 0) return std::nullopt;

  wide units = whole * kScale + frac * pow10(kScaleDigits - frac_digits);
  if (negative) units = -units;
  return from_units(static_cast<std::int64_t>(units));
}

Decimal Decimal::from_string(std::string_view text) {
  auto d = parse(text);
  if (!d) throw InvariantError("not a decimal number: '" + std::string(text) + "'");
  return *d;
}

Decimal Decimal::rounded(int digits) const {
  if (digits >= kScaleDigits) return *this;
  const std::int64_t step = pow10(kScaleDigits - digits);
  return from_units(narrow(div_round(units_, step) * step));
}

std::string Decimal::to_fixed(int digits) const {
  if (digits > kScaleDigits) digits = kScaleDigits;
  const wide scaled = div_round(units_, pow10(kScaleDigits - digits));
  const wide mag = scaled < 0 ? -scaled : scaled;
  const std::int64_t den = pow10(digits);
  std::string out = scaled < 0 ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(mag / den));
  if (digits > 0) {
    std::string frac = std::to_string(static_cast<std::int64_t>(mag % den));
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

std::string Decimal::to_string() const {
  std::string s = to_fixed(kScaleDigits);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

Decimal operator+(Decimal a, Decimal b) {
  return Decimal::from_units(narrow(static_cast<wide>(a.units_) + b.units_));
}

Decimal operator-(Decimal a, Decimal b) {
  return Decimal::from_units(narrow(static_cast<wide>(a.units_) - b.units_));
}

Decimal operator*(Decimal a, Decimal b) {
  return Decimal::from_units(narrow(div_round(static_cast<wide>(a.units_) * b.units_, Decimal::kScale)));
}

}  // namespace greendoc
