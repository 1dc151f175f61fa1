// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "greendoc/error.hpp"
#include "greendoc/interval.hpp"

namespace greendoc {

struct KilowattHour {
  static constexpr const char* symbol = "kWh";
};
struct Gram {
  static constexpr const char* symbol = "g";
};
struct Liter {
  static constexpr const char* symbol = "L";
};

/// Non-negative amount (point or range) tagged with its unit.
template <class Unit>
class Quantity {
 public:
  using unit = Unit;

  explicit Quantity(const Interval& v) : value_(v) {
    if (v.lo() < 0) throw InvariantError(std::string("negative quantity in ") + Unit::symbol);
  }
  explicit Quantity(double v) : Quantity(Interval::point(v)) {}
  Quantity() : value_(Interval::point(0)) {}

  const Interval& value() const noexcept { return value_; }
  double lo() const noexcept { return value_.lo(); }
  double hi() const noexcept { return value_.hi(); }
  bool is_point() const noexcept { return value_.is_point(); }

  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  Interval value_;
};

/// Energy in kilowatt-hours.
using Energy = Quantity<KilowattHour>;
/// CO2 mass in grams.
using Carbon = Quantity<Gram>;
/// Water volume in liters.
using Water = Quantity<Liter>;

inline Energy kilowatt_hours(double kwh) { return Energy{kwh}; }
inline Energy kilowatt_hours(const Interval& kwh) { return Energy{kwh}; }
inline Energy watt_hours(double wh) { return Energy{wh / 1000.0}; }

inline Interval as_watt_hours(const Energy& e) { return interval_scale(e.value(), 1000.0); }
inline Interval as_kilograms(const Carbon& c) { return interval_scale(c.value(), 1e-3); }
inline Interval as_milliliters(const Water& w) { return interval_scale(w.value(), 1000.0); }

}  // namespace greendoc
