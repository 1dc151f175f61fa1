// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace greendoc {

/// Closed range [lo, hi] of finite reals. A point value has lo == hi.
class Interval {
 public:
  /// Throws InvariantError unless both bounds are finite and lo <= hi.
  Interval(double lo, double hi);

  static Interval point(double v) { return Interval{v, v}; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double mid() const noexcept { return lo_ + (hi_ - lo_) / 2; }
  double width() const noexcept { return hi_ - lo_; }
  bool is_point() const noexcept { return lo_ == hi_; }
  bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

/// [a.lo + b.lo, a.hi + b.hi]
Interval interval_add(const Interval& a, const Interval& b);

/// [k * a.lo, k * a.hi]. Rejects negative or non-finite k.
Interval interval_scale(const Interval& a, double k);

/// Interval spanning both endpoints, whichever order they arrive in.
Interval interval_hull(double a, double b);

inline Interval operator+(const Interval& a, const Interval& b) { return interval_add(a, b); }
inline Interval operator*(const Interval& a, double k) { return interval_scale(a, k); }
inline Interval operator*(double k, const Interval& a) { return interval_scale(a, k); }

std::ostream& operator<<(std::ostream& os, const Interval& i);

}  // namespace greendoc
