// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "greendoc/error.hpp"

namespace greendoc {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvariantError("interval bounds must be finite");
  }
  if (lo > hi) {
    throw InvariantError(fmt::format("interval lo > hi ({} > {})", lo, hi));
  }
}

Interval interval_add(const Interval& a, const Interval& b) {
  return Interval{a.lo() + b.lo(), a.hi() + b.hi()};
}

Interval interval_scale(const Interval& a, double k) {
  if (!std::isfinite(k) || k < 0) {
    throw InvariantError(fmt::format("interval scale factor must be >= 0, got {}", k));
  }
  return Interval{a.lo() * k, a.hi() * k};
}

Interval interval_hull(double a, double b) { return Interval{std::min(a, b), std::max(a, b)}; }

std::ostream& operator<<(std::ostream& os, const Interval& i) {
  return os << '[' << i.lo() << ", " << i.hi() << ']';
}

}  // namespace greendoc
