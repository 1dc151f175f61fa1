// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "greendoc/footprint.hpp"
#include "greendoc/interval.hpp"
#include "greendoc/scenario.hpp"

namespace greendoc {

/// Rounds half away from zero. Values within float noise of a tie
/// (16.165 stored as 16.16499...) round as the decimal tie would.
double round_half_up(double x, int digits);

/// round_half_up then fixed notation; never prints "-0".
std::string format_fixed(double x, int digits);

/// Fixed notation with at most `max_digits` decimals and trailing zeros
/// dropped ("0.000545", "2.4").
std::string format_trimmed(double x, int max_digits);

Interval round_interval(const Interval& i, int digits);

/// "lo -- hi", or a single value for a point.
std::string format_range(const Interval& i, int digits, bool plus_sign = false);

/// A scenario row as it appears in the published tables: energy rounded to
/// one decimal, and CO2 and water derived from that rounded energy before
/// being rounded themselves.
struct PresentedFootprint {
  std::string scenario;
  Interval operators{0, 0};
  Interval energy_kwh{0, 0};
  Interval co2_kg{0, 0};
  Interval water_l{0, 0};
  std::optional<double> energy_per_doc_kwh;
};

PresentedFootprint present(const DailyFootprint& f, const FootprintProfile& profile);

/// Percentages are shown with one decimal.
Interval present_pct(const Interval& pct);

}  // namespace greendoc
