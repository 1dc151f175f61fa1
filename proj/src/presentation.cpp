// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/presentation.hpp"

#include <cmath>

#include <fmt/format.h>

namespace greendoc {

double round_half_up(double x, int digits) {
  const double scale = std::pow(10.0, digits);
  const double s = std::abs(x) * scale;
  const double r = std::floor(s + 0.5 + 1e-9 * std::max(1.0, s)) / scale;
  return std::signbit(x) ? -r : r;
}

std::string format_fixed(double x, int digits) {
  double r = round_half_up(x, digits);
  if (r == 0) r = 0;  // drop the sign of -0
  return fmt::format("{:.{}f}", r, digits);
}

std::string format_trimmed(double x, int max_digits) {
  std::string s = format_fixed(x, max_digits);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

Interval round_interval(const Interval& i, int digits) {
  return Interval{round_half_up(i.lo(), digits), round_half_up(i.hi(), digits)};
}

std::string format_range(const Interval& i, int digits, bool plus_sign) {
  const auto one = [&](double v) {
    auto s = format_fixed(v, digits);
    return plus_sign && s.front() != '-' ? "+" + s : s;
  };
  return one(i.lo()) + " -- " + one(i.hi());
}

PresentedFootprint present(const DailyFootprint& f, const FootprintProfile& profile) {
  PresentedFootprint p;
  p.scenario = f.scenario;
  p.operators = f.operators;
  p.energy_kwh = round_interval(f.energy.value(), 1);
  const Energy shown{p.energy_kwh};
  p.co2_kg = round_interval(as_kilograms(co2_from_energy(shown, profile.emission_factor)), 1);
  p.water_l = round_interval(water_from_energy(shown, profile.wue).value(), 1);
  if (f.has_cloud_stages) p.energy_per_doc_kwh = f.energy_per_doc_kwh;
  return p;
}

Interval present_pct(const Interval& pct) { return round_interval(pct, 1); }

}  // namespace greendoc
