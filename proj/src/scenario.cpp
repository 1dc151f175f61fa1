// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/scenario.hpp"

#include <cmath>

#include <fmt/format.h>

#include "greendoc/error.hpp"

namespace greendoc {

namespace {

// Absorbs representation error in quotients that are integral in exact arithmetic
// (25200 / 1800, 5000 / 1000 * 1.2, ...).
constexpr double kIntegralSlack = 1e-9;

double floor_count(double x) { return std::floor(x + kIntegralSlack * std::max(1.0, x)); }
double ceil_count(double x) { return std::ceil(x - kIntegralSlack * std::max(1.0, x)); }

bool is_whole(double x) { return std::floor(x) == x; }

void check_finite_nonneg(double v, const char* what) {
  if (!std::isfinite(v) || v < 0) throw InvariantError(fmt::format("{} >= 0", what));
}

}  // namespace

void WorkforceParams::validate() const {
  check_finite_nonneg(shift_hours, "shift_hours");
  check_finite_nonneg(productive_hours, "productive_hours");
  check_finite_nonneg(laptop_kwh_per_day, "laptop_kwh_per_day");
  if (productive_hours > shift_hours) throw InvariantError("productive_hours <= shift_hours");
  if (!(per_doc_time_s.lo() > 0)) throw InvariantError("per_doc_time lo > 0");
  if (!std::isfinite(buffer) || buffer < 1.0) throw InvariantError("buffer >= 1");
}

void Scenario::validate() const {
  if (name.empty()) throw InvariantError("scenario name must not be empty");
  workforce.validate();
  for (const auto& st : stages) {
    if (!std::isfinite(st.energy_wh_per_doc) || st.energy_wh_per_doc < 0) {
      throw InvariantError(fmt::format("stage '{}' energy_wh_per_doc >= 0", st.name));
    }
  }
  check_finite_nonneg(overhead_kwh_per_day, "overhead_kwh_per_day");
  if (operators_override) {
    const auto& o = *operators_override;
    if (o.lo() < 0 || !is_whole(o.lo()) || !is_whole(o.hi())) {
      throw InvariantError("operators_override endpoints must be non-negative integers");
    }
  }
}

Interval docs_per_operator_day(const WorkforceParams& w) {
  w.validate();
  const double productive_s = w.productive_hours * 3600.0;
  return Interval{floor_count(productive_s / w.per_doc_time_s.hi()),
                  floor_count(productive_s / w.per_doc_time_s.lo())};
}

Interval operators_required(std::uint64_t volume, const Interval& throughput, double buffer) {
  if (volume == 0) return Interval{0, 0};
  if (throughput.lo() < 1) throw InvariantError("zero throughput: docs per operator-day < 1");
  if (!std::isfinite(buffer) || buffer < 1.0) throw InvariantError("buffer >= 1");
  const auto v = static_cast<double>(volume);
  return Interval{ceil_count(v / throughput.hi() * buffer), ceil_count(v / throughput.lo() * buffer)};
}

double cloud_energy_per_doc(std::span<const PipelineStage> stages, double pue) {
  if (!std::isfinite(pue) || pue < 1.0) throw InvariantError("pue >= 1");
  double wh = 0.0;
  for (const auto& st : stages) wh += st.it_side ? st.energy_wh_per_doc * pue : st.energy_wh_per_doc;
  return wh / 1000.0;
}

DailyFootprint evaluate_scenario(const Scenario& s, const FootprintProfile& profile) {
  s.validate();
  profile.validate();

  const Interval operators =
      s.operators_override
          ? *s.operators_override
          : operators_required(s.daily_volume, docs_per_operator_day(s.workforce), s.workforce.buffer);

  const double per_doc = cloud_energy_per_doc(s.stages, profile.pue);
  const double cloud = per_doc * static_cast<double>(s.daily_volume);

  const Interval kwh = interval_scale(operators, s.workforce.laptop_kwh_per_day) +
                       Interval::point(cloud) + Interval::point(s.overhead_kwh_per_day);
  const Energy energy{kwh};

  return DailyFootprint{
      s.name,
      operators,
      energy,
      co2_from_energy(energy, profile.emission_factor),
      water_from_energy(energy, profile.wue),
      per_doc,
      !s.stages.empty(),
  };
}

namespace {

Interval reduction_pct(const Interval& base, const Interval& cand, const char* metric) {
  if (!(base.lo() > 0)) throw InvariantError(fmt::format("zero baseline {}", metric));
  return interval_hull((1.0 - cand.hi() / base.hi()) * 100.0, (1.0 - cand.lo() / base.lo()) * 100.0);
}

Interval increment_pct(const Interval& base, const Interval& cand, const char* metric) {
  if (!(base.lo() > 0)) throw InvariantError(fmt::format("zero hitl {}", metric));
  return interval_hull((cand.hi() / base.hi() - 1.0) * 100.0, (cand.lo() / base.lo() - 1.0) * 100.0);
}

}  // namespace

MetricComparison compare_scenarios(const DailyFootprint& baseline, const DailyFootprint& candidate) {
  return MetricComparison{
      reduction_pct(baseline.energy.value(), candidate.energy.value(), "energy"),
      reduction_pct(baseline.co2.value(), candidate.co2.value(), "co2"),
      reduction_pct(baseline.water.value(), candidate.water.value(), "water"),
  };
}

MetricComparison incremental_cost(const DailyFootprint& hitl, const DailyFootprint& agentic) {
  return MetricComparison{
      increment_pct(hitl.energy.value(), agentic.energy.value(), "energy"),
      increment_pct(hitl.co2.value(), agentic.co2.value(), "co2"),
      increment_pct(hitl.water.value(), agentic.water.value(), "water"),
  };
}

}  // namespace greendoc
