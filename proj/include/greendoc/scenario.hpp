// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "greendoc/footprint.hpp"
#include "greendoc/interval.hpp"
#include "greendoc/quantity.hpp"

namespace greendoc {

struct WorkforceParams {
  double shift_hours = 8.0;
  double productive_hours = 7.0;
  double buffer = 1.15;  // staffing margin for absences and idle time
  Interval per_doc_time_s{1.0, 1.0};
  double laptop_kwh_per_day = 0.48;  // 60 Wh/h over the shift

  void validate() const;

  friend bool operator==(const WorkforceParams&, const WorkforceParams&) = default;
};

/// Cloud-side processing step. Energies are facility-side unless `it_side`
/// is set, in which case the profile PUE is applied on top.
struct PipelineStage {
  std::string name;
  double energy_wh_per_doc = 0.0;
  bool it_side = false;

  friend bool operator==(const PipelineStage&, const PipelineStage&) = default;
};

struct Scenario {
  std::string name;
  std::uint64_t daily_volume = 5000;
  WorkforceParams workforce;
  std::vector<PipelineStage> stages;  // empty for manual processing
  double overhead_kwh_per_day = 0.0;
  std::optional<Interval> operators_override;

  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct DailyFootprint {
  std::string scenario;
  Interval operators{0, 0};
  Energy energy;   // per day
  Carbon co2;      // per day
  Water water;     // per day
  double energy_per_doc_kwh = 0.0;  // cloud stages only
  bool has_cloud_stages = false;
};

/// Documents one operator clears per day:
/// [floor(productive_s / per_doc.hi), floor(productive_s / per_doc.lo)].
Interval docs_per_operator_day(const WorkforceParams& w);

/// Head count for a daily volume:
/// [ceil(volume / throughput.hi * buffer), ceil(volume / throughput.lo * buffer)].
Interval operators_required(std::uint64_t volume, const Interval& throughput, double buffer);

/// Sum of stage energies in kWh per document.
double cloud_energy_per_doc(std::span<const PipelineStage> stages, double pue);

DailyFootprint evaluate_scenario(const Scenario& s, const FootprintProfile& profile);

/// Percentage changes per metric. Bounds are ordered lo <= hi.
struct MetricComparison {
  Interval energy_pct{0, 0};
  Interval co2_pct{0, 0};
  Interval water_pct{0, 0};
};

/// Reduction of candidate relative to baseline, endpoint-matched:
/// [1 - cand.hi / base.hi, 1 - cand.lo / base.lo] * 100.
MetricComparison compare_scenarios(const DailyFootprint& baseline, const DailyFootprint& candidate);

/// Extra consumption of `agentic` over `hitl`, endpoint-matched:
/// [agentic.hi / hitl.hi - 1, agentic.lo / hitl.lo - 1] * 100.
MetricComparison incremental_cost(const DailyFootprint& hitl, const DailyFootprint& agentic);

}  // namespace greendoc
