// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "greendoc/interval.hpp"
#include "greendoc/quantity.hpp"

namespace greendoc {

using TokenCount = std::uint64_t;

/// Inference energy per 1,000 processed tokens, in Wh. Strictly positive.
class EnergyRate {
 public:
  explicit EnergyRate(double wh_per_kilo_token);

  double wh_per_kilo_token() const noexcept { return wh_per_kilo_token_; }

  friend bool operator==(const EnergyRate&, const EnergyRate&) = default;

 private:
  double wh_per_kilo_token_;
};

/// Physical conversion constants for one deployment.
struct FootprintProfile {
  EnergyRate rate{1.0};
  double pue = 1.0;                 // facility / IT energy
  Interval wue{0.0, 0.0};           // L per kWh; validate() requires lo > 0
  double emission_factor = 0.0;     // gCO2 per kWh
  double co2_per_prompt_g = 0.0;    // gCO2 per prompt

  /// Throws InvariantError naming the violated bound ("pue >= 1", ...).
  void validate() const;

  friend bool operator==(const FootprintProfile&, const FootprintProfile&) = default;
};

/// Builds and validates a profile.
FootprintProfile make_profile(double rate_wh_per_ktok, double pue, Interval wue,
                              double emission_factor, double co2_per_prompt_g);

// Names of the two bundled profiles. They carry different per-token rates and
// are deliberately kept apart: each reproduces its own set of figures.
inline constexpr const char* kFlashPromptProfile = "flash-prompt-2025";
inline constexpr const char* kUsecaseProfile = "usecase-2025";

/// The bundled profiles keyed by name.
std::map<std::string, FootprintProfile> builtin_profiles();

/// rate / 1000 * tokens, in Wh (stored as kWh).
Energy inference_energy(TokenCount tokens, const EnergyRate& rate);

/// Facility energy = IT energy * pue. Throws for pue < 1.
Energy apply_pue(const Energy& it_energy, double pue);

/// grams = kWh * factor, endpoint-wise.
Carbon co2_from_energy(const Energy& e, double g_per_kwh);

/// Water for an energy amount over a WUE range. A point energy spans the
/// whole WUE range; a ranged energy pairs lo with lo and hi with hi.
Water water_from_energy(const Energy& e, const Interval& wue_l_per_kwh);

/// Per-prompt emission path: prompts * co2_per_prompt_g.
Carbon co2_from_prompts(std::uint64_t prompts, const FootprintProfile& profile);

/// Resource cost of hidden reasoning tokens on top of a base request.
struct ThinkingDelta {
  Energy base_energy;
  Energy thinking_energy;  // base + thinking tokens
  Energy delta_energy;
  /// thinking / base * 100. Empty when base is zero but thinking is not.
  std::optional<double> pct_increase;
  Carbon base_co2;
  Carbon thinking_co2;
  Carbon delta_co2;
  Water base_water;
  Water thinking_water;
  Water delta_water;
};

ThinkingDelta thinking_delta(TokenCount base_tokens, TokenCount thinking_tokens,
                             const FootprintProfile& profile);

}  // namespace greendoc
