// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/footprint.hpp"

#include <cmath>

#include <fmt/format.h>

#include "greendoc/error.hpp"

namespace greendoc {

EnergyRate::EnergyRate(double wh_per_kilo_token) : wh_per_kilo_token_(wh_per_kilo_token) {
  if (!std::isfinite(wh_per_kilo_token) || wh_per_kilo_token <= 0) {
    throw InvariantError("rate_wh_per_ktok > 0");
  }
}

void FootprintProfile::validate() const {
  if (!std::isfinite(pue) || pue < 1.0) throw InvariantError("pue >= 1");
  if (!(wue.lo() > 0)) throw InvariantError("wue lo > 0");
  if (!std::isfinite(emission_factor) || emission_factor <= 0) {
    throw InvariantError("emission_factor > 0");
  }
  if (!std::isfinite(co2_per_prompt_g) || co2_per_prompt_g < 0) {
    throw InvariantError("co2_per_prompt_g >= 0");
  }
}

FootprintProfile make_profile(double rate_wh_per_ktok, double pue, Interval wue,
                              double emission_factor, double co2_per_prompt_g) {
  FootprintProfile p{EnergyRate{rate_wh_per_ktok}, pue, wue, emission_factor, co2_per_prompt_g};
  p.validate();
  return p;
}

std::map<std::string, FootprintProfile> builtin_profiles() {
  // Google Cloud fleet PUE, efficient-facility WUE band, Italian grid mix.
  const Interval wue{0.18, 0.30};
  return {
      {kFlashPromptProfile, make_profile(0.24, 1.09, wue, 288.0, 0.03)},
      // 0.00003 kWh per token.
      {kUsecaseProfile, make_profile(30.0, 1.09, wue, 288.0, 0.03)},
  };
}

Energy inference_energy(TokenCount tokens, const EnergyRate& rate) {
  return kilowatt_hours(static_cast<double>(tokens) * rate.wh_per_kilo_token() / 1e6);
}

Energy apply_pue(const Energy& it_energy, double pue) {
  if (!std::isfinite(pue) || pue < 1.0) throw InvariantError("pue >= 1");
  return Energy{interval_scale(it_energy.value(), pue)};
}

Carbon co2_from_energy(const Energy& e, double g_per_kwh) {
  return Carbon{interval_scale(e.value(), g_per_kwh)};
}

Water water_from_energy(const Energy& e, const Interval& wue_l_per_kwh) {
  if (wue_l_per_kwh.lo() < 0) throw InvariantError("wue lo >= 0");
  return Water{Interval{e.lo() * wue_l_per_kwh.lo(), e.hi() * wue_l_per_kwh.hi()}};
}

Carbon co2_from_prompts(std::uint64_t prompts, const FootprintProfile& profile) {
  return Carbon{static_cast<double>(prompts) * profile.co2_per_prompt_g};
}

ThinkingDelta thinking_delta(TokenCount base_tokens, TokenCount thinking_tokens,
                             const FootprintProfile& profile) {
  const Energy base = inference_energy(base_tokens, profile.rate);
  const Energy with = inference_energy(base_tokens + thinking_tokens, profile.rate);
  const Energy delta = inference_energy(thinking_tokens, profile.rate);

  std::optional<double> pct;
  if (thinking_tokens == 0) {
    pct = 0.0;
  } else if (base_tokens > 0) {
    pct = static_cast<double>(thinking_tokens) / static_cast<double>(base_tokens) * 100.0;
  }

  return ThinkingDelta{
      base,
      with,
      delta,
      pct,
      co2_from_energy(base, profile.emission_factor),
      co2_from_energy(with, profile.emission_factor),
      co2_from_energy(delta, profile.emission_factor),
      water_from_energy(base, profile.wue),
      water_from_energy(with, profile.wue),
      water_from_energy(delta, profile.wue),
  };
}

}  // namespace greendoc
