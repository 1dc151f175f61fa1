// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1 for ctest).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "greendoc/config.hpp"
#include "greendoc/deviations.hpp"
#include "greendoc/footprint.hpp"
#include "greendoc/invoice.hpp"
#include "greendoc/pipeline.hpp"
#include "greendoc/presentation.hpp"
#include "greendoc/scenario.hpp"

using namespace greendoc;

namespace {

const std::string kRoot = GREENDOC_SOURCE_DIR;

// Collects failed sub-checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    expect(std::abs(actual - expected) <= tol, fmt::format("{}: got {:.10g}, want {:.10g} +- {:g}", what, actual,
                                                          expected, tol));
  }
  void digits(double actual, int places, const std::string& expected, const std::string& what) {
    const auto got = format_fixed(actual, places);
    expect(got == expected, fmt::format("{}: got {}, want {}", what, got, expected));
  }
  void range(const Interval& actual, int places, const std::string& lo, const std::string& hi,
             const std::string& what) {
    digits(actual.lo(), places, lo, what + ".lo");
    digits(actual.hi(), places, hi, what + ".hi");
  }
  void deviation(const std::string& id) {
    expect(find_deviation(id).has_value(), "missing deviation record " + id);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> body;
};

const FootprintProfile& flash() {
  static const auto p = builtin_profiles().at(kFlashPromptProfile);
  return p;
}

const Config& repro_config() {
  static const auto c = load_config(kRoot + "/data/config.json");
  return c;
}

DailyFootprint scenario(const std::string& name) {
  const Scenario* s = repro_config().find_scenario(name);
  if (s == nullptr) throw UnknownScenarioError(name);
  return evaluate_scenario(*s, flash());
}

// A published daily row, with CO2 derived at the profile emission factor.
DailyFootprint published_row(const std::string& name, double lo_kwh, double hi_kwh) {
  DailyFootprint f;
  f.scenario = name;
  f.energy = kilowatt_hours(Interval{lo_kwh, hi_kwh});
  f.co2 = co2_from_energy(f.energy, flash().emission_factor);
  f.water = water_from_energy(f.energy, flash().wue);
  return f;
}

Interval integer_pct(const Interval& pct) { return round_interval(present_pct(pct), 0); }

void integer_range(Check& c, const Interval& pct, const std::string& lo, const std::string& hi,
                   const std::string& what) {
  c.range(integer_pct(pct), 0, lo, hi, what);
}

std::string replace_total(const std::string& text, const std::string& item_id, const Decimal& bump) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind(item_id + " ", 0) == 0 || line.rfind(item_id + "|", 0) == 0) {
      std::vector<std::string> f;
      std::size_t start = 0, pos;
      while ((pos = line.find('|', start)) != std::string::npos) {
        f.push_back(line.substr(start, pos - start));
        start = pos + 1;
      }
      f.push_back(line.substr(start));
      std::string total = f.at(4);
      std::erase(total, ' ');
      std::erase(total, ',');
      f[4] = " " + (Decimal::from_string(total) + bump).to_fixed(2) + " ";
      line.clear();
      for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "|" : "") + f[i];
    }
    out += line + "\n";
  }
  return out;
}

void criterion1(Check& c) {
  const Scenario* hitl = repro_config().find_scenario("hitl");
  c.expect(hitl != nullptr, "hitl scenario missing");
  if (!hitl) return;
  c.near(cloud_energy_per_doc(hitl->stages, flash().pue), 0.000545, 1e-9, "per-doc kWh");
  c.near(apply_pue(watt_hours(0.5), 1.09).hi(), 0.000545, 1e-9, "0.5 Wh x PUE");
}

void criterion2(Check& c) {
  const auto hitl = scenario("hitl");
  c.near(hitl.energy_per_doc_kwh * static_cast<double>(5000), 2.725, 1e-6, "daily cloud kWh");
  const auto prompts = co2_from_prompts(5000, flash());
  c.near(prompts.hi(), 150.0, 1e-12, "per-prompt CO2 g");
  c.near(as_kilograms(prompts).hi(), 0.15, 1e-15, "per-prompt CO2 kg");
}

void criterion3(Check& c) {
  const auto manual = present(scenario("manual"), flash());
  const auto hitl = present(scenario("hitl"), flash());
  c.range(manual.operators, 0, "70", "400", "manual operators");
  c.range(hitl.operators, 0, "7", "28", "hitl operators");
  c.range(manual.energy_kwh, 1, "36.3", "194.7", "manual energy");
  c.range(hitl.energy_kwh, 1, "6.1", "16.2", "hitl energy");
  c.range(manual.co2_kg, 1, "10.5", "56.1", "manual co2");
  c.range(hitl.co2_kg, 1, "1.8", "4.7", "hitl co2");
  c.range(hitl.water_l, 1, "1.1", "4.9", "hitl water");
  c.range(manual.water_l, 1, "6.5", "58.4", "manual water (implemented convention)");
  c.deviation("manual-water-lower-bound");
}

void criterion4(Check& c) {
  const auto agentic = scenario("agentic");
  c.near(agentic.energy_per_doc_kwh, 0.001345, 1e-12, "per-doc kWh");
  const auto shown = present(agentic, flash());
  c.range(shown.energy_kwh, 1, "10.1", "20.2", "daily energy");
  c.expect(std::abs(shown.energy_kwh.lo() - 9.8) <= 0.05 * 9.8, "daily lo within 5% of 9.8");
  c.expect(std::abs(shown.energy_kwh.hi() - 20.5) <= 0.05 * 20.5, "daily hi within 5% of 20.5");
  c.deviation("agentic-daily-energy");
}

void criterion5(Check& c) {
  const auto d = thinking_delta(18000, 10000, flash());
  c.digits(d.base_energy.hi() * 1000, 2, "4.32", "off Wh");
  c.digits(d.thinking_energy.hi() * 1000, 2, "6.72", "on Wh");
  c.expect(d.pct_increase.has_value(), "pct defined");
  if (d.pct_increase) {
    c.digits(*d.pct_increase, 1, "55.6", "pct");
    c.near(*d.pct_increase, 56.0, 1.0, "pct vs published 56");
  }
  c.near(d.base_co2.hi(), 1.24, 0.01, "off CO2 g");
  c.near(d.thinking_co2.hi(), 1.94, 0.01, "on CO2 g");
  const auto ml = [](const Water& w) { return as_milliliters(w); };
  c.near(ml(d.base_water).lo(), 0.78, 0.01, "off water lo");
  c.near(ml(d.base_water).hi(), 1.30, 0.01, "off water hi");
  c.near(ml(d.thinking_water).lo(), 1.21, 0.01, "on water lo");
  c.near(ml(d.thinking_water).hi(), 2.02, 0.01, "on water hi");
  c.near(ml(d.delta_water).lo(), 0.43, 0.01, "saving lo");
  c.near(ml(d.delta_water).hi(), 0.72, 0.01, "saving hi");
}

void criterion6(Check& c) {
  // Energy and CO2 columns of the reduction table are computed from the
  // published daily rows.
  const auto manual = published_row("manual", 36.3, 194.7);
  const auto hitl = published_row("hitl", 6.1, 16.2);
  const auto agentic = published_row("agentic", 9.8, 20.5);
  const auto r_hitl = compare_scenarios(manual, hitl);
  const auto r_agentic = compare_scenarios(manual, agentic);
  const auto inc = incremental_cost(hitl, agentic);
  integer_range(c, r_hitl.energy_pct, "83", "92", "hitl energy reduction");
  integer_range(c, r_hitl.co2_pct, "83", "92", "hitl co2 reduction");
  integer_range(c, r_agentic.energy_pct, "73", "90", "agentic energy reduction");
  integer_range(c, r_agentic.co2_pct, "73", "90", "agentic co2 reduction");
  integer_range(c, inc.energy_pct, "27", "61", "incremental energy");
  integer_range(c, inc.co2_pct, "27", "61", "incremental co2");

  // Water under the implemented pairing convention, from the modelled rows.
  const auto m_manual = scenario("manual"), m_hitl = scenario("hitl"), m_agentic = scenario("agentic");
  c.range(present_pct(compare_scenarios(m_manual, m_hitl).water_pct), 1, "83.2", "91.7", "hitl water reduction");
  c.range(present_pct(compare_scenarios(m_manual, m_agentic).water_pct), 1, "72.2", "89.6",
          "agentic water reduction");
  c.range(present_pct(incremental_cost(m_hitl, m_agentic).water_pct), 1, "24.7", "65.7", "incremental water");
  c.deviation("hitl-water-reduction");
  c.deviation("agentic-water-reduction");
  c.deviation("incremental-water");
  c.deviation("agentic-reduction-model");
}

void criterion7(Check& c) {
  const TokenLedger l{9030, 1259, 217, 1400, LedgerSource::measured};
  c.expect(l.total() == 11906, "total 11906");
  const auto s = ledger_shares(l);
  c.digits(s.document, 1, "75.8", "document share");
  c.digits(s.prompt, 1, "10.6", "prompt share");
  c.digits(s.output, 1, "1.8", "output share");
  c.digits(s.thinking, 1, "11.8", "thinking share");
  const auto fp = ledger_footprint(l, builtin_profiles().at(kUsecaseProfile));
  c.near(fp.energy.hi(), 0.35718, 1e-12, "energy kWh");
  c.near(fp.energy.hi(), 0.3572, 5e-5, "energy vs published 0.3572");
  c.near(fp.co2.hi(), 102.87, 0.01, "CO2 g");
  c.near(fp.water.lo(), 0.0643, 1e-4, "water lo L");
  c.near(fp.water.hi(), 0.1072, 1e-4, "water hi L");
  c.near(normalize_energy(fp.energy, 1.15, 1.5).hi(), 0.2071, 5e-4, "normalised kWh");
}

void criterion8(Check& c) {
  const auto text = read_text_file(kRoot + "/fixtures/proforma_invoice.txt");
  const auto prompt = read_text_file(kRoot + "/fixtures/extraction_prompt.txt");
  const auto result = run_pipeline(text, prompt, load_ledger(kRoot + "/fixtures/ledger.json"),
                                   builtin_profiles().at(kUsecaseProfile));
  c.expect(result.items.size() == 15, fmt::format("15 items, got {}", result.items.size()));
  c.expect(result.all_verified(), "all items verify at 0.01");
  c.expect(result.output_json == read_text_file(kRoot + "/fixtures/extraction_output.json"),
           "output JSON byte-identical to reference");
  const auto bump = Decimal::from_string("0.02");
  for (const auto& item : result.items) {
    const auto v = verify_items(parse_invoice(replace_total(text, item.item_id, bump)).items);
    std::size_t failing = 0;
    bool right_one = false;
    for (const auto& x : v) {
      if (!x.ok) {
        ++failing;
        right_one = x.item_id == item.item_id;
      }
    }
    c.expect(failing == 1 && right_one, "mutating " + item.item_id + " flips exactly that item");
  }
}

void criterion9(Check& c) {
  constexpr int kCases = 10'000;
  std::mt19937_64 rng(20260101);
  const auto real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  const auto count = [&](std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(0, hi)(rng); };
  const auto interval = [&](double lo, double hi) {
    const double a = real(lo, hi), b = real(lo, hi);
    return Interval{std::min(a, b), std::max(a, b)};
  };

  int interval_bad = 0, linear_bad = 0, consistency_bad = 0, roundtrip_bad = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto a = interval(0, 1e6), b = interval(0, 1e6);
    const double k1 = real(0, 100), k2 = k1 + real(0, 100);
    const auto s = a + b;
    if (!(s.lo() <= s.hi()) || !(a + Interval::point(0) == a) || !(a * 1.0 == a) ||
        (a * k1).hi() > (a * k2).hi() || (a * k1).lo() > (a * k2).lo()) {
      ++interval_bad;
    }

    const EnergyRate rate(real(0.01, 50));
    const auto t1 = count(1'000'000), t2 = count(1'000'000);
    const double whole = inference_energy(t1 + t2, rate).hi();
    const double parts = inference_energy(t1, rate).hi() + inference_energy(t2, rate).hi();
    if (std::abs(whole - parts) > 4 * std::numeric_limits<double>::epsilon() * std::max(whole, 1e-300)) {
      ++linear_bad;
    }

    const auto profile = make_profile(real(0.01, 50), real(1, 2), interval(0.01, 2), real(1, 900), real(0, 1));
    const TokenLedger l{count(200'000), count(20'000), count(20'000), count(50'000), LedgerSource::measured};
    const auto fp = ledger_footprint(l, profile);
    const double kwh = static_cast<double>(l.total()) * profile.rate.wh_per_kilo_token() / 1e6;
    if (std::abs(fp.energy.hi() - kwh) > 1e-12 * std::max(1.0, kwh) ||
        std::abs(fp.co2.hi() - kwh * profile.emission_factor) > 1e-9 * std::max(1.0, fp.co2.hi()) ||
        std::abs(fp.water.hi() - kwh * profile.wue.hi()) > 1e-12 * std::max(1.0, fp.water.hi())) {
      ++consistency_bad;
    }

    Config cfg;
    cfg.profiles["p"] = profile;
    cfg.default_profile = "p";
    Scenario sc;
    sc.name = "s";
    sc.daily_volume = count(100'000);
    sc.workforce.per_doc_time_s = interval(1, 3600);
    sc.workforce.buffer = real(1, 1.5);
    sc.stages.push_back({"model", real(0, 5), count(1) == 1});
    sc.overhead_kwh_per_day = real(0, 10);
    cfg.scenarios.push_back(sc);
    if (!(config_from_json(json::parse(config_to_json(cfg).dump())) == cfg)) ++roundtrip_bad;
  }
  c.expect(interval_bad == 0, fmt::format("interval closure/identity/monotonicity: {} failures", interval_bad));
  c.expect(linear_bad == 0, fmt::format("inference_energy linearity: {} failures", linear_bad));
  c.expect(consistency_bad == 0, fmt::format("footprint consistency: {} failures", consistency_bad));
  c.expect(roundtrip_bad == 0, fmt::format("config round trip: {} failures", roundtrip_bad));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "per-document HITL energy 0.000545 kWh", criterion1},
      {2, "daily cloud energy 2.725 kWh and per-prompt CO2 0.15 kg", criterion2},
      {3, "manual and HITL scenario table digits", criterion3},
      {4, "agentic per-doc and daily energy", criterion4},
      {5, "thinking-mode delta", criterion5},
      {6, "reduction and incremental percentages", criterion6},
      {7, "use-case ledger, shares and footprint", criterion7},
      {8, "invoice extraction and verification", criterion8},
      {9, "property suites over 10,000 random cases", criterion9},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures().empty();
    std::printf("%s [%d] %s (%.1f ms)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, ms);
    for (const auto& f : check.failures()) std::printf("    %s\n", f.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
