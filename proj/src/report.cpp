// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/report.hpp"

#include <fmt/format.h>

#include "greendoc/deviations.hpp"
#include "greendoc/error.hpp"
#include "greendoc/presentation.hpp"

namespace greendoc {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "markdown" || s == "md") return Format::markdown;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

const char* file_extension(Format f) {
  switch (f) {
    case Format::markdown: return "md";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "txt";
}

const char* to_string(TableKind k) {
  switch (k) {
    case TableKind::scenario_table: return "scenario_table";
    case TableKind::reduction_table: return "reduction_table";
    case TableKind::token_table: return "token_table";
  }
  return "?";
}

ReportBundle build_bundle(const Config& config, const std::string& profile_name,
                          const std::string& baseline) {
  const Scenario* base = config.find_scenario(baseline);
  if (base == nullptr) throw UnknownScenarioError(baseline);

  ReportBundle b;
  b.profile = config.profile(profile_name);
  b.metadata.profile_name = profile_name;
  b.metadata.config_hash = config_hash(
      json{{"config", config_to_json(config)}, {"profile", profile_name}, {"baseline", baseline}});

  const DailyFootprint* base_fp = nullptr;
  std::vector<const DailyFootprint*> others;
  b.scenarios.reserve(config.scenarios.size());
  for (const auto& s : config.scenarios) b.scenarios.push_back(evaluate_scenario(s, b.profile));
  for (const auto& f : b.scenarios) {
    if (f.scenario == baseline) base_fp = &f;
    else others.push_back(&f);
  }

  for (const auto* f : others) {
    b.comparisons.push_back({baseline, f->scenario, ComparisonKind::reduction, compare_scenarios(*base_fp, *f)});
  }
  for (std::size_t i = 1; i < others.size(); ++i) {
    b.comparisons.push_back({others[i - 1]->scenario, others[i]->scenario, ComparisonKind::incremental,
                             incremental_cost(*others[i - 1], *others[i])});
  }
  return b;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(cells[i]);
  }
  return out + "\n";
}

json range_json(const Interval& i) { return json::array({i.lo(), i.hi()}); }

std::string per_doc_text(const std::optional<double>& v) { return v ? format_trimmed(*v, 9) : "N/A"; }

std::vector<PresentedFootprint> presented(const ReportBundle& b) {
  std::vector<PresentedFootprint> rows;
  for (const auto& f : b.scenarios) rows.push_back(present(f, b.profile));
  return rows;
}

std::string comparison_label(const ComparisonRecord& c) {
  return fmt::format("{} vs {} ({})", c.candidate, c.reference,
                     c.kind == ComparisonKind::reduction ? "reduction" : "incremental");
}

json scenario_rows_json(const ReportBundle& b) {
  json rows = json::array();
  for (const auto& p : presented(b)) {
    rows.push_back(json{{"scenario", p.scenario},
                        {"operators", range_json(p.operators)},
                        {"energy_kwh", range_json(p.energy_kwh)},
                        {"co2_kg", range_json(p.co2_kg)},
                        {"water_l", range_json(p.water_l)},
                        {"energy_per_doc_kwh", p.energy_per_doc_kwh ? json(*p.energy_per_doc_kwh) : json(nullptr)}});
  }
  return rows;
}

json reduction_rows_json(const ReportBundle& b) {
  json rows = json::array();
  for (const auto& c : b.comparisons) {
    rows.push_back(json{{"comparison", comparison_label(c)},
                        {"kind", c.kind == ComparisonKind::reduction ? "reduction" : "incremental"},
                        {"reference", c.reference},
                        {"candidate", c.candidate},
                        {"energy_pct", range_json(present_pct(c.values.energy_pct))},
                        {"co2_pct", range_json(present_pct(c.values.co2_pct))},
                        {"water_pct", range_json(present_pct(c.values.water_pct))}});
  }
  return rows;
}

struct TokenRow {
  const char* label;
  const char* key;
  TokenCount tokens;
  double share;
};

std::vector<TokenRow> token_rows(const TokenLedger& l) {
  const auto s = ledger_shares(l);
  return {{"Document (input)", "document", l.document, s.document},
          {"Prompt (input)", "prompt", l.prompt, s.prompt},
          {"Output", "output", l.output, s.output},
          {"Thinking (hidden)", "thinking", l.thinking, s.thinking}};
}

json token_rows_json(const TokenLedger& l) {
  json rows = json::array();
  for (const auto& r : token_rows(l)) {
    rows.push_back(json{{"component", r.key}, {"tokens", r.tokens}, {"percent", round_half_up(r.share, 1)}});
  }
  return json{{"source", to_string(l.source)}, {"total", l.total()}, {"rows", std::move(rows)}};
}

std::string scenario_table(const ReportBundle& b, Format format) {
  const auto rows = presented(b);
  switch (format) {
    case Format::markdown: {
      std::vector<std::string> head{"Metric"};
      for (const auto& p : rows) head.push_back(p.scenario);
      std::string out = md_row(head) + md_rule(head.size());
      const auto line = [&](const std::string& metric, auto cell) {
        std::vector<std::string> cells{metric};
        for (const auto& p : rows) cells.push_back(cell(p));
        out += md_row(cells);
      };
      line("Operators", [](const PresentedFootprint& p) { return format_range(p.operators, 0); });
      line("Energy (kWh/day)", [](const PresentedFootprint& p) { return format_range(p.energy_kwh, 1); });
      line("CO2 (kg/day)", [](const PresentedFootprint& p) { return format_range(p.co2_kg, 1); });
      line("Water (L/day)", [](const PresentedFootprint& p) { return format_range(p.water_l, 1); });
      line("Energy per Doc (kWh/doc)",
           [](const PresentedFootprint& p) { return per_doc_text(p.energy_per_doc_kwh); });
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"scenario", "operators_lo", "operators_hi", "energy_kwh_lo", "energy_kwh_hi",
                                 "co2_kg_lo", "co2_kg_hi", "water_l_lo", "water_l_hi", "energy_per_doc_kwh"});
      for (const auto& p : rows) {
        out += csv_row({p.scenario, format_fixed(p.operators.lo(), 0), format_fixed(p.operators.hi(), 0),
                        format_fixed(p.energy_kwh.lo(), 1), format_fixed(p.energy_kwh.hi(), 1),
                        format_fixed(p.co2_kg.lo(), 1), format_fixed(p.co2_kg.hi(), 1),
                        format_fixed(p.water_l.lo(), 1), format_fixed(p.water_l.hi(), 1),
                        p.energy_per_doc_kwh ? format_trimmed(*p.energy_per_doc_kwh, 9) : ""});
      }
      return out;
    }
    case Format::json:
      return json{{"table", "scenario_table"}, {"rows", scenario_rows_json(b)}}.dump(2) + "\n";
  }
  return {};
}

std::string reduction_table(const ReportBundle& b, Format format) {
  switch (format) {
    case Format::markdown: {
      std::string out = md_row({"Comparison", "Energy (%)", "CO2 (%)", "Water (%)"}) + md_rule(4);
      for (const auto& c : b.comparisons) {
        const bool plus = c.kind == ComparisonKind::incremental;
        out += md_row({comparison_label(c), format_range(present_pct(c.values.energy_pct), 1, plus),
                       format_range(present_pct(c.values.co2_pct), 1, plus),
                       format_range(present_pct(c.values.water_pct), 1, plus)});
      }
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"comparison", "kind", "energy_pct_lo", "energy_pct_hi", "co2_pct_lo",
                                 "co2_pct_hi", "water_pct_lo", "water_pct_hi"});
      for (const auto& c : b.comparisons) {
        const auto e = present_pct(c.values.energy_pct);
        const auto co2 = present_pct(c.values.co2_pct);
        const auto w = present_pct(c.values.water_pct);
        out += csv_row({comparison_label(c), c.kind == ComparisonKind::reduction ? "reduction" : "incremental",
                        format_fixed(e.lo(), 1), format_fixed(e.hi(), 1), format_fixed(co2.lo(), 1),
                        format_fixed(co2.hi(), 1), format_fixed(w.lo(), 1), format_fixed(w.hi(), 1)});
      }
      return out;
    }
    case Format::json:
      return json{{"table", "reduction_table"}, {"rows", reduction_rows_json(b)}}.dump(2) + "\n";
  }
  return {};
}

std::string token_table(const TokenLedger& l, Format format) {
  const auto rows = token_rows(l);
  switch (format) {
    case Format::markdown: {
      std::string out = md_row({"Component", "Tokens", "Percent"}) + md_rule(3);
      for (const auto& r : rows) out += md_row({r.label, std::to_string(r.tokens), format_fixed(r.share, 1)});
      out += md_row({"Total", std::to_string(l.total()), "100.0"});
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"component", "tokens", "percent"});
      for (const auto& r : rows) out += csv_row({r.key, std::to_string(r.tokens), format_fixed(r.share, 1)});
      out += csv_row({"total", std::to_string(l.total()), "100.0"});
      return out;
    }
    case Format::json:
      return json{{"table", "token_table"}, {"ledger", token_rows_json(l)}}.dump(2) + "\n";
  }
  return {};
}

json deviations_json() {
  json out = json::array();
  for (const auto& d : documented_deviations()) {
    out.push_back(json{{"id", d.id},
                       {"quantity", d.quantity},
                       {"published", d.published},
                       {"implemented", d.implemented},
                       {"note", d.note}});
  }
  return out;
}

}  // namespace

std::string emit_table(const ReportBundle& bundle, TableKind which, Format format) {
  switch (which) {
    case TableKind::scenario_table:
      if (bundle.scenarios.empty()) throw Error("no scenarios");
      return scenario_table(bundle, format);
    case TableKind::reduction_table:
      if (bundle.comparisons.empty()) throw Error("no comparisons");
      return reduction_table(bundle, format);
    case TableKind::token_table:
      if (!bundle.usecase) throw Error("no use case");
      return token_table(bundle.usecase->ledger, format);
  }
  throw Error("unknown table");
}

std::string emit_plot_data(const ReportBundle& bundle) {
  if (bundle.scenarios.empty()) throw Error("no scenarios");
  json series = json::array();
  for (const auto& p : presented(bundle)) {
    const auto add = [&](const char* metric, const Interval& v) {
      series.push_back(json{{"scenario", p.scenario}, {"metric", metric}, {"lo", v.lo()}, {"hi", v.hi()},
                            {"mid", v.mid()}});
    };
    add("energy_kwh_per_day", p.energy_kwh);
    add("co2_kg_per_day", p.co2_kg);
    add("water_l_per_day", p.water_l);
  }
  return json{{"series", std::move(series)}}.dump(2) + "\n";
}

std::string emit_bundle_json(const ReportBundle& bundle) {
  json meta{{"profile", bundle.metadata.profile_name}, {"config_hash", bundle.metadata.config_hash}};
  if (!bundle.metadata.timestamp.empty()) meta["timestamp"] = bundle.metadata.timestamp;
  json out{{"metadata", std::move(meta)},
           {"profile", profile_to_json(bundle.profile)},
           {"scenario_table", scenario_rows_json(bundle)},
           {"reduction_table", reduction_rows_json(bundle)},
           {"deviations", deviations_json()}};
  if (bundle.usecase) out["token_table"] = token_rows_json(bundle.usecase->ledger);
  return out.dump(2) + "\n";
}

std::string emit_deviations(Format format) {
  const auto& all = documented_deviations();
  switch (format) {
    case Format::markdown: {
      std::string out = "Known differences from published reference values:\n\n";
      for (const auto& d : all) {
        out += fmt::format("- `{}` {}: published {}, implemented {}. {}\n", d.id, d.quantity, d.published,
                           d.implemented, d.note);
      }
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"id", "quantity", "published", "implemented", "note"});
      for (const auto& d : all) out += csv_row({d.id, d.quantity, d.published, d.implemented, d.note});
      return out;
    }
    case Format::json:
      return json{{"deviations", deviations_json()}}.dump(2) + "\n";
  }
  return {};
}

std::string emit_usecase_report(const ExtractionResult& r, const UsecaseReportOptions& options, Format format) {
  const auto& fp = r.footprint;
  const Energy normalized = normalize_energy(fp.energy, options.thinking_factor, options.complexity_factor);
  const Interval water_ml = as_milliliters(fp.water);

  switch (format) {
    case Format::markdown: {
      std::string out = fmt::format("# Use-case footprint\n\nProfile: {}\nLedger: {}\n\n", options.profile_name,
                                    to_string(r.ledger.source));
      if (r.ledger.total() > 0) out += token_table(r.ledger, Format::markdown) + "\n";
      out += md_row({"Metric", "Value"}) + md_rule(2);
      out += md_row({"Energy (kWh)", format_trimmed(fp.energy.hi(), 6)});
      out += md_row({"Energy (Wh)", format_trimmed(fp.energy.hi() * 1000, 3)});
      out += md_row({"CO2 (g)", format_fixed(fp.co2.hi(), 2)});
      out += md_row({"Water (L)", format_range(fp.water.value(), 4)});
      out += md_row({"Water (mL)", format_range(water_ml, 1)});
      out += md_row({fmt::format("Normalised energy (kWh / ({} x {}))", format_trimmed(options.thinking_factor, 3),
                                 format_trimmed(options.complexity_factor, 3)),
                     format_fixed(normalized.hi(), 4)});
      out += "\n" + md_row({"Stage", "Tokens", "Energy (Wh)", "Detail"}) + md_rule(4);
      for (const auto& s : r.stages) {
        out += md_row({s.stage, std::to_string(s.tokens), format_trimmed(s.energy.hi() * 1000, 3), s.detail});
      }
      out += "\n" + md_row({"Item", "Verified", "Delta"}) + md_rule(3);
      for (const auto& v : r.verification) out += md_row({v.item_id, v.ok ? "yes" : "NO", v.delta.to_fixed(2)});
      for (const auto& w : r.warnings) out += "\nWarning: " + w + "\n";
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"metric", "value"});
      out += csv_row({"ledger_source", to_string(r.ledger.source)});
      out += csv_row({"tokens_total", std::to_string(r.ledger.total())});
      out += csv_row({"energy_kwh", format_trimmed(fp.energy.hi(), 6)});
      out += csv_row({"co2_g", format_fixed(fp.co2.hi(), 2)});
      out += csv_row({"water_l_lo", format_fixed(fp.water.lo(), 4)});
      out += csv_row({"water_l_hi", format_fixed(fp.water.hi(), 4)});
      out += csv_row({"normalized_energy_kwh", format_fixed(normalized.hi(), 4)});
      out += csv_row({"items", std::to_string(r.items.size())});
      out += csv_row({"items_failing", std::to_string(r.failing_items().size())});
      return out;
    }
    case Format::json: {
      json verification = json::array();
      for (const auto& v : r.verification) {
        verification.push_back(json{{"item_id", v.item_id}, {"ok", v.ok}, {"delta", v.delta.to_fixed(2)}});
      }
      json stages = json::array();
      for (const auto& s : r.stages) {
        stages.push_back(json{{"stage", s.stage}, {"tokens", s.tokens}, {"energy_kwh", s.energy.hi()},
                              {"detail", s.detail}});
      }
      json out{{"profile", options.profile_name},
               {"ledger", ledger_to_json(r.ledger)},
               {"footprint",
                json{{"energy_kwh", fp.energy.hi()},
                     {"co2_g", fp.co2.hi()},
                     {"water_l", json::array({fp.water.lo(), fp.water.hi()})}}},
               {"normalized_energy_kwh", normalized.hi()},
               {"normalization", json{{"thinking_factor", options.thinking_factor},
                                      {"complexity_factor", options.complexity_factor}}},
               {"items", r.items.size()},
               {"verification", std::move(verification)},
               {"stages", std::move(stages)},
               {"warnings", r.warnings}};
      if (r.ledger.total() > 0) out["token_table"] = token_rows_json(r.ledger);
      return out.dump(2) + "\n";
    }
  }
  return {};
}

std::string emit_thinking_delta(const ThinkingDelta& d, Format format) {
  const auto wh = [](const Energy& e) { return format_fixed(e.hi() * 1000, 2); };
  const auto g = [](const Carbon& c) { return format_fixed(c.hi(), 2); };
  const auto ml = [](const Water& w) { return format_range(as_milliliters(w), 2); };
  const std::string pct = d.pct_increase ? format_fixed(*d.pct_increase, 1) : "undefined";

  switch (format) {
    case Format::markdown: {
      std::string out = md_row({"Metric", "Thinking off", "Thinking on", "Delta"}) + md_rule(4);
      out += md_row({"Energy (Wh)", wh(d.base_energy), wh(d.thinking_energy), wh(d.delta_energy)});
      out += md_row({"CO2 (g)", g(d.base_co2), g(d.thinking_co2), g(d.delta_co2)});
      out += md_row({"Water (mL)", ml(d.base_water), ml(d.thinking_water), ml(d.delta_water)});
      out += md_row({"Increase (%)", "", "", pct});
      return out;
    }
    case Format::csv: {
      std::string out = csv_row({"metric", "off", "on", "delta"});
      out += csv_row({"energy_wh", wh(d.base_energy), wh(d.thinking_energy), wh(d.delta_energy)});
      out += csv_row({"co2_g", g(d.base_co2), g(d.thinking_co2), g(d.delta_co2)});
      const auto mlv = [](const Water& w) { return as_milliliters(w); };
      out += csv_row({"water_ml_lo", format_fixed(mlv(d.base_water).lo(), 2), format_fixed(mlv(d.thinking_water).lo(), 2),
                      format_fixed(mlv(d.delta_water).lo(), 2)});
      out += csv_row({"water_ml_hi", format_fixed(mlv(d.base_water).hi(), 2), format_fixed(mlv(d.thinking_water).hi(), 2),
                      format_fixed(mlv(d.delta_water).hi(), 2)});
      out += csv_row({"increase_pct", "", "", pct});
      return out;
    }
    case Format::json: {
      const auto e = [](const Energy& x) { return x.hi() * 1000; };
      const auto w = [](const Water& x) {
        const auto v = as_milliliters(x);
        return json::array({v.lo(), v.hi()});
      };
      return json{{"energy_wh", {{"off", e(d.base_energy)}, {"on", e(d.thinking_energy)}, {"delta", e(d.delta_energy)}}},
                  {"co2_g", {{"off", d.base_co2.hi()}, {"on", d.thinking_co2.hi()}, {"delta", d.delta_co2.hi()}}},
                  {"water_ml", {{"off", w(d.base_water)}, {"on", w(d.thinking_water)}, {"delta", w(d.delta_water)}}},
                  {"increase_pct", d.pct_increase ? json(*d.pct_increase) : json("undefined")}}
                 .dump(2) +
             "\n";
    }
  }
  return {};
}

}  // namespace greendoc
