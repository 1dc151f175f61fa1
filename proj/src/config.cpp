// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "greendoc/error.hpp"

namespace greendoc {

namespace {

std::string child(const std::string& pointer, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

// Walks one JSON object: hands out fields by name and, on close(), rejects
// any key nobody asked about.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string pointer) : j_(j), pointer_(std::move(pointer)) {
    if (!j_.is_object()) throw SchemaError(pointer_.empty() ? "/" : pointer_, "expected an object");
  }

  const json& required(std::string_view key) {
    known_.emplace(key);
    auto it = j_.find(std::string(key));
    if (it == j_.end()) throw SchemaError(child(pointer_, key), fmt::format("missing required key '{}'", key));
    return *it;
  }

  const json* optional(std::string_view key) {
    known_.emplace(key);
    auto it = j_.find(std::string(key));
    return it == j_.end() || it->is_null() ? nullptr : &*it;
  }

  std::string at(std::string_view key) const { return child(pointer_, key); }

  void close() const {
    for (const auto& [k, v] : j_.items()) {
      if (!known_.count(k)) throw SchemaError(child(pointer_, k), fmt::format("unknown key '{}'", k));
    }
  }

 private:
  const json& j_;
  std::string pointer_;
  std::set<std::string, std::less<>> known_;
};

double number(const json& j, const std::string& pointer) {
  if (!j.is_number()) throw SchemaError(pointer, "expected a number");
  return j.get<double>();
}

std::uint64_t count(const json& j, const std::string& pointer) {
  if (!j.is_number_unsigned()) throw SchemaError(pointer, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::string text(const json& j, const std::string& pointer) {
  if (!j.is_string()) throw SchemaError(pointer, "expected a string");
  return j.get<std::string>();
}

bool flag(const json& j, const std::string& pointer) {
  if (!j.is_boolean()) throw SchemaError(pointer, "expected true or false");
  return j.get<bool>();
}

Interval pair(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(pointer, "expected [lo, hi]");
  const double lo = number(j[0], child(pointer, 0));
  const double hi = number(j[1], child(pointer, 1));
  try {
    return Interval{lo, hi};
  } catch (const InvariantError& e) {
    throw InvariantError(pointer + ": " + e.what());
  }
}

json pair_json(const Interval& i) { return json::array({i.lo(), i.hi()}); }

// Runs a validation callback and prefixes its invariant errors with a pointer.
template <class F>
void check(const std::string& pointer, F&& f) {
  try {
    f();
  } catch (const InvariantError& e) {
    throw InvariantError((pointer.empty() ? std::string("/") : pointer) + ": " + e.what());
  }
}

WorkforceParams workforce_from_json(const json& j, const std::string& pointer) {
  ObjectReader r(j, pointer);
  WorkforceParams w;
  w.per_doc_time_s = pair(r.required("per_doc_time_s"), r.at("per_doc_time_s"));
  if (auto* v = r.optional("shift_hours")) w.shift_hours = number(*v, r.at("shift_hours"));
  if (auto* v = r.optional("productive_hours")) w.productive_hours = number(*v, r.at("productive_hours"));
  if (auto* v = r.optional("buffer")) w.buffer = number(*v, r.at("buffer"));
  if (auto* v = r.optional("laptop_kwh_per_day")) w.laptop_kwh_per_day = number(*v, r.at("laptop_kwh_per_day"));
  r.close();
  return w;
}

json workforce_to_json(const WorkforceParams& w) {
  return json{{"shift_hours", w.shift_hours},
              {"productive_hours", w.productive_hours},
              {"buffer", w.buffer},
              {"per_doc_time_s", pair_json(w.per_doc_time_s)},
              {"laptop_kwh_per_day", w.laptop_kwh_per_day}};
}

}  // namespace

const FootprintProfile& Config::profile(const std::string& name) const {
  auto it = profiles.find(name);
  if (it == profiles.end()) throw SchemaError("/profiles", fmt::format("unknown profile '{}'", name));
  return it->second;
}

const Scenario* Config::find_scenario(std::string_view name) const {
  for (const auto& s : scenarios) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

json profile_to_json(const FootprintProfile& p) {
  return json{{"rate_wh_per_ktok", p.rate.wh_per_kilo_token()},
              {"pue", p.pue},
              {"wue_l_per_kwh", pair_json(p.wue)},
              {"emission_factor_g_per_kwh", p.emission_factor},
              {"co2_per_prompt_g", p.co2_per_prompt_g}};
}

FootprintProfile profile_from_json(const json& j, const std::string& pointer) {
  ObjectReader r(j, pointer);
  const double rate = number(r.required("rate_wh_per_ktok"), r.at("rate_wh_per_ktok"));
  const double pue = number(r.required("pue"), r.at("pue"));
  const Interval wue = pair(r.required("wue_l_per_kwh"), r.at("wue_l_per_kwh"));
  const double ef = number(r.required("emission_factor_g_per_kwh"), r.at("emission_factor_g_per_kwh"));
  const double per_prompt = number(r.required("co2_per_prompt_g"), r.at("co2_per_prompt_g"));
  r.close();
  FootprintProfile p;
  check(pointer, [&] { p = make_profile(rate, pue, wue, ef, per_prompt); });
  return p;
}

json scenario_to_json(const Scenario& s) {
  json stages = json::array();
  for (const auto& st : s.stages) {
    json o{{"name", st.name}, {"energy_wh_per_doc", st.energy_wh_per_doc}};
    if (st.it_side) o["it_side"] = true;
    stages.push_back(std::move(o));
  }
  return json{{"name", s.name},
              {"daily_volume", s.daily_volume},
              {"workforce", workforce_to_json(s.workforce)},
              {"stages", std::move(stages)},
              {"overhead_kwh_per_day", s.overhead_kwh_per_day},
              {"operators_override", s.operators_override ? pair_json(*s.operators_override) : json(nullptr)}};
}

Scenario scenario_from_json(const json& j, const std::string& pointer) {
  ObjectReader r(j, pointer);
  Scenario s;
  s.name = text(r.required("name"), r.at("name"));
  s.workforce = workforce_from_json(r.required("workforce"), r.at("workforce"));
  if (auto* v = r.optional("daily_volume")) s.daily_volume = count(*v, r.at("daily_volume"));
  if (auto* v = r.optional("overhead_kwh_per_day")) {
    s.overhead_kwh_per_day = number(*v, r.at("overhead_kwh_per_day"));
  }
  if (auto* v = r.optional("operators_override")) {
    s.operators_override = pair(*v, r.at("operators_override"));
  }
  if (auto* v = r.optional("stages")) {
    const auto base = r.at("stages");
    if (!v->is_array()) throw SchemaError(base, "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      ObjectReader sr((*v)[i], child(base, i));
      PipelineStage st;
      st.name = text(sr.required("name"), sr.at("name"));
      st.energy_wh_per_doc = number(sr.required("energy_wh_per_doc"), sr.at("energy_wh_per_doc"));
      if (auto* f = sr.optional("it_side")) st.it_side = flag(*f, sr.at("it_side"));
      sr.close();
      s.stages.push_back(std::move(st));
    }
  }
  r.close();
  check(pointer, [&] { s.validate(); });
  return s;
}

json ledger_to_json(const TokenLedger& l) {
  return json{{"document", l.document},
              {"prompt", l.prompt},
              {"output", l.output},
              {"thinking", l.thinking},
              {"source", to_string(l.source)}};
}

TokenLedger ledger_from_json(const json& j, const std::string& pointer) {
  ObjectReader r(j, pointer);
  TokenLedger l;
  l.document = count(r.required("document"), r.at("document"));
  l.prompt = count(r.required("prompt"), r.at("prompt"));
  l.output = count(r.required("output"), r.at("output"));
  l.thinking = count(r.required("thinking"), r.at("thinking"));
  l.source = LedgerSource::measured;
  if (auto* v = r.optional("source")) {
    const auto s = text(*v, r.at("source"));
    if (s == "estimated") l.source = LedgerSource::estimated;
    else if (s != "measured") throw SchemaError(r.at("source"), "expected \"measured\" or \"estimated\"");
  }
  r.close();
  return l;
}

Config config_from_json(const json& j, const std::filesystem::path& base_dir) {
  ObjectReader r(j, "");
  Config c;

  const json& profiles = r.required("profiles");
  if (!profiles.is_object() || profiles.empty()) {
    throw SchemaError("/profiles", "expected a non-empty object of named profiles");
  }
  for (const auto& [name, p] : profiles.items()) {
    c.profiles.emplace(name, profile_from_json(p, child("/profiles", name)));
  }

  c.default_profile = text(r.required("default_profile"), "/default_profile");
  if (!c.profiles.count(c.default_profile)) {
    throw SchemaError("/default_profile", fmt::format("unknown profile '{}'", c.default_profile));
  }

  const json& scenarios = r.required("scenarios");
  if (!scenarios.is_array()) throw SchemaError("/scenarios", "expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const auto ptr = child("/scenarios", i);
    const json& entry = scenarios[i];
    Scenario s;
    if (entry.is_string()) {
      const auto file = base_dir / entry.get<std::string>();
      s = scenario_from_json(read_json_file(file), file.filename().string() + "#");
    } else {
      s = scenario_from_json(entry, ptr);
    }
    if (!names.insert(s.name).second) throw SchemaError(ptr, fmt::format("duplicate scenario '{}'", s.name));
    c.scenarios.push_back(std::move(s));
  }
  r.close();
  return c;
}

json config_to_json(const Config& c) {
  json profiles = json::object();
  for (const auto& [name, p] : c.profiles) profiles[name] = profile_to_json(p);
  json scenarios = json::array();
  for (const auto& s : c.scenarios) scenarios.push_back(scenario_to_json(s));
  return json{{"profiles", std::move(profiles)},
              {"default_profile", c.default_profile},
              {"scenarios", std::move(scenarios)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::filesystem::path& path) {
  const auto body = read_text_file(path);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.filename().string() + "#", fmt::format("invalid JSON: {}", e.what()));
  }
}

Config load_config(const std::filesystem::path& path) {
  return config_from_json(read_json_file(path), path.parent_path());
}

TokenLedger load_ledger(const std::filesystem::path& path) {
  return ledger_from_json(read_json_file(path), path.filename().string() + "#");
}

std::string config_hash(const json& j) {
  const std::string canonical = j.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace greendoc
