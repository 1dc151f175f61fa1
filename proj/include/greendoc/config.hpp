// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "greendoc/footprint.hpp"
#include "greendoc/pipeline.hpp"
#include "greendoc/scenario.hpp"

namespace greendoc {

using json = nlohmann::json;

/// Profiles plus the scenarios to evaluate under them.
struct Config {
  std::map<std::string, FootprintProfile> profiles;
  std::string default_profile;
  std::vector<Scenario> scenarios;

  const FootprintProfile& profile(const std::string& name) const;
  const Scenario* find_scenario(std::string_view name) const;

  friend bool operator==(const Config&, const Config&) = default;
};

// JSON codecs. Readers reject unknown keys and report the JSON pointer of the
// first problem through SchemaError; domain invariants surface as
// InvariantError prefixed with the pointer.

json profile_to_json(const FootprintProfile& p);
FootprintProfile profile_from_json(const json& j, const std::string& pointer = "");

json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const json& j, const std::string& pointer = "");

json ledger_to_json(const TokenLedger& l);
/// The source field is optional; files on disk default to measured.
TokenLedger ledger_from_json(const json& j, const std::string& pointer = "");

/// Top level: {"profiles": {name: profile}, "default_profile": name,
/// "scenarios": [path-or-object, ...]}. String entries are scenario files
/// resolved against `base_dir`.
Config config_from_json(const json& j, const std::filesystem::path& base_dir = {});

/// Inverse of config_from_json with every scenario inlined.
json config_to_json(const Config& c);

json read_json_file(const std::filesystem::path& path);
Config load_config(const std::filesystem::path& path);
TokenLedger load_ledger(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Hex SHA-256 of the canonical (sorted-key, compact) serialization.
std::string config_hash(const json& j);

}  // namespace greendoc
