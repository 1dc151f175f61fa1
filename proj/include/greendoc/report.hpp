// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greendoc/config.hpp"
#include "greendoc/footprint.hpp"
#include "greendoc/pipeline.hpp"
#include "greendoc/scenario.hpp"

namespace greendoc {

enum class TableKind { scenario_table, reduction_table, token_table };
enum class Format { markdown, csv, json };

/// Parses "markdown" / "csv" / "json"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view s);
const char* file_extension(Format f);
const char* to_string(TableKind k);

enum class ComparisonKind { reduction, incremental };

struct ComparisonRecord {
  std::string reference;  // baseline (reduction) or lighter scenario (incremental)
  std::string candidate;
  ComparisonKind kind = ComparisonKind::reduction;
  MetricComparison values;
};

struct ReportMetadata {
  std::string profile_name;
  std::string config_hash;
  std::string timestamp;  // caller supplied; omitted from output when empty
};

struct ReportBundle {
  FootprintProfile profile;
  std::vector<DailyFootprint> scenarios;
  std::vector<ComparisonRecord> comparisons;
  std::optional<ExtractionResult> usecase;
  ReportMetadata metadata;
};

/// Evaluates every scenario of `config` under `profile_name`, then adds a
/// reduction record for each scenario against `baseline` and an incremental
/// record for each consecutive pair of non-baseline scenarios. Throws
/// UnknownScenarioError when `baseline` is not defined.
ReportBundle build_bundle(const Config& config, const std::string& profile_name,
                          const std::string& baseline);

/// Deterministic text rendering. Throws Error when the bundle lacks the data
/// ("no scenarios", "no comparisons", "no use case").
std::string emit_table(const ReportBundle& bundle, TableKind which, Format format);

/// JSON series of {scenario, metric, lo, hi, mid}: three metrics per scenario,
/// same numbers as the scenario table.
std::string emit_plot_data(const ReportBundle& bundle);

/// Everything in one JSON document, including metadata and the deviation log.
std::string emit_bundle_json(const ReportBundle& bundle);

/// Deviation log as a markdown list, CSV or JSON.
std::string emit_deviations(Format format);

/// Use-case footprint report: ledger, footprint, normalised energy,
/// verification and stage meters.
struct UsecaseReportOptions {
  std::string profile_name;
  double thinking_factor = 1.15;
  double complexity_factor = 1.5;
};
std::string emit_usecase_report(const ExtractionResult& result, const UsecaseReportOptions& options,
                                Format format);

std::string emit_thinking_delta(const ThinkingDelta& delta, Format format);

}  // namespace greendoc
