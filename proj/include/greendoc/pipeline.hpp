// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greendoc/footprint.hpp"
#include "greendoc/invoice.hpp"

namespace greendoc {

enum class LedgerSource { measured, estimated };

const char* to_string(LedgerSource s);

/// Token counts per pipeline component for one document.
struct TokenLedger {
  TokenCount document = 0;
  TokenCount prompt = 0;
  TokenCount output = 0;
  TokenCount thinking = 0;  // hidden reasoning
  LedgerSource source = LedgerSource::estimated;

  TokenCount total() const noexcept { return document + prompt + output + thinking; }

  friend bool operator==(const TokenLedger&, const TokenLedger&) = default;
};

/// Component share of the total, in percent (unrounded).
struct LedgerShares {
  double document = 0;
  double prompt = 0;
  double output = 0;
  double thinking = 0;
};

/// Throws InvariantError when the ledger total is zero.
LedgerShares ledger_shares(const TokenLedger& ledger);

struct ResourceFootprint {
  Energy energy;
  Carbon co2;
  Water water;

  friend bool operator==(const ResourceFootprint&, const ResourceFootprint&) = default;
};

/// Token energy at the profile rate, then CO2 and water from that energy.
/// Per-token rates are facility-side figures; PUE is not applied again.
ResourceFootprint ledger_footprint(const TokenLedger& ledger, const FootprintProfile& profile);

/// e / (thinking_factor * complexity_factor). Both factors must be >= 1.
Energy normalize_energy(const Energy& e, double thinking_factor, double complexity_factor);

/// Stage names in execution order.
inline constexpr const char* kStageParser = "parser";
inline constexpr const char* kStageGenerator = "generator";
inline constexpr const char* kStageVerifier = "verifier";
inline constexpr const char* kStageReview = "hitl";

struct StageMeter {
  std::string stage;
  TokenCount tokens = 0;
  Energy energy;
  std::string detail;
};

struct ExtractionResult {
  std::vector<LineItem> items;
  TokenLedger ledger;
  ResourceFootprint footprint;
  std::vector<Verification> verification;
  std::vector<std::string> warnings;
  std::vector<StageMeter> stages;
  std::string output_json;  // items_to_json(items)

  bool all_verified() const;
  std::vector<std::string> failing_items() const;
};

/// Runs parser -> generator -> verifier -> hitl over one document.
///
/// With `ledger_override` the ledger is taken as measured; otherwise document,
/// prompt and output tokens are estimated with count_tokens() and thinking is
/// zero. All token energy is metered on the generator stage. Grammar errors
/// surface as PipelineError attributed to the parser stage.
ExtractionResult run_pipeline(std::string_view document, std::string_view prompt,
                              const std::optional<TokenLedger>& ledger_override,
                              const FootprintProfile& profile);

/// Runs documents concurrently on up to `threads` workers (0 = hardware
/// concurrency). Results are in input order and equal to serial runs.
std::vector<ExtractionResult> run_pipeline_batch(std::span<const std::string> documents,
                                                 std::string_view prompt,
                                                 const FootprintProfile& profile,
                                                 unsigned threads = 0);

}  // namespace greendoc
