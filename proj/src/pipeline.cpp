// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "greendoc/error.hpp"
#include "greendoc/tokens.hpp"

namespace greendoc {

const char* to_string(LedgerSource s) {
  return s == LedgerSource::measured ? "measured" : "estimated";
}

LedgerShares ledger_shares(const TokenLedger& ledger) {
  const TokenCount total = ledger.total();
  if (total == 0) throw InvariantError("ledger total must be > 0");
  const auto pct = [total](TokenCount n) {
    return static_cast<double>(n) / static_cast<double>(total) * 100.0;
  };
  return {pct(ledger.document), pct(ledger.prompt), pct(ledger.output), pct(ledger.thinking)};
}

ResourceFootprint ledger_footprint(const TokenLedger& ledger, const FootprintProfile& profile) {
  const Energy e = inference_energy(ledger.total(), profile.rate);
  return {e, co2_from_energy(e, profile.emission_factor), water_from_energy(e, profile.wue)};
}

Energy normalize_energy(const Energy& e, double thinking_factor, double complexity_factor) {
  if (!std::isfinite(thinking_factor) || thinking_factor < 1.0) {
    throw InvariantError("thinking_factor >= 1");
  }
  if (!std::isfinite(complexity_factor) || complexity_factor < 1.0) {
    throw InvariantError("complexity_factor >= 1");
  }
  const double divisor = thinking_factor * complexity_factor;
  return Energy{Interval{e.lo() / divisor, e.hi() / divisor}};
}

bool ExtractionResult::all_verified() const {
  return std::all_of(verification.begin(), verification.end(), [](const auto& v) { return v.ok; });
}

std::vector<std::string> ExtractionResult::failing_items() const {
  std::vector<std::string> out;
  for (const auto& v : verification) {
    if (!v.ok) out.push_back(v.item_id);
  }
  return out;
}

ExtractionResult run_pipeline(std::string_view document, std::string_view prompt,
                              const std::optional<TokenLedger>& ledger_override,
                              const FootprintProfile& profile) {
  profile.validate();
  ExtractionResult result;

  // parser: document -> structured rows
  ParsedInvoice parsed;
  try {
    parsed = parse_invoice(document);
  } catch (const ParseError& e) {
    throw PipelineError(kStageParser, e.what());
  }
  result.items = std::move(parsed.items);
  result.warnings = std::move(parsed.warnings);
  result.stages.push_back({kStageParser, 0, Energy{},
                           fmt::format("{} rows recognised", result.items.size())});

  // generator: rows -> JSON output; carries the model token cost
  result.output_json = items_to_json(result.items);
  if (ledger_override) {
    result.ledger = *ledger_override;
    result.ledger.source = LedgerSource::measured;
  } else {
    result.ledger = TokenLedger{count_tokens(document), count_tokens(prompt),
                                result.items.empty() ? 0 : count_tokens(result.output_json), 0,
                                LedgerSource::estimated};
  }
  result.footprint = ledger_footprint(result.ledger, profile);
  result.stages.push_back({kStageGenerator, result.ledger.total(), result.footprint.energy,
                           fmt::format("{} ledger", to_string(result.ledger.source))});

  // verifier: arithmetic cross-check of every row
  result.verification = verify_items(result.items);
  const auto failing = result.failing_items();
  result.stages.push_back({kStageVerifier, 0, Energy{},
                           fmt::format("{} of {} rows consistent",
                                       result.items.size() - failing.size(), result.items.size())});

  // hitl: rows that failed verification wait for a human
  result.stages.push_back(
      {kStageReview, 0, Energy{}, fmt::format("{} rows queued for review", failing.size())});
  return result;
}

std::vector<ExtractionResult> run_pipeline_batch(std::span<const std::string> documents,
                                                 std::string_view prompt,
                                                 const FootprintProfile& profile,
                                                 unsigned threads) {
  std::vector<std::optional<ExtractionResult>> slots(documents.size());
  std::vector<std::exception_ptr> errors(documents.size());
  std::atomic<std::size_t> next{0};

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, documents.size())));

  auto worker = [&] {
    for (std::size_t i = next++; i < documents.size(); i = next++) {
      try {
        slots[i] = run_pipeline(documents[i], prompt, std::nullopt, profile);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ExtractionResult> out;
  out.reserve(documents.size());
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace greendoc
