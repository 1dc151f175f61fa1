// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/fixture_generator.hpp"

#include <array>
#include <random>

#include <fmt/format.h>

namespace greendoc {

namespace {

// std::uniform_int_distribution is implementation-defined; a plain modulo on
// the raw engine output keeps the text identical across standard libraries.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::string with_thousands(const std::string& fixed) {
  const auto dot = fixed.find('.');
  std::string whole = fixed.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : fixed.substr(dot);
  std::string out;
  for (std::size_t i = 0; i < whole.size(); ++i) {
    if (i > 0 && (whole.size() - i) % 3 == 0) out += ',';
    out += whole[i];
  }
  return out + frac;
}

constexpr std::array kDescriptions{
    "Industrial sensor module",     "Gateway licence (annual)",   "Integration service",
    "On-site installation",         "Training session",           "Spare parts kit",
    "Edge computing unit",          "Cabling and connectors",     "Support hours",
    "Configuration workshop",       "Pallet tracking tags",       "Warehouse scanner",
    "Software maintenance (month)", "Data migration service",     "Calibration visit",
};

constexpr std::array kProse{
    "Payment terms: 30 days from invoice date, bank transfer.",
    "Delivery: DAP, goods remain property of the seller until paid in full.",
    "Technical specifications are listed in annex B.",
    "Prices exclude VAT unless stated otherwise.",
    "Validity of this offer: 60 days.",
};

}  // namespace

GeneratedInvoice generate_invoice(std::uint64_t seed, std::size_t n_items, const std::string& currency) {
  std::mt19937_64 rng(seed);
  GeneratedInvoice out;
  out.text = fmt::format("PROFORMA INVOICE PF-{:05}\nSeller: Example Components S.r.l.\n\n", seed % 100000);
  out.text += "ITEM | DESCRIPTION | QTY | UNIT PRICE | TOTAL | CURRENCY\n";

  for (std::size_t i = 0; i < n_items; ++i) {
    LineItem item;
    item.item_id = fmt::format("ITEM {:02}", i + 1);
    item.description = kDescriptions[pick(rng, kDescriptions.size())];
    // Quantities: whole units, or half hours for services.
    const bool half = pick(rng, 4) == 0;
    item.quantity = Decimal::from_units(static_cast<std::int64_t>(1 + pick(rng, 500)) *
                                        (half ? Decimal::kScale / 2 : Decimal::kScale));
    item.unit_price = Decimal::from_units(static_cast<std::int64_t>(1 + pick(rng, 2'500'000)) * 10'000);
    item.total_price = (item.quantity * item.unit_price).rounded(2);  // invoices bill whole cents
    item.currency = currency;

    const bool group = pick(rng, 2) == 0;
    const auto price_text = [&](const Decimal& d) {
      const auto s = d.to_fixed(2);
      return group ? with_thousands(s) : s;
    };
    out.text += fmt::format("{} | {} | {} | {} | {} | {}\n", item.item_id, item.description,
                            item.quantity.to_string(), price_text(item.unit_price),
                            price_text(item.total_price), item.currency);
    if (pick(rng, 3) == 0) out.text += std::string("  ") + kProse[pick(rng, kProse.size())] + "\n";
    out.items.push_back(std::move(item));
  }
  out.text += "\nAll amounts in " + currency + ".\n";
  return out;
}

}  // namespace greendoc
