// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "greendoc/decimal.hpp"

namespace greendoc {

/// One extracted invoice row.
struct LineItem {
  std::string item_id;  // "ITEM 03"
  std::string description;
  Decimal quantity;
  Decimal unit_price;
  Decimal total_price;
  std::string currency;  // ISO-4217 alphabetic code

  friend bool operator==(const LineItem&, const LineItem&) = default;
};

struct ParsedInvoice {
  std::vector<LineItem> items;
  std::vector<std::string> warnings;
};

/// Extracts line items from a proforma in the row grammar
///
///   ITEM <nn> | <description> | <quantity> | <unit price> | <total> | <currency>
///
/// Lines that do not start with "ITEM" followed by a number are prose and are
/// skipped. A line that does start that way but breaks the grammar raises
/// ParseError with its 1-based line number. No rows at all yields an empty
/// list plus a warning.
ParsedInvoice parse_invoice(std::string_view document);

struct Verification {
  std::string item_id;
  bool ok = false;
  Decimal delta;  // quantity * unit_price - total_price

  friend bool operator==(const Verification&, const Verification&) = default;
};

inline const Decimal kDefaultTolerance = Decimal::from_units(10'000);  // 0.01

/// ok iff |quantity * unit_price - total_price| <= tolerance. One entry per
/// item, in input order.
std::vector<Verification> verify_items(std::span<const LineItem> items,
                                       Decimal tolerance = kDefaultTolerance);

/// Extraction output: a JSON array of {"item_id","quantity","unit_price",
/// "total_price","currency"} in that order, prices with two decimals, one
/// object per line, trailing newline.
std::string items_to_json(std::span<const LineItem> items);

}  // namespace greendoc
