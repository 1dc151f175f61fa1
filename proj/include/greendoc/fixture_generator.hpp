// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greendoc/invoice.hpp"

namespace greendoc {

struct GeneratedInvoice {
  std::string text;
  std::vector<LineItem> items;  // what parse_invoice(text) must return
};

/// Synthetic proforma with `n_items` rows whose totals equal quantity x unit
/// price exactly, mixed with prose lines. Same seed, same text on every
/// platform.
GeneratedInvoice generate_invoice(std::uint64_t seed, std::size_t n_items,
                                  const std::string& currency = "EUR");

}  // namespace greendoc
