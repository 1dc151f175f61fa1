// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

#include "greendoc/footprint.hpp"

namespace greendoc {

/// Number of Unicode code points in UTF-8 text (lead bytes counted).
std::size_t count_code_points(std::string_view utf8);

/// Estimated token count: ceil(code points / 4). Deterministic stand-in for
/// a real tokenizer; never used where measured counts exist.
TokenCount count_tokens(std::string_view text);

}  // namespace greendoc
