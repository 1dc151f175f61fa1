// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "greendoc/tokens.hpp"

namespace greendoc {

std::size_t count_code_points(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8) {
    // Continuation bytes (10xxxxxx) belong to the preceding lead byte.
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

TokenCount count_tokens(std::string_view text) {
  constexpr TokenCount kCharsPerToken = 4;
  const auto chars = static_cast<TokenCount>(count_code_points(text));
  return (chars + kCharsPerToken - 1) / kCharsPerToken;
}

}  // namespace greendoc
