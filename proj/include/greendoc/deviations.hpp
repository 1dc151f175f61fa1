// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace greendoc {

/// A published reference figure that the model does not reproduce, with the
/// value the model yields instead.
struct Deviation {
  std::string id;
  std::string quantity;
  std::string published;
  std::string implemented;
  std::string note;
};

const std::vector<Deviation>& documented_deviations();

std::optional<Deviation> find_deviation(std::string_view id);

}  // namespace greendoc
