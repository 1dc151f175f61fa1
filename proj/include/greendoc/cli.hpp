// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace greendoc::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kVerificationFailed = 3,
};

/// Entry point of the `greendoc` command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace greendoc::cli
