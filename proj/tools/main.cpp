// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "greendoc/cli.hpp"

int main(int argc, char** argv) { return greendoc::cli::run(argc, argv, std::cout, std::cerr); }
