// Copyright 2026 The lcfk Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "lcfk/cli.hpp"

int main(int argc, char** argv) { return lcfk::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
