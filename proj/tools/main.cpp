// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <string>
#include <vector>

#include "isolab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    isolab::CliResult res = isolab::run_cli(args);
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
}
