// SPDX-License-Identifier: Apache-2.0

#include "irsrelay/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return irsrelay::run_cli(args, std::cout, std::cerr);
}
