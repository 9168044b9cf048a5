/**
 * @file uqslcat.cpp
 * @brief Entry point of the uqslcat command-line tool.
 */

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return uqslcat::run(args, std::cout, std::cerr);
}
