#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::string> args(argv + 1, argv + argc);
    const int code = deltasys::cli::run(args, std::cout, std::cerr);
    std::cout.flush();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "wall time: %.3f s\n", elapsed.count());
    return code;
}
