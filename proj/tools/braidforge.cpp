#include <iostream>

#include "braidforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return braidforge::cli::run(args, std::cout, std::cerr);
}
