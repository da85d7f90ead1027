#include <iostream>
#include <string>
#include <vector>

#include "z4rm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return z4rm::cli::run(args, std::cout, std::cerr);
}
