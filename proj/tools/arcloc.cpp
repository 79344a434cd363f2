#include <iostream>
#include <string>
#include <vector>

#include "arcloc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return arcloc::cli::run(args, std::cout, std::cerr);
}
