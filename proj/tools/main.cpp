#include <iostream>
#include <string>
#include <vector>

#include "hvec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hvec::cli::run(args, std::cout, std::cerr);
}
