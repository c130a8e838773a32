#include <iostream>

#include "szq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return szq::cli::run(args, std::cout, std::cerr);
}
