#include <iostream>

#include "arrowcat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return arrowcat::cli::run(args, std::cout, std::cerr);
}
