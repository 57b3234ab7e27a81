#include <iostream>
#include <string>
#include <vector>

#include "redheffer/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return redheffer::cli::run(std::move(args), std::cout, std::cerr);
}
