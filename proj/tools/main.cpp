#include <iostream>
#include <string>
#include <vector>

#include "umet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return umet::cli::run(std::move(args), std::cout, std::cerr);
}
