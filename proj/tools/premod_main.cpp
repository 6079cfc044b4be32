#include <iostream>

#include "premod/cli.hpp"

int main(int argc, char** argv) {
    return premod::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
