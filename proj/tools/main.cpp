#include <iostream>
#include <string>
#include <vector>

#include "minersel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return minersel::run_cli(args, std::cout, std::cerr);
}
