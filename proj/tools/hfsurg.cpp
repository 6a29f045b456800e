#include <iostream>
#include <string>
#include <vector>

#include "hfsurg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hfsurg::run_cli(args, std::cout, std::cerr);
}
