#include <iostream>
#include <string>
#include <vector>

#include "chainsel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chainsel::run_cli(args, std::cout, std::cerr);
}
