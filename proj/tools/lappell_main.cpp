#include <iostream>

#include "lappell/cli_commands.hpp"

int main(int argc, char** argv) {
    return lappell::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
