#include <iostream>
#include <string>
#include <vector>

#include "kalliance/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return kalliance::cli::run(args, std::cout, std::cerr);
}
