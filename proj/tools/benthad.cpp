#include <iostream>
#include <string>
#include <vector>

#include "benthad/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return benthad::cli::run(args, std::cout, std::cerr);
}
