#include <iostream>

#include "starpull/cli/commands.hpp"

int main(int argc, char** argv)
{
    auto r = starpull::cli::run_command(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
