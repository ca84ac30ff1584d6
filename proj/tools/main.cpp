#include <iostream>
#include <string>
#include <vector>

#include "drep/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return drep::run(args, std::cout, std::cerr);
}
