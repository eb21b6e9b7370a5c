#include <iostream>
#include <string>
#include <vector>

#include "g2skein/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return g2skein::cli::run(args, std::cout, std::cerr);
}
