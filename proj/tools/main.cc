#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return folklab::cli::run(args, std::cout, std::cerr);
}
