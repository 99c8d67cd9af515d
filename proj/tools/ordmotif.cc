#include <ordmotif/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return ordmotif::cli_main(args, std::cout, std::cerr);
}
