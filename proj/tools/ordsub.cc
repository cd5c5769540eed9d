/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return ordsub::run_cli({ argv + 1, argv + argc }, std::cout, std::cerr);
}
