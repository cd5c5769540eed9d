/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_CLI_HH
#define ORDSUB_GUARD_ORDSUB_CLI_HH 1

#include <ostream>
#include <string>
#include <vector>

namespace ordsub
{
    namespace exit_code
    {
        inline constexpr int yes = 0;
        inline constexpr int no = 1;
        inline constexpr int usage = 2;
        inline constexpr int invalid = 3;
        inline constexpr int guard = 4;
    }

    /**
     * The ordsub command line: verify, solve, reduce, gen and bench. args
     * excludes the program name. Returns the process exit status.
     */
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

    // Comma-separated integers, such as "4,2,1". Throws std::invalid_argument.
    [[nodiscard]] auto parse_int_list(const std::string &) -> std::vector<int>;
}

#endif
