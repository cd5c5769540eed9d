/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_OG_FORMAT_HH
#define ORDSUB_GUARD_ORDSUB_OG_FORMAT_HH 1

#include <ordsub/ordered_graph.hh>

#include <string>
#include <string_view>

namespace ordsub
{
    /**
     * The .og text format:
     *
     *   og 1
     *   kind undirected|directed|bipartite
     *   n <int>
     *   side <0/1 string of length n>      optional, 0 = X, 1 = Y
     *   m <int>
     *   e <i> <j>                          m lines, 1-based ranks
     *
     * A '#' starts a comment; blank lines are ignored. Undirected and
     * bipartite edges need i < j, loops are allowed only in digraphs, and
     * repeated edges are rejected. Throws ParseError with a line number.
     */
    [[nodiscard]] auto parse_og(std::string_view text) -> OrderedGraph;

    // Canonical text: edge lines sorted by (i, j).
    [[nodiscard]] auto print_og(const OrderedGraph &) -> std::string;

    // Throws ParseError if the file cannot be read or parsed.
    [[nodiscard]] auto read_og_file(const std::string & path) -> OrderedGraph;

    // Throws std::runtime_error if the file cannot be written.
    auto write_og_file(const std::string & path, const OrderedGraph &) -> void;
}

#endif
