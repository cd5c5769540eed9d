/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_VERTEX_COVER_DP_HH
#define ORDSUB_GUARD_ORDSUB_VERTEX_COVER_DP_HH 1

#include <ordsub/ordered_graph.hh>

#include <optional>
#include <vector>

namespace ordsub
{
    inline constexpr int vertex_cover_guard = 12;

    // A minimum vertex cover, sorted, by branching on the first uncovered
    // edge with increasing budget. Arcs count as edges; a loop forces its vertex.
    [[nodiscard]] auto minimum_vertex_cover(const OrderedGraph &) -> std::vector<int>;

    // Vertices u, v are twins when N(u) \ {v} = N(v) \ {u}. Classes are numbered
    // by their smallest member.
    struct TwinPartition
    {
        std::vector<std::vector<int>> classes;
        std::vector<int> class_of;
    };

    // Throws std::invalid_argument on a digraph.
    [[nodiscard]] auto twin_classes(const OrderedGraph &) -> TwinPartition;

    struct VertexCoverOptions
    {
        // A vertex cover of G to use instead of computing a minimum one. It is
        // checked and then greedily minimised.
        std::optional<std::vector<int>> cover_hint;
        bool unguarded = false;
    };

    struct VertexCoverStats
    {
        int cover_size_g = 0;
        int cover_size_h = 0;
        int twin_class_count = 0;
        // For each subset S of G's cover, in enumeration order: |S| and the
        // number of type assignments enumerated for it.
        std::vector<std::pair<int, long>> assignments_per_subset;
        long dp_runs = 0;
    };

    /**
     * Maximum common ordered (induced) subgraph parameterised by vertex cover.
     * For every subset S of a cover of G, G loses the rest of the cover, S must
     * be matched, and every assignment of H's twin classes to S is tried; a DP
     * over (prefix of G, prefix of H) then matches the remaining independent
     * vertices.
     *
     * For MCOIS the images of vertices outside S must also be pairwise
     * non-adjacent. This is enforced by fixing which independent subset R of
     * a cover of H they may use, restricting them to R and the uncovered
     * vertices outside N(R).
     *
     * Throws std::invalid_argument on digraphs or an invalid cover hint, and
     * GuardExceeded when the larger cover exceeds vertex_cover_guard.
     */
    [[nodiscard]] auto mco_vertex_cover(McoVariant, const OrderedGraph & g, const OrderedGraph & h,
            const VertexCoverOptions & = { }, VertexCoverStats * = nullptr) -> CommonSolution;
}

#endif
