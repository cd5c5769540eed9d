/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_PATHWIDTH_DP_HH
#define ORDSUB_GUARD_ORDSUB_PATHWIDTH_DP_HH 1

#include <ordsub/ordered_graph.hh>
#include <ordsub/orderings.hh>

namespace ordsub
{
    inline constexpr int pathwidth_guard = 15;

    struct PathwidthStats
    {
        // Table entries created over all (i, j) cells.
        long states = 0;
        // (2 n_G + 1)(2 n_H + 1) k^(w_G + 1) k^(w_H + 1), k = 3 for MCOIS, 2 for MCOS.
        double state_bound = 0;
    };

    /**
     * Maximum common ordered (induced) subgraph by dynamic programming over a
     * pair of nice path decompositions whose introduce orderings are the
     * graphs' orderings.
     *
     * A cell (i, j) holds, per state, the best partial solution whose pairs are
     * all matched at both-introduce cells no later than (i, j). The state marks
     * each bag vertex as unmatched, matched to a vertex still in the other bag
     * (the two such sets align by rank), or, for MCOIS only, matched to a
     * vertex already forgotten. A forget step at i or j is taken from the cell
     * just before it in that coordinate alone, which makes simultaneous forgets
     * a composition of single ones.
     *
     * Throws InvalidDecomposition, InconsistentOrdering, or GuardExceeded when
     * a bag exceeds pathwidth_guard + 1 vertices.
     */
    [[nodiscard]] auto mco_pathwidth(McoVariant, const OrderedGraph & g, const NicePathDecomposition & pg,
            const OrderedGraph & h, const NicePathDecomposition & ph, PathwidthStats * stats = nullptr) -> CommonSolution;
}

#endif
