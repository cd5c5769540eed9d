/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_INCLUSION_DP_HH
#define ORDSUB_GUARD_ORDSUB_INCLUSION_DP_HH 1

#include <ordsub/ordered_graph.hh>

namespace ordsub
{
    /**
     * Maximum common ordered induced subgraph of two graphs whose orderings are
     * inclusion orderings of a shared class (threshold, chain or cochain).
     *
     * Without pairs that cross sides, the matched X-pairs determine everything:
     * a DP over the last matched X-pair adds, per step, as many Y-pairs as both
     * neighbourhood increments allow. Each possible single crossing pair is
     * guessed and the residual windows solved by the same DP. In chain and
     * cochain graphs several crossing pairs can coexist, but then the common
     * subgraph is edgeless or complete, so an independent set or clique of
     * common size is also offered.
     *
     * Throws PreconditionFailed if either ordering is not an inclusion
     * ordering or the graphs share no class.
     */
    [[nodiscard]] auto mcois_inclusion(const OrderedGraph & g, const OrderedGraph & h) -> CommonSolution;
}

#endif
