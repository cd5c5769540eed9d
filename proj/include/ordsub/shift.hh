/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_SHIFT_HH
#define ORDSUB_GUARD_ORDSUB_SHIFT_HH 1

#include <ordsub/ordered_graph.hh>

#include <optional>
#include <vector>

namespace ordsub
{
    // One execution of the shifting step. Indices are 0-based; p and q are the
    // violating H-vertices, p_image and q_image their images when selected,
    // and cascade the number of images advanced (at least one).
    struct ShiftStep
    {
        int shift_case;
        int p, q;
        int p_image, q_image;
        int cascade;
    };

    struct ShiftTrace
    {
        long iterations = 0;
        std::optional<OrderPreservingMap> final_map;
        std::vector<ShiftStep> steps;
        // Image sequence after each step, when requested.
        std::vector<std::vector<int>> snapshots;
    };

    struct ShiftOptions
    {
        bool record_steps = true;
        bool record_snapshots = false;
    };

    struct ShiftResult
    {
        std::optional<OrderPreservingMap> map;
        ShiftTrace trace;
    };

    /**
     * Ordered subgraph isomorphism for bipartite G whose ordering is
     * comparability weak; H is any bipartite graph. Starts from the identity
     * prefix and only ever moves images right, always resolving the
     * lexicographically smallest violated H-edge. The map found is the
     * pointwise least ordered subgraph isomorphism.
     *
     * Throws PreconditionFailed if G's ordering is not comparability weak,
     * std::invalid_argument if either graph is not bipartite.
     */
    [[nodiscard]] auto osi_shift_2dor(const OrderedGraph & g, const OrderedGraph & h,
            const ShiftOptions & = { }) -> ShiftResult;

    /**
     * The same for digraphs (loops and opposite arcs allowed) where G's
     * ordering is a min ordering. A violated pair p <= q may be a loop, and
     * the shift direction is chosen per violated orientation.
     *
     * Throws PreconditionFailed if G's ordering is not a min ordering,
     * std::invalid_argument if either graph is undirected.
     */
    [[nodiscard]] auto osi_shift_signed_interval(const OrderedGraph & g, const OrderedGraph & h,
            const ShiftOptions & = { }) -> ShiftResult;
}

#endif
