/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_ORDERINGS_HH
#define ORDSUB_GUARD_ORDSUB_ORDERINGS_HH 1

#include <ordsub/ordered_graph.hh>
#include <ordsub/verify_report.hh>

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace ordsub
{
    enum class OrderingKind
    {
        interval,
        interval_bigraph,
        comparability,
        weak,
        comparability_weak,
        min,
        inclusion,
        perfect_elimination,
        cocomparability
    };

    inline constexpr std::array all_ordering_kinds{
        OrderingKind::interval, OrderingKind::interval_bigraph, OrderingKind::comparability,
        OrderingKind::weak, OrderingKind::comparability_weak, OrderingKind::min,
        OrderingKind::inclusion, OrderingKind::perfect_elimination, OrderingKind::cocomparability };

    [[nodiscard]] auto to_string(OrderingKind) -> std::string_view;
    [[nodiscard]] auto parse_ordering_kind(std::string_view) -> std::optional<OrderingKind>;

    // Whether the kind can be checked on this graph at all: min needs a
    // digraph, the side-aware kinds need a side map, the rest need an
    // undirected or bipartite graph.
    [[nodiscard]] auto ordering_applies(OrderingKind, const OrderedGraph &) -> bool;

    /**
     * Checks the identity ordering of G against the kind's forbidden pattern.
     * On failure the witness is the lexicographically first violating tuple,
     * with components in this order:
     *
     *   interval, interval_bigraph   (u, v, w)    u < v < w, uw edge, vw non-edge
     *   comparability                (u, v, w)    u < v < w, uv and vw edges, uw non-edge
     *   weak                         (x1, x2, y1, y2)
     *   min                          (i, j, i', j')  arcs ij and i'j', i < i', j' < j, arc ij' missing
     *   inclusion                    (x, y) for a side block violation, else (a, b, c)
     *                                with a < b on one side and c adjacent to a but not b
     *   perfect_elimination          (v, a, b)    v < a < b, a and b neighbours of v, ab non-edge
     *   cocomparability              (i, j, k)    i < j < k, ik edge, ij and jk non-edges
     *
     * comparability_weak reports the comparability witness if there is one,
     * otherwise the weak witness; the detail string says which.
     *
     * Throws std::invalid_argument if the kind does not apply to G.
     */
    [[nodiscard]] auto verify_ordering(OrderingKind, const OrderedGraph &) -> VerifyReport;

    enum class InclusionClass
    {
        threshold,
        chain,
        cochain,
        none
    };

    [[nodiscard]] auto to_string(InclusionClass) -> std::string_view;

    // Every class whose block conditions G meets. Small blocks can be both a
    // clique and independent, so more than one may hold.
    [[nodiscard]] auto inclusion_classes(const OrderedGraph &) -> std::vector<InclusionClass>;

    // First of threshold, chain, cochain that holds, else none. Throws
    // PreconditionFailed unless the ordering is an inclusion ordering.
    [[nodiscard]] auto classify_inclusion(const OrderedGraph &) -> InclusionClass;

    // Vertex separation number of the identity ordering; arcs count in
    // either direction.
    [[nodiscard]] auto ordering_pathwidth(const OrderedGraph &) -> int;

    enum class StepKind
    {
        introduce,
        forget
    };

    struct DecompositionStep
    {
        StepKind kind;
        int vertex;

        [[nodiscard]] auto operator== (const DecompositionStep &) const -> bool = default;
    };

    /**
     * bags[t] is the bag after step t, so bags[0] and bags.back() are empty and
     * steps[t - 1] turns bags[t - 1] into bags[t]. Bags are sorted.
     */
    struct NicePathDecomposition
    {
        std::vector<std::vector<int>> bags;
        std::vector<DecompositionStep> steps;
        int width = 0;
        std::vector<int> introduce_order;
    };

    // Introduces vertices in order, forgetting each vertex as soon as its last
    // neighbour has been introduced.
    [[nodiscard]] auto nice_decomposition_from_ordering(const OrderedGraph &) -> NicePathDecomposition;

    // Throws InvalidDecomposition if P is not a nice path decomposition of G,
    // InconsistentOrdering if it is but its introduce ordering is not G's.
    auto validate_decomposition(const OrderedGraph &, const NicePathDecomposition &) -> void;
}

#endif
