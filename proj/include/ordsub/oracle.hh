/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_ORACLE_HH
#define ORDSUB_GUARD_ORDSUB_ORACLE_HH 1

#include <ordsub/ordered_graph.hh>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ordsub
{
    // Order Preserving Subsequence instance. Values are 1-based, as in the
    // permutations of [n] and [k] they stand for.
    struct OpsInstance
    {
        std::vector<int> pi;
        std::vector<int> rho;
    };

    // Throws std::invalid_argument unless pi and rho are permutations with
    // |rho| <= |pi|.
    auto validate_ops(const OpsInstance &) -> void;

    inline constexpr int decision_guard = 32;
    inline constexpr int optimisation_guard = 24;

    struct OracleOptions
    {
        // Lift the size guards.
        bool unguarded = false;

        // Optional per-H-vertex upper bound on the image, used to probe
        // pointwise minimality of another solver's map.
        std::optional<std::vector<int>> max_image;
    };

    /**
     * Lexicographically smallest image sequence f with is_ordered_subgraph_iso
     * (G, H, f, variant == oisi), or nullopt. Plain backtracking in increasing
     * image order, with forward-checked candidate sets so that an infeasible
     * prefix is abandoned early.
     *
     * Throws GuardExceeded if n_G > decision_guard and not unguarded.
     */
    [[nodiscard]] auto brute_ordered_iso(IsoVariant, const OrderedGraph & g, const OrderedGraph & h,
            const OracleOptions & = { }) -> std::optional<OrderPreservingMap>;

    /**
     * Maximum common ordered (induced) subgraph by enumerating every pair
     * sequence increasing in both coordinates. Among optimal sequences the
     * lexicographically smallest is returned.
     *
     * Throws GuardExceeded if max(n_G, n_H) > optimisation_guard and not unguarded.
     */
    [[nodiscard]] auto brute_mco(McoVariant, const OrderedGraph & g, const OrderedGraph & h,
            const OracleOptions & = { }) -> CommonSolution;

    // Lexicographically smallest 1-based indices i_1 < ... < i_k at which pi
    // is order-isomorphic to rho, or nullopt.
    [[nodiscard]] auto brute_ops(const OpsInstance &) -> std::optional<std::vector<int>>;

    // Lexicographically smallest (A, B), A on side X and B on side Y, each of
    // size k, complete between them. Throws std::invalid_argument unless G is
    // bipartite.
    [[nodiscard]] auto brute_balanced_biclique(const OrderedGraph & g, int k)
        -> std::optional<std::pair<std::vector<int>, std::vector<int>>>;
}

#endif
