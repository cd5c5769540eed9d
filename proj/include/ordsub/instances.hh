/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_INSTANCES_HH
#define ORDSUB_GUARD_ORDSUB_INSTANCES_HH 1

#include <ordsub/oracle.hh>
#include <ordsub/ordered_graph.hh>
#include <ordsub/orderings.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordsub
{
    /**
     * A pair (G, H) produced by one of the hardness reductions, with where it
     * came from. When the reduction promises an ordering property, claimed
     * names it, and g_order / h_order give the vertex order under which it
     * holds (empty means the identity). Construction checks the promise and
     * throws std::logic_error if it fails.
     */
    struct ReducedInstance
    {
        std::string reduction;
        OrderedGraph g, h;
        std::optional<OpsInstance> ops;
        std::optional<OrderedGraph> source;
        int k = 0;
        std::optional<OrderingKind> claimed;
        std::vector<int> g_order, h_order;
    };

    // Legs (v_0, v_i, v_{n + pi(i)}), with the centre first.
    [[nodiscard]] auto ops_to_spiders(const OpsInstance &) -> ReducedInstance;

    // Spiders plus an edge from the centre to every leaf.
    [[nodiscard]] auto ops_to_trivially_perfect(const OpsInstance &) -> ReducedInstance;

    // Spiders without their centres: a perfect matching.
    [[nodiscard]] auto ops_to_disjoint_edges(const OpsInstance &) -> ReducedInstance;

    /**
     * Vertices v_1..v_n, v_mid on side X and v_{n+1}..v_{2n} on side Y, in
     * that order; v_i sees v_{n + pi(j)} for j >= i, v_mid sees no Y-vertex,
     * and the sides are cliques or independent sets per the class. The
     * inclusion ordering is recorded in g_order / h_order. Without the mid
     * vertices when drop_mid is set.
     */
    [[nodiscard]] auto ops_to_inclusion_class(InclusionClass, const OpsInstance &, bool drop_mid = false) -> ReducedInstance;

    enum class IntervalFlavour
    {
        interval,
        interval_bigraph
    };

    /**
     * interval: complements of the threshold graphs, in the original order.
     * interval_bigraph: the chain graphs ordered v_mid, v_n..v_1, v_2n..v_{n+1};
     * the mid vertex goes first because between the blocks it would break the
     * interval bigraph pattern.
     */
    [[nodiscard]] auto ops_to_interval_ordered(IntervalFlavour, const OpsInstance &, bool drop_mid = false) -> ReducedInstance;

    enum class BicliqueTarget
    {
        split,
        cobipartite
    };

    /**
     * split: G + apex u cliqued with X + n_G pendants on u, ordered (Y, L, u, X).
     * cobipartite: G + cliques X', Y' of size n_G joined to X, Y + universal u,
     * ordered (Y', Y, u, X, X'). H is built the same way from K_{k,k} but with
     * G's padding sizes; padded only by n_H, all of H fits inside a large
     * clique of G and the answer is always yes.
     * Throws std::invalid_argument unless G is bipartite and k >= 1.
     */
    [[nodiscard]] auto bb_to_ordered(BicliqueTarget, const OrderedGraph & g, int k) -> ReducedInstance;

    enum class GeneratorClass
    {
        interval,
        interval_bigraph,
        two_dor,
        signed_interval,
        threshold,
        chain,
        cochain,
        arbitrary,
        bounded_pathwidth,
        bounded_vc
    };

    struct GeneratorSpec
    {
        GeneratorClass cls;
        // Width for bounded_pathwidth, cover size for bounded_vc.
        int parameter = 0;
    };

    [[nodiscard]] auto to_string(GeneratorClass) -> std::string_view;
    [[nodiscard]] auto parse_generator_class(std::string_view) -> std::optional<GeneratorClass>;

    // The ordering kind every graph of the class verifies, if any.
    [[nodiscard]] auto characteristic_kind(GeneratorClass) -> std::optional<OrderingKind>;

    /**
     * A random graph whose identity ordering has the class's property, built
     * from its representation. density in [0, 1]: 0 gives no edges, 1 gives
     * the densest member (for interval and two_dor, complete). Deterministic
     * in seed across platforms. Throws std::invalid_argument on bad parameters.
     */
    [[nodiscard]] auto random_instance(GeneratorSpec, int n, double density, std::uint64_t seed) -> OrderedGraph;

    // Uniform permutations of [n] and [k].
    [[nodiscard]] auto random_ops(int n, int k, std::uint64_t seed) -> OpsInstance;
}

#endif
