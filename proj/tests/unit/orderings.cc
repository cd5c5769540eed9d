/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/errors.hh>
#include <ordsub/instances.hh>
#include <ordsub/orderings.hh>

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace ordsub;
using namespace fixtures;

namespace
{
    auto separation(const OrderedGraph & g) -> int
    {
        int best = 0;
        for (int i = 0 ; i < g.size() ; ++i) {
            int count = 0;
            for (int u = 0 ; u <= i ; ++u) {
                bool late = false;
                for (int v = i + 1 ; v < g.size() ; ++v)
                    late = late || g.linked(u, v);
                count += late;
            }
            best = std::max(best, count);
        }
        return best;
    }
}

TEST_SUITE("orderings")
{
    TEST_CASE("cliques satisfy the undirected kinds")
    {
        for (auto kind : { OrderingKind::interval, OrderingKind::comparability,
                OrderingKind::perfect_elimination, OrderingKind::cocomparability })
            CHECK(verify_ordering(kind, clique(4)).ok);
    }

    TEST_CASE("a four cycle is not interval ordered")
    {
        auto report = verify_ordering(OrderingKind::interval, cycle(4));
        CHECK_FALSE(report.ok);
        REQUIRE(report.witness);
        CHECK(*report.witness == std::vector{ 0, 1, 3 });
    }

    TEST_CASE("min ordering needs a digraph")
    {
        CHECK_THROWS((void) verify_ordering(OrderingKind::min, path(3)));
        auto d = make_directed(2, std::vector<Edge>{ { 0, 1 }, { 1, 0 } });
        auto report = verify_ordering(OrderingKind::min, d);
        CHECK_FALSE(report.ok);
    }

    TEST_CASE("threshold reduction has an inclusion ordering")
    {
        auto r = ops_to_inclusion_class(InclusionClass::threshold, example_ops());
        auto g = ordered_g(r);
        CHECK(verify_ordering(OrderingKind::inclusion, g).ok);
        CHECK(classify_inclusion(g) == InclusionClass::threshold);
    }

    TEST_CASE("classify inclusion")
    {
        auto star_sided = with_sides(reorder(star(3), std::vector{ 1, 2, 3, 0 }),
                std::vector{ Side::y, Side::y, Side::y, Side::x });
        CHECK(verify_ordering(OrderingKind::inclusion, star_sided).ok);
        CHECK(classify_inclusion(star_sided) == InclusionClass::threshold);

        auto k22 = reorder(complete_bipartite(2, 2), std::vector{ 2, 3, 0, 1 });
        CHECK(classify_inclusion(k22) == InclusionClass::chain);

        auto chain = ops_to_inclusion_class(InclusionClass::chain, example_ops());
        CHECK(verify_ordering(OrderingKind::inclusion, ordered_g(chain)).ok);
        CHECK(classify_inclusion(ordered_g(chain)) == InclusionClass::chain);

        auto cochain = ops_to_inclusion_class(InclusionClass::cochain, example_ops());
        CHECK(classify_inclusion(ordered_g(cochain)) == InclusionClass::cochain);
    }

    TEST_CASE("ordering pathwidth")
    {
        CHECK(ordering_pathwidth(path(6)) == 1);
        CHECK(ordering_pathwidth(clique(5)) == 4);
        auto spider = ops_to_spiders(example_ops()).g;
        CHECK(ordering_pathwidth(spider) == separation(spider));
    }

    TEST_CASE("nice decomposition of a path")
    {
        auto d = nice_decomposition_from_ordering(path(3));
        std::vector<std::vector<int>> bags{ { }, { 0 }, { 0, 1 }, { 1 }, { 1, 2 }, { 2 }, { } };
        CHECK(d.bags == bags);
        CHECK(d.width == 1);
        CHECK(d.introduce_order == std::vector{ 0, 1, 2 });
    }

    TEST_CASE("nice decomposition of a triangle")
    {
        auto d = nice_decomposition_from_ordering(clique(3));
        CHECK(d.width == 2);
        CHECK(std::ranges::count(d.bags, std::vector{ 0, 1, 2 }) == 1);
    }

    TEST_CASE("random decompositions are valid with the ordering width")
    {
        for (std::uint64_t seed = 0 ; seed < 50 ; ++seed) {
            auto g = random_instance({ GeneratorClass::arbitrary, 0 }, 1 + int(seed % 8), 0.4, seed);
            auto d = nice_decomposition_from_ordering(g);
            CHECK_NOTHROW(validate_decomposition(g, d));
            CHECK(d.width == ordering_pathwidth(g));
        }
    }

    TEST_CASE("broken decompositions are rejected")
    {
        auto d = nice_decomposition_from_ordering(path(3));
        d.steps.pop_back();
        d.bags.pop_back();
        CHECK_THROWS_AS(validate_decomposition(path(3), d), InvalidDecomposition);
    }
}
