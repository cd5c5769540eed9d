/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/instances.hh>
#include <ordsub/ordered_graph.hh>
#include <ordsub/orderings.hh>

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace ordsub;
using namespace fixtures;

TEST_SUITE("core")
{
    TEST_CASE("identity map of a path is an induced isomorphism")
    {
        auto p = path(3);
        CHECK(is_ordered_subgraph_iso(p, p, OrderPreservingMap{ { 0, 1, 2 } }, true));
    }

    TEST_CASE("a path sits in a triangle but not induced")
    {
        auto f = OrderPreservingMap{ { 0, 1, 2 } };
        CHECK(is_ordered_subgraph_iso(clique(3), path(3), f, false));
        CHECK_FALSE(is_ordered_subgraph_iso(clique(3), path(3), f, true));
    }

    TEST_CASE("example spider embeds through the subsequence witness")
    {
        auto r = ops_to_spiders(example_ops());
        std::vector<int> images{ 0, 1, 4, 5, 9, 10, 12 };
        CHECK(is_ordered_subgraph_iso(r.g, r.h, OrderPreservingMap{ images }, true));
        CHECK(induced_subgraph(r.g, images).edges() == r.h.edges());
    }

    TEST_CASE("map errors")
    {
        CHECK_THROWS_AS(OrderPreservingMap({ 1, 1 }), std::invalid_argument);
        CHECK_THROWS_AS((void) is_ordered_subgraph_iso(path(3), path(3), OrderPreservingMap{ { 0, 1 } }, false), std::invalid_argument);
        CHECK_THROWS_AS((void) is_ordered_subgraph_iso(path(3), path(4), OrderPreservingMap{ { 0, 1, 2, 3 } }, false), std::invalid_argument);
        auto d = make_directed(3, std::vector<Edge>{ });
        CHECK_THROWS_AS((void) is_ordered_subgraph_iso(d, path(3), OrderPreservingMap{ { 0, 1, 2 } }, false), std::invalid_argument);
    }

    TEST_CASE("induced subgraph")
    {
        auto e = induced_subgraph(clique(3), std::vector{ 0, 2 });
        CHECK(e.size() == 2);
        CHECK(e.edge_count() == 1);
        auto c = cycle(5);
        CHECK(induced_subgraph(c, std::vector{ 0, 1, 2, 3, 4 }).edges() == c.edges());
        CHECK_THROWS_AS((void) induced_subgraph(c, std::vector{ 0, 5 }), std::invalid_argument);
    }

    TEST_CASE("complement")
    {
        auto t = complement(make_undirected(3, std::vector<Edge>{ }));
        CHECK(t.edges() == clique(3).edges());

        std::mt19937_64 rng(7);
        for (int round = 0 ; round < 20 ; ++round) {
            std::vector<Edge> e;
            for (int i = 0 ; i < 9 ; ++i)
                for (int j = i + 1 ; j < 9 ; ++j)
                    if (rng() % 2)
                        e.emplace_back(i, j);
            auto g = make_undirected(9, e);
            CHECK(complement(complement(g)).edges() == g.edges());
        }

        CHECK_THROWS_AS((void) complement(make_directed(2, std::vector<Edge>{ { 0, 1 } })), std::invalid_argument);
    }

    TEST_CASE("complement of the threshold reduction is interval ordered")
    {
        auto threshold = ops_to_inclusion_class(InclusionClass::threshold, example_ops());
        auto interval = ops_to_interval_ordered(IntervalFlavour::interval, example_ops());
        CHECK(complement(threshold.g).edges() == interval.g.edges());
        CHECK(verify_ordering(OrderingKind::interval, ordered_g(interval)).ok);
    }

    TEST_CASE("common solution verification")
    {
        CHECK(verify_common_solution(path(3), clique(3), CommonSolution{ McoVariant::mcois, { }, 0 }).ok);
        CHECK(verify_common_solution(path(3), clique(3), CommonSolution{ McoVariant::mcos, { }, 0 }).ok);

        CommonSolution identity{ McoVariant::mcois, { { 0, 0 }, { 1, 1 }, { 2, 2 } }, 3 };
        CHECK(verify_common_solution(clique(3), clique(3), identity).ok);
        CHECK_FALSE(verify_common_solution(path(3), clique(3), identity).ok);

        CommonSolution wrong_value{ McoVariant::mcos, { { 0, 0 }, { 1, 1 } }, 2 };
        CHECK_FALSE(verify_common_solution(clique(3), clique(3), wrong_value).ok);

        CommonSolution crossing{ McoVariant::mcois, { { 0, 1 }, { 1, 0 } }, 2 };
        CHECK_FALSE(verify_common_solution(clique(3), clique(3), crossing).ok);
    }
}
