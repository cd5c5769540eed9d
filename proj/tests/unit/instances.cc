/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/instances.hh>
#include <ordsub/og_format.hh>
#include <ordsub/oracle.hh>
#include <ordsub/orderings.hh>
#include <ordsub/vertex_cover_dp.hh>

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace ordsub;
using namespace fixtures;

namespace
{
    auto legs(const OrderedGraph & t) -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int v : t.neighbours(0))
            for (int w : t.neighbours(v))
                if (w != 0)
                    result.emplace_back(v, w);
        std::ranges::sort(result);
        return result;
    }
}

TEST_SUITE("instances")
{
    TEST_CASE("example spiders")
    {
        auto r = ops_to_spiders(example_ops());
        CHECK(r.g.size() == 13);
        CHECK(r.h.size() == 7);
        CHECK(legs(r.g) == std::vector<std::pair<int, int>>{ { 1, 10 }, { 2, 8 }, { 3, 7 }, { 4, 12 }, { 5, 9 }, { 6, 11 } });
        CHECK(legs(r.h) == std::vector<std::pair<int, int>>{ { 1, 5 }, { 2, 6 }, { 3, 4 } });
    }

    TEST_CASE("smallest reductions")
    {
        OpsInstance one{ { 1 }, { 1 } };
        auto s = ops_to_spiders(one);
        CHECK(s.g.edges() == path(3).edges());
        CHECK(brute_ordered_iso(IsoVariant::osi, s.g, s.h));

        auto t = ops_to_trivially_perfect(one);
        CHECK(t.g.edges() == clique(3).edges());

        auto d = ops_to_disjoint_edges(one);
        CHECK(d.g.edges() == path(2).edges());

        for (auto cls : { InclusionClass::threshold, InclusionClass::chain, InclusionClass::cochain }) {
            auto r = ops_to_inclusion_class(cls, one);
            CHECK(r.g.size() == 3);
            CHECK(brute_ordered_iso(IsoVariant::oisi, r.g, r.h));
        }
        for (auto flavour : { IntervalFlavour::interval, IntervalFlavour::interval_bigraph })
            CHECK(brute_ordered_iso(IsoVariant::oisi, ops_to_interval_ordered(flavour, one).g, ops_to_interval_ordered(flavour, one).h));
    }

    TEST_CASE("spider variants")
    {
        CHECK(ops_to_trivially_perfect(example_ops()).g.edge_count() == 18);
        auto d = ops_to_disjoint_edges(example_ops());
        CHECK(d.g.edge_count() == 6);
        CHECK(d.h.edge_count() == 3);
        for (int v = 0 ; v < d.g.size() ; ++v)
            CHECK(d.g.degree(v) == 1);
    }

    TEST_CASE("example chain instance")
    {
        auto r = ops_to_inclusion_class(InclusionClass::chain, example_ops());
        CHECK(r.g.size() == 13);
        CHECK(r.claimed == OrderingKind::inclusion);
        CHECK(verify_ordering(OrderingKind::inclusion, ordered_g(r)).ok);
        auto b = ops_to_interval_ordered(IntervalFlavour::interval_bigraph, example_ops());
        CHECK(verify_ordering(OrderingKind::interval_bigraph, ordered_g(b)).ok);
    }

    TEST_CASE("biclique reductions")
    {
        auto split = bb_to_ordered(BicliqueTarget::split, complete_bipartite(2, 2), 2);
        CHECK(verify_ordering(OrderingKind::perfect_elimination, ordered_g(split)).ok);
        CHECK(brute_ordered_iso(IsoVariant::osi, split.g, split.h));

        for (auto target : { BicliqueTarget::split, BicliqueTarget::cobipartite }) {
            auto r = bb_to_ordered(target, bipartite_hexagon(), 2);
            CHECK_FALSE(brute_ordered_iso(IsoVariant::osi, r.g, r.h));
        }

        CHECK_THROWS((void) bb_to_ordered(BicliqueTarget::split, path(4), 1));
    }

    TEST_CASE("generators")
    {
        for (auto cls : { GeneratorClass::interval, GeneratorClass::interval_bigraph, GeneratorClass::two_dor,
                GeneratorClass::signed_interval, GeneratorClass::chain, GeneratorClass::arbitrary })
            CHECK(random_instance({ cls, 0 }, 9, 0.0, 3).edge_count() == 0);

        // Side cliques are part of the class; only cross edges vanish.
        auto t = random_instance({ GeneratorClass::threshold, 0 }, 9, 0.0, 3);
        for (auto [a, b] : t.edges())
            CHECK(t.side(a) == t.side(b));

        auto full = random_instance({ GeneratorClass::interval, 0 }, 7, 1.0, 3);
        CHECK(full.edge_count() == 21);
        CHECK(verify_ordering(OrderingKind::interval, full).ok);

        for (auto cls : { GeneratorClass::interval, GeneratorClass::interval_bigraph, GeneratorClass::two_dor,
                GeneratorClass::signed_interval, GeneratorClass::threshold, GeneratorClass::chain, GeneratorClass::cochain })
            for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
                auto g = random_instance({ cls, 0 }, 12, 0.5, seed);
                CHECK(verify_ordering(*characteristic_kind(cls), g).ok);
                CHECK(print_og(g) == print_og(random_instance({ cls, 0 }, 12, 0.5, seed)));
            }

        for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
            CHECK(ordering_pathwidth(random_instance({ GeneratorClass::bounded_pathwidth, 2 }, 12, 0.7, seed)) <= 2);
            CHECK(minimum_vertex_cover(random_instance({ GeneratorClass::bounded_vc, 3 }, 12, 0.7, seed)).size() <= 3);
        }
    }

    TEST_CASE("generator names round trip")
    {
        for (auto cls : { GeneratorClass::interval, GeneratorClass::two_dor, GeneratorClass::bounded_vc })
            CHECK(parse_generator_class(to_string(cls)) == cls);
        CHECK(parse_generator_class("2dor") == GeneratorClass::two_dor);
        CHECK_FALSE(parse_generator_class("nonsense"));
    }
}
