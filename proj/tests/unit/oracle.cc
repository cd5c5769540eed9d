/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/errors.hh>
#include <ordsub/oracle.hh>

#include <doctest.h>

#include <random>
#include <vector>

using namespace ordsub;
using namespace fixtures;

TEST_SUITE("oracle")
{
    TEST_CASE("a graph embeds in itself by the identity")
    {
        auto g = cycle(6);
        auto f = brute_ordered_iso(IsoVariant::oisi, g, g);
        REQUIRE(f);
        CHECK(f->images() == std::vector{ 0, 1, 2, 3, 4, 5 });
    }

    TEST_CASE("example spiders are a yes instance")
    {
        auto r = ops_to_spiders(example_ops());
        auto f = brute_ordered_iso(IsoVariant::osi, r.g, r.h);
        REQUIRE(f);
        CHECK(is_ordered_subgraph_iso(r.g, r.h, *f, false));
    }

    TEST_CASE("an edge does not embed in an independent set")
    {
        auto g = make_undirected(3, std::vector<Edge>{ });
        CHECK_FALSE(brute_ordered_iso(IsoVariant::osi, g, path(2)));
    }

    TEST_CASE("size guards")
    {
        CHECK_THROWS_AS((void) brute_ordered_iso(IsoVariant::osi, path(40), path(2)), GuardExceeded);
        OracleOptions o;
        o.unguarded = true;
        CHECK(brute_ordered_iso(IsoVariant::osi, path(40), path(2), o));
        CHECK_THROWS_AS((void) brute_mco(McoVariant::mcos, path(30), path(2)), GuardExceeded);
    }

    TEST_CASE("common subgraph of a graph with itself")
    {
        auto g = cycle(5);
        auto s = brute_mco(McoVariant::mcois, g, g);
        CHECK(s.value == 5);
        CHECK(s.pairs == std::vector<std::pair<int, int>>{ { 0, 0 }, { 1, 1 }, { 2, 2 }, { 3, 3 }, { 4, 4 } });
        CHECK(brute_mco(McoVariant::mcos, g, g).value == 5);
    }

    TEST_CASE("path against triangle")
    {
        auto s = brute_mco(McoVariant::mcos, path(3), clique(3));
        CHECK(s.value == 2);
        CHECK(verify_common_solution(path(3), clique(3), s).ok);
        CHECK(brute_mco(McoVariant::mcois, path(3), clique(3)).value == 2);
    }

    TEST_CASE("empty graphs give zero")
    {
        auto empty = make_undirected(0, std::vector<Edge>{ });
        CHECK(brute_mco(McoVariant::mcos, empty, clique(3)).value == 0);
        CHECK(brute_mco(McoVariant::mcois, clique(3), empty).value == 0);
    }

    TEST_CASE("subsequence oracle")
    {
        auto w = brute_ops(example_ops());
        REQUIRE(w);
        CHECK(*w == std::vector{ 1, 4, 5 });
        CHECK(brute_ops({ { 3, 1, 2 }, { 1 } }) == std::vector{ 1 });
        CHECK_FALSE(brute_ops({ { 2, 1 }, { 1, 2 } }));
        CHECK_THROWS_AS((void) brute_ops({ { 1, 1 }, { 1 } }), std::invalid_argument);
    }

    TEST_CASE("balanced biclique")
    {
        auto b = brute_balanced_biclique(complete_bipartite(2, 2), 2);
        REQUIRE(b);
        CHECK(b->first == std::vector{ 0, 1 });
        CHECK(b->second == std::vector{ 2, 3 });
        CHECK_FALSE(brute_balanced_biclique(bipartite_hexagon(), 2));
    }

    TEST_CASE("balanced biclique agrees with subset enumeration")
    {
        std::mt19937_64 rng(11);
        for (int round = 0 ; round < 60 ; ++round) {
            int n = 2 + int(rng() % 9);
            std::vector<Side> s(n);
            for (auto & x : s)
                x = rng() % 2 ? Side::y : Side::x;
            std::vector<Edge> e;
            for (int i = 0 ; i < n ; ++i)
                for (int j = i + 1 ; j < n ; ++j)
                    if (s[i] != s[j] && rng() % 3)
                        e.emplace_back(i, j);
            auto g = make_bipartite(s, e);
            int k = 1 + int(rng() % 3);

            bool found = false;
            for (unsigned mask = 0 ; mask < (1u << n) && ! found ; ++mask) {
                std::vector<int> a, b;
                for (int v = 0 ; v < n ; ++v)
                    if (mask & (1u << v))
                        (s[v] == Side::x ? a : b).push_back(v);
                if (int(a.size()) != k || int(b.size()) != k)
                    continue;
                bool complete = true;
                for (int x : a)
                    for (int y : b)
                        complete = complete && g.adjacent(x, y);
                found = complete;
            }
            CHECK(brute_balanced_biclique(g, k).has_value() == found);
        }
    }
}
