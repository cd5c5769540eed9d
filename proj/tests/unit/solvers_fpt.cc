/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/errors.hh>
#include <ordsub/orderings.hh>
#include <ordsub/pathwidth_dp.hh>
#include <ordsub/vertex_cover_dp.hh>

#include <doctest.h>

#include <vector>

using namespace ordsub;
using namespace fixtures;

namespace
{
    auto pathwidth_value(McoVariant variant, const OrderedGraph & g, const OrderedGraph & h) -> long
    {
        auto s = mco_pathwidth(variant, g, nice_decomposition_from_ordering(g), h, nice_decomposition_from_ordering(h));
        CHECK(verify_common_solution(g, h, s).ok);
        return s.value;
    }

    auto cover_value(McoVariant variant, const OrderedGraph & g, const OrderedGraph & h) -> long
    {
        auto s = mco_vertex_cover(variant, g, h);
        CHECK(verify_common_solution(g, h, s).ok);
        return s.value;
    }
}

TEST_SUITE("solvers-fpt")
{
    TEST_CASE("pathwidth DP on paths")
    {
        CHECK(pathwidth_value(McoVariant::mcois, path(3), path(3)) == 3);
        CHECK(pathwidth_value(McoVariant::mcos, path(3), path(3)) == 2);
    }

    TEST_CASE("pathwidth DP with an empty pattern")
    {
        auto empty = make_undirected(0, std::vector<Edge>{ });
        CHECK(pathwidth_value(McoVariant::mcois, path(4), empty) == 0);
        CHECK(pathwidth_value(McoVariant::mcos, path(4), empty) == 0);
    }

    TEST_CASE("pathwidth DP checks its decompositions")
    {
        auto d = nice_decomposition_from_ordering(path(3));
        CHECK_THROWS((void) mco_pathwidth(McoVariant::mcos, path(4), d, path(3), d));
    }

    TEST_CASE("minimum vertex cover")
    {
        CHECK(minimum_vertex_cover(star(4)) == std::vector{ 0 });
        CHECK(minimum_vertex_cover(cycle(5)).size() == 3);
        CHECK(minimum_vertex_cover(make_undirected(3, std::vector<Edge>{ })).empty());
    }

    TEST_CASE("twin classes")
    {
        CHECK(twin_classes(clique(5)).classes.size() == 1);
        auto p = twin_classes(path(3));
        CHECK(p.classes == std::vector<std::vector<int>>{ { 0, 2 }, { 1 } });
        CHECK(p.class_of == std::vector{ 0, 1, 0 });
    }

    TEST_CASE("vertex cover DP on stars")
    {
        CHECK(cover_value(McoVariant::mcois, star(3), star(3)) == 4);
        CHECK(cover_value(McoVariant::mcos, star(3), star(3)) == 3);
    }

    TEST_CASE("vertex cover DP with a single vertex pattern")
    {
        auto one = make_undirected(1, std::vector<Edge>{ });
        CHECK(cover_value(McoVariant::mcois, cycle(6), one) == 1);
        CHECK(cover_value(McoVariant::mcos, cycle(6), one) == 0);
    }

    TEST_CASE("vertex cover DP guard and hint")
    {
        CHECK_THROWS_AS((void) mco_vertex_cover(McoVariant::mcos, clique(16), path(2)), GuardExceeded);
        VertexCoverOptions o;
        o.cover_hint = std::vector{ 0 };
        CHECK_THROWS_AS((void) mco_vertex_cover(McoVariant::mcos, path(3), path(2), o), std::invalid_argument);
        o.cover_hint = std::vector{ 0, 1, 2 };
        CHECK(mco_vertex_cover(McoVariant::mcos, path(3), path(2), o).value == 1);
    }
}
