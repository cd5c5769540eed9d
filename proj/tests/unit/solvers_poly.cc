/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "fixtures.hh"

#include <ordsub/errors.hh>
#include <ordsub/inclusion_dp.hh>
#include <ordsub/instances.hh>
#include <ordsub/shift.hh>

#include <doctest.h>

#include <vector>

using namespace ordsub;
using namespace fixtures;

TEST_SUITE("solvers-poly")
{
    TEST_CASE("single edge maps to itself without shifting")
    {
        auto e = complete_bipartite(1, 1);
        auto r = osi_shift_2dor(e, e);
        REQUIRE(r.map);
        CHECK(r.map->images() == std::vector{ 0, 1 });
        CHECK(r.trace.iterations == 0);
    }

    TEST_CASE("initial map already valid")
    {
        auto g = make_bipartite({ Side::x, Side::x, Side::y }, std::vector<Edge>{ { 0, 2 }, { 1, 2 } });
        auto r = osi_shift_2dor(g, complete_bipartite(1, 1));
        REQUIRE(r.map);
        CHECK(r.map->images() == std::vector{ 0, 2 });
    }

    TEST_CASE("shift rejects a host without a comparability weak ordering")
    {
        auto g = make_bipartite({ Side::x, Side::y, Side::x, Side::y },
                std::vector<Edge>{ { 0, 3 }, { 1, 2 } });
        CHECK_THROWS_AS((void) osi_shift_2dor(g, complete_bipartite(1, 1)), PreconditionFailed);
    }

    TEST_CASE("a single loop maps to itself")
    {
        auto loop = make_directed(1, std::vector<Edge>{ { 0, 0 } });
        auto r = osi_shift_signed_interval(loop, loop);
        REQUIRE(r.map);
        CHECK(r.map->images() == std::vector{ 0 });
    }

    TEST_CASE("a missing loop is a case one shift with p equal to q")
    {
        auto g = make_directed(2, std::vector<Edge>{ { 1, 1 } });
        auto h = make_directed(1, std::vector<Edge>{ { 0, 0 } });
        auto r = osi_shift_signed_interval(g, h);
        REQUIRE(r.map);
        CHECK(r.map->images() == std::vector{ 1 });
        REQUIRE(r.trace.steps.size() == 1);
        CHECK(r.trace.steps[0].shift_case == 1);
        CHECK(r.trace.steps[0].p == r.trace.steps[0].q);
    }

    TEST_CASE("shift says no when nothing fits")
    {
        auto g = make_directed(2, std::vector<Edge>{ });
        auto h = make_directed(1, std::vector<Edge>{ { 0, 0 } });
        CHECK_FALSE(osi_shift_signed_interval(g, h).map);
    }

    TEST_CASE("inclusion DP on identical and tiny inputs")
    {
        for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
            auto g = random_instance({ GeneratorClass::threshold, 0 }, 8, 0.5, seed);
            CHECK(mcois_inclusion(g, g).value == 8);
            auto one = random_instance({ GeneratorClass::threshold, 0 }, 1, 0.5, seed);
            auto s = mcois_inclusion(g, one);
            CHECK(s.value == 1);
            CHECK(verify_common_solution(g, one, s).ok);
        }
    }

    TEST_CASE("inclusion DP refuses mixed classes")
    {
        auto g = random_instance({ GeneratorClass::chain, 0 }, 6, 0.5, 1);
        auto h = random_instance({ GeneratorClass::cochain, 0 }, 6, 0.5, 1);
        CHECK_THROWS_AS((void) mcois_inclusion(g, h), PreconditionFailed);
    }
}
