/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_TESTS_UNIT_FIXTURES_HH
#define ORDSUB_GUARD_TESTS_UNIT_FIXTURES_HH 1

#include <ordsub/instances.hh>
#include <ordsub/ordered_graph.hh>

#include <vector>

namespace fixtures
{
    using ordsub::Edge;
    using ordsub::OrderedGraph;

    inline auto path(int n) -> OrderedGraph
    {
        std::vector<Edge> e;
        for (int i = 0 ; i + 1 < n ; ++i)
            e.emplace_back(i, i + 1);
        return ordsub::make_undirected(n, e);
    }

    inline auto cycle(int n) -> OrderedGraph
    {
        std::vector<Edge> e;
        for (int i = 0 ; i + 1 < n ; ++i)
            e.emplace_back(i, i + 1);
        e.emplace_back(0, n - 1);
        return ordsub::make_undirected(n, e);
    }

    inline auto clique(int n) -> OrderedGraph
    {
        std::vector<Edge> e;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                e.emplace_back(i, j);
        return ordsub::make_undirected(n, e);
    }

    // Centre first.
    inline auto star(int leaves) -> OrderedGraph
    {
        std::vector<Edge> e;
        for (int i = 1 ; i <= leaves ; ++i)
            e.emplace_back(0, i);
        return ordsub::make_undirected(leaves + 1, e);
    }

    // X-vertices 0..a-1, then Y-vertices a..a+b-1.
    inline auto complete_bipartite(int a, int b) -> OrderedGraph
    {
        std::vector<ordsub::Side> s(a + b, ordsub::Side::x);
        std::vector<Edge> e;
        for (int i = 0 ; i < a ; ++i) {
            for (int j = 0 ; j < b ; ++j)
                e.emplace_back(i, a + j);
        }
        for (int j = 0 ; j < b ; ++j)
            s[a + j] = ordsub::Side::y;
        return ordsub::make_bipartite(s, e);
    }

    // C_6 with alternating sides.
    inline auto bipartite_hexagon() -> OrderedGraph
    {
        std::vector<ordsub::Side> s;
        for (int i = 0 ; i < 6 ; ++i)
            s.push_back(i % 2 ? ordsub::Side::y : ordsub::Side::x);
        std::vector<Edge> e;
        for (int i = 0 ; i < 6 ; ++i)
            e.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
        return ordsub::make_bipartite(s, e);
    }

    inline auto example_ops() -> ordsub::OpsInstance
    {
        return { { 4, 2, 1, 6, 3, 5 }, { 2, 3, 1 } };
    }

    // The graph in the order under which the reduction's claim holds.
    inline auto ordered_g(const ordsub::ReducedInstance & r) -> OrderedGraph
    {
        return r.g_order.empty() ? r.g : ordsub::reorder(r.g, r.g_order);
    }
}

#endif
