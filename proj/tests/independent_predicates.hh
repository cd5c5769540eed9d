/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_TESTS_INDEPENDENT_PREDICATES_HH
#define ORDSUB_GUARD_TESTS_INDEPENDENT_PREDICATES_HH 1

#include <ordsub/ordered_graph.hh>
#include <ordsub/orderings.hh>

#include <vector>

// Direct transcriptions of the ordering predicates, enumerating every tuple
// in lexicographic order. Deliberately naive so they share nothing with the
// library's verifiers.
namespace independent
{
    using ordsub::OrderedGraph;
    using ordsub::OrderingKind;
    using ordsub::Side;

    inline auto e(const OrderedGraph & g, int a, int b) -> bool
    {
        return g.adjacent(a, b);
    }

    inline auto violates(OrderingKind kind, const OrderedGraph & g, const std::vector<int> & t) -> bool
    {
        int n = g.size();
        for (int v : t)
            if (v < 0 || v >= n)
                return false;
        auto sz = t.size();
        switch (kind) {
            case OrderingKind::interval:
                return sz == 3 && t[0] < t[1] && t[1] < t[2] && e(g, t[0], t[2]) && ! e(g, t[1], t[2]);
            case OrderingKind::interval_bigraph:
                return sz == 3 && t[0] < t[1] && t[1] < t[2] && g.side(t[0]) == g.side(t[1]) && g.side(t[2]) != g.side(t[0])
                    && e(g, t[0], t[2]) && ! e(g, t[1], t[2]);
            case OrderingKind::comparability:
                return sz == 3 && t[0] < t[1] && t[1] < t[2] && e(g, t[0], t[1]) && e(g, t[1], t[2]) && ! e(g, t[0], t[2]);
            case OrderingKind::weak:
                return sz == 4 && t[0] < t[1] && t[2] < t[3] && g.side(t[0]) == Side::x && g.side(t[1]) == Side::x
                    && g.side(t[2]) == Side::y && g.side(t[3]) == Side::y
                    && e(g, t[0], t[3]) && e(g, t[1], t[2]) && ! e(g, t[0], t[2]);
            case OrderingKind::comparability_weak:
                return violates(OrderingKind::comparability, g, t) || violates(OrderingKind::weak, g, t);
            case OrderingKind::min:
                return sz == 4 && e(g, t[0], t[1]) && e(g, t[2], t[3])
                    && ! e(g, std::min(t[0], t[2]), std::min(t[1], t[3]));
            case OrderingKind::inclusion:
                if (sz == 2)
                    return t[0] < t[1] && g.side(t[0]) == Side::x && g.side(t[1]) == Side::y;
                return sz == 3 && t[0] < t[1] && g.side(t[0]) == g.side(t[1]) && g.side(t[2]) != g.side(t[0])
                    && e(g, t[0], t[2]) && ! e(g, t[1], t[2]);
            case OrderingKind::perfect_elimination:
                return sz == 3 && t[0] < t[1] && t[1] < t[2] && e(g, t[0], t[1]) && e(g, t[0], t[2]) && ! e(g, t[1], t[2]);
            case OrderingKind::cocomparability:
                return sz == 3 && t[0] < t[1] && t[1] < t[2] && e(g, t[0], t[2]) && ! e(g, t[0], t[1]) && ! e(g, t[1], t[2]);
        }
        return false;
    }

    // Lexicographically first violating tuple, or empty.
    inline auto first_violation(OrderingKind kind, const OrderedGraph & g) -> std::vector<int>
    {
        int n = g.size();
        auto search = [&] (OrderingKind k, int arity) -> std::vector<int> {
            std::vector<int> t(arity, 0);
            if (n == 0)
                return { };
            while (true) {
                if (violates(k, g, t))
                    return t;
                int p = arity - 1;
                while (p >= 0 && ++t[p] == n)
                    t[p--] = 0;
                if (p < 0)
                    return { };
            }
        };

        switch (kind) {
            case OrderingKind::comparability_weak:
                if (auto w = search(OrderingKind::comparability, 3) ; ! w.empty())
                    return w;
                return search(OrderingKind::weak, 4);
            case OrderingKind::weak:
            case OrderingKind::min:
                return search(kind, 4);
            case OrderingKind::inclusion: {
                int last_y = -1;
                for (int v = 0 ; v < n ; ++v)
                    if (g.side(v) == Side::y)
                        last_y = v;
                for (int v = 0 ; v < last_y ; ++v)
                    if (g.side(v) == Side::x)
                        return { v, last_y };
                return search(kind, 3);
            }
            default:
                return search(kind, 3);
        }
    }

    inline auto holds(OrderingKind kind, const OrderedGraph & g) -> bool
    {
        return first_violation(kind, g).empty();
    }
}

#endif
