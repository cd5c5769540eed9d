/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/orderings.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        // Bit rows selecting the vertices on each side.
        struct SideMasks
        {
            vector<Word> x, y;

            explicit SideMasks(const OrderedGraph & g) :
                x(words_for(g.size()), 0),
                y(words_for(g.size()), 0)
            {
                for (int v = 0 ; v < g.size() ; ++v)
                    set_bit(g.side(v) == Side::x ? std::span<Word>{ x } : std::span<Word>{ y }, v);
            }

            [[nodiscard]] auto opposite(Side s) const -> const vector<Word> &
            {
                return s == Side::x ? y : x;
            }
        };

        // First w in [from, n) with w in N(a) but not in N(b), restricted to mask if given.
        auto first_in_difference(const OrderedGraph & g, int a, int b, int from, const vector<Word> * mask = nullptr) -> int
        {
            auto ra = g.row(a), rb = g.row(b);
            if (mask)
                return first_set_in([&](int k) { return ra[k] & ~rb[k] & (*mask)[k]; }, from, g.size());
            return first_set_in([&](int k) { return ra[k] & ~rb[k]; }, from, g.size());
        }

        auto verify_interval(const OrderedGraph & g) -> VerifyReport
        {
            for (int u = 0 ; u < g.size() ; ++u)
                for (int v = u + 1 ; v < g.size() ; ++v)
                    if (int w = first_in_difference(g, u, v, v + 1) ; w != -1)
                        return VerifyReport::fail({ u, v, w }, "interval: uw is an edge but vw is not");
            return VerifyReport::pass();
        }

        auto verify_interval_bigraph(const OrderedGraph & g) -> VerifyReport
        {
            SideMasks masks{ g };
            for (int u = 0 ; u < g.size() ; ++u)
                for (int v = u + 1 ; v < g.size() ; ++v) {
                    if (g.side(u) != g.side(v))
                        continue;
                    if (int w = first_in_difference(g, u, v, v + 1, &masks.opposite(g.side(u))) ; w != -1)
                        return VerifyReport::fail({ u, v, w }, "interval_bigraph: uw is an edge but vw is not");
                }
            return VerifyReport::pass();
        }

        auto verify_comparability(const OrderedGraph & g) -> VerifyReport
        {
            for (int u = 0 ; u < g.size() ; ++u)
                for (int v : g.neighbours(u)) {
                    if (v <= u)
                        continue;
                    if (int w = first_in_difference(g, v, u, v + 1) ; w != -1)
                        return VerifyReport::fail({ u, v, w }, "comparability: uv and vw are edges but uw is not");
                }
            return VerifyReport::pass();
        }

        auto verify_weak(const OrderedGraph & g) -> VerifyReport
        {
            SideMasks masks{ g };
            for (int x1 = 0 ; x1 < g.size() ; ++x1) {
                if (g.side(x1) != Side::x)
                    continue;
                for (int x2 = x1 + 1 ; x2 < g.size() ; ++x2) {
                    if (g.side(x2) != Side::x)
                        continue;
                    // The smallest y1 adjacent to x2 but not x1 admits a y2 iff any does.
                    int y1 = first_in_difference(g, x2, x1, 0, &masks.y);
                    if (y1 == -1)
                        continue;
                    auto r1 = g.row(x1);
                    int y2 = first_set_in([&](int k) { return r1[k] & masks.y[k]; }, y1 + 1, g.size());
                    if (y2 != -1)
                        return VerifyReport::fail({ x1, x2, y1, y2 }, "weak: x1y2 and x2y1 are edges but x1y1 is not");
                }
            }
            return VerifyReport::pass();
        }

        auto verify_min(const OrderedGraph & g) -> VerifyReport
        {
            for (int i = 0 ; i < g.size() ; ++i)
                for (int j : g.neighbours(i))
                    for (int i2 = i + 1 ; i2 < g.size() ; ++i2) {
                        auto r2 = g.row(i2), r1 = g.row(i);
                        int j2 = first_set_in([&](int k) { return r2[k] & ~r1[k]; }, 0, j);
                        if (j2 != -1)
                            return VerifyReport::fail({ i, j, i2, j2 }, "min: arcs ij and i'j' present but arc ij' is not");
                    }
            return VerifyReport::pass();
        }

        auto verify_inclusion(const OrderedGraph & g) -> VerifyReport
        {
            int last_y = -1;
            for (int v = 0 ; v < g.size() ; ++v)
                if (g.side(v) == Side::y)
                    last_y = v;
            for (int v = 0 ; v < last_y ; ++v)
                if (g.side(v) == Side::x)
                    return VerifyReport::fail({ v, last_y }, "inclusion: X vertex precedes Y vertex");

            SideMasks masks{ g };
            for (int a = 0 ; a < g.size() ; ++a)
                for (int b = a + 1 ; b < g.size() ; ++b) {
                    if (g.side(a) != g.side(b))
                        continue;
                    if (int c = first_in_difference(g, a, b, 0, &masks.opposite(g.side(a))) ; c != -1)
                        return VerifyReport::fail({ a, b, c }, "inclusion: neighbourhood of a is not contained in that of b");
                }
            return VerifyReport::pass();
        }

        auto verify_perfect_elimination(const OrderedGraph & g) -> VerifyReport
        {
            for (int v = 0 ; v < g.size() ; ++v)
                for (int a : g.neighbours(v)) {
                    if (a <= v)
                        continue;
                    if (int b = first_in_difference(g, v, a, a + 1) ; b != -1)
                        return VerifyReport::fail({ v, a, b }, "perfect_elimination: later neighbours a and b are not adjacent");
                }
            return VerifyReport::pass();
        }

        auto verify_cocomparability(const OrderedGraph & g) -> VerifyReport
        {
            for (int i = 0 ; i < g.size() ; ++i)
                for (int j = i + 1 ; j < g.size() ; ++j) {
                    if (g.adjacent(i, j))
                        continue;
                    if (int k = first_in_difference(g, i, j, j + 1) ; k != -1)
                        return VerifyReport::fail({ i, j, k }, "cocomparability: ik is an edge but ij and jk are not");
                }
            return VerifyReport::pass();
        }
    }

    auto to_string(OrderingKind kind) -> string_view
    {
        switch (kind) {
            case OrderingKind::interval: return "interval";
            case OrderingKind::interval_bigraph: return "interval_bigraph";
            case OrderingKind::comparability: return "comparability";
            case OrderingKind::weak: return "weak";
            case OrderingKind::comparability_weak: return "comparability_weak";
            case OrderingKind::min: return "min";
            case OrderingKind::inclusion: return "inclusion";
            case OrderingKind::perfect_elimination: return "perfect_elimination";
            case OrderingKind::cocomparability: return "cocomparability";
        }
        return "?";
    }

    auto parse_ordering_kind(string_view s) -> optional<OrderingKind>
    {
        for (auto k : all_ordering_kinds)
            if (to_string(k) == s)
                return k;
        return std::nullopt;
    }

    auto ordering_applies(OrderingKind kind, const OrderedGraph & g) -> bool
    {
        switch (kind) {
            case OrderingKind::min:
                return g.directed();
            case OrderingKind::weak:
            case OrderingKind::comparability_weak:
            case OrderingKind::interval_bigraph:
                return g.kind() == GraphKind::bipartite;
            case OrderingKind::inclusion:
                return g.has_sides();
            default:
                return ! g.directed();
        }
    }

    auto verify_ordering(OrderingKind kind, const OrderedGraph & g) -> VerifyReport
    {
        if (! ordering_applies(kind, g))
            throw invalid_argument("ordering kind " + string(to_string(kind)) + " does not apply to a "
                    + string(to_string(g.kind())) + " graph" + (g.has_sides() ? "" : " without sides"));

        switch (kind) {
            case OrderingKind::interval: return verify_interval(g);
            case OrderingKind::interval_bigraph: return verify_interval_bigraph(g);
            case OrderingKind::comparability: return verify_comparability(g);
            case OrderingKind::weak: return verify_weak(g);
            case OrderingKind::comparability_weak:
                if (auto r = verify_comparability(g) ; ! r)
                    return r;
                return verify_weak(g);
            case OrderingKind::min: return verify_min(g);
            case OrderingKind::inclusion: return verify_inclusion(g);
            case OrderingKind::perfect_elimination: return verify_perfect_elimination(g);
            case OrderingKind::cocomparability: return verify_cocomparability(g);
        }
        throw invalid_argument("unknown ordering kind");
    }

    auto to_string(InclusionClass c) -> string_view
    {
        switch (c) {
            case InclusionClass::threshold: return "threshold";
            case InclusionClass::chain: return "chain";
            case InclusionClass::cochain: return "cochain";
            case InclusionClass::none: return "none";
        }
        return "?";
    }

    auto inclusion_classes(const OrderedGraph & g) -> vector<InclusionClass>
    {
        bool x_clique = true, x_independent = true, y_clique = true, y_independent = true;
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = u + 1 ; v < g.size() ; ++v) {
                if (g.side(u) != g.side(v))
                    continue;
                bool e = g.adjacent(u, v);
                if (g.side(u) == Side::x)
                    (e ? x_independent : x_clique) = false;
                else
                    (e ? y_independent : y_clique) = false;
            }

        vector<InclusionClass> result;
        if (x_clique && y_independent)
            result.push_back(InclusionClass::threshold);
        if (x_independent && y_independent)
            result.push_back(InclusionClass::chain);
        if (x_clique && y_clique)
            result.push_back(InclusionClass::cochain);
        return result;
    }

    auto classify_inclusion(const OrderedGraph & g) -> InclusionClass
    {
        if (! g.has_sides())
            throw PreconditionFailed("classify_inclusion needs a side map", VerifyReport::fail({ }, "no side map"));
        if (auto r = verify_ordering(OrderingKind::inclusion, g) ; ! r)
            throw PreconditionFailed("not an inclusion ordering", r);

        auto classes = inclusion_classes(g);
        return classes.empty() ? InclusionClass::none : classes.front();
    }

    namespace
    {
        // Highest rank linked to v, or v itself if none is higher.
        auto last_neighbours(const OrderedGraph & g) -> vector<int>
        {
            vector<int> last(g.size());
            for (int v = 0 ; v < g.size() ; ++v) {
                last[v] = v;
                if (! g.neighbours(v).empty())
                    last[v] = std::max(last[v], g.neighbours(v).back());
                if (g.directed() && ! g.in_neighbours(v).empty())
                    last[v] = std::max(last[v], g.in_neighbours(v).back());
            }
            return last;
        }
    }

    auto ordering_pathwidth(const OrderedGraph & g) -> int
    {
        auto last = last_neighbours(g);
        // expiring[i] counts vertices whose last neighbour is i.
        vector<int> expiring(g.size() + 1, 0);
        int open = 0, best = 0;
        for (int i = 0 ; i < g.size() ; ++i) {
            if (last[i] > i) {
                ++open;
                ++expiring[last[i]];
            }
            open -= expiring[i];
            best = std::max(best, open);
        }
        return best;
    }

    auto nice_decomposition_from_ordering(const OrderedGraph & g) -> NicePathDecomposition
    {
        auto last = last_neighbours(g);
        NicePathDecomposition result;
        result.bags.emplace_back();

        vector<int> bag;
        std::size_t widest = 0;
        for (int i = 0 ; i < g.size() ; ++i) {
            bag.push_back(i);
            result.steps.push_back({ StepKind::introduce, i });
            result.bags.push_back(bag);
            result.introduce_order.push_back(i);
            widest = std::max(widest, bag.size());

            auto current = bag;
            for (int u : current)
                if (last[u] <= i) {
                    std::erase(bag, u);
                    result.steps.push_back({ StepKind::forget, u });
                    result.bags.push_back(bag);
                }
        }

        result.width = widest == 0 ? 0 : static_cast<int>(widest) - 1;
        return result;
    }

    auto validate_decomposition(const OrderedGraph & g, const NicePathDecomposition & p) -> void
    {
        const int n = g.size();
        auto fail = [] (const string & why) { throw InvalidDecomposition("invalid nice path decomposition: " + why); };

        if (static_cast<int>(p.steps.size()) != 2 * n || p.bags.size() != p.steps.size() + 1)
            fail("expected " + std::to_string(2 * n) + " steps");
        if (! p.bags.front().empty() || ! p.bags.back().empty())
            fail("first and last bags must be empty");

        vector<int> introduced_at(n, -1), forgotten_at(n, -1);
        vector<char> present(n, 0);
        std::size_t widest = 0;
        for (std::size_t t = 0 ; t < p.steps.size() ; ++t) {
            auto [kind, v] = p.steps[t];
            if (v < 0 || v >= n)
                fail("step vertex out of range");
            if (kind == StepKind::introduce) {
                if (introduced_at[v] != -1)
                    fail("vertex " + std::to_string(v + 1) + " introduced twice");
                introduced_at[v] = static_cast<int>(t);
                present[v] = 1;
            }
            else {
                if (! present[v])
                    fail("vertex " + std::to_string(v + 1) + " forgotten while absent");
                forgotten_at[v] = static_cast<int>(t);
                present[v] = 0;
            }

            vector<int> expected;
            for (int u = 0 ; u < n ; ++u)
                if (present[u])
                    expected.push_back(u);
            if (p.bags[t + 1] != expected)
                fail("bag " + std::to_string(t + 1) + " does not match its step");
            widest = std::max(widest, expected.size());
        }

        for (auto [u, v] : g.edges())
            if (std::max(introduced_at[u], introduced_at[v]) > std::min(forgotten_at[u], forgotten_at[v]))
                fail("edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ") is in no bag");

        if (p.width != (widest == 0 ? 0 : static_cast<int>(widest) - 1))
            fail("stated width does not match bags");

        vector<int> order(n);
        for (int v = 0 ; v < n ; ++v)
            order[v] = v;
        std::ranges::sort(order, [&] (int a, int b) { return introduced_at[a] < introduced_at[b]; });
        if (p.introduce_order != order)
            fail("introduce_order does not list vertices by introduction step");

        for (int v = 0 ; v < n ; ++v)
            if (order[v] != v)
                throw InconsistentOrdering("introduce ordering differs from the graph's vertex ordering at rank "
                        + std::to_string(v + 1));
    }
}
