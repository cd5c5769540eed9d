/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/inclusion_dp.hh>
#include <ordsub/orderings.hh>

#include <algorithm>
#include <limits>
#include <utility>

using std::pair;
using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        constexpr long impossible = std::numeric_limits<long>::min() / 4;

        // Vertices of one graph taking part in a (sub)problem, each side in order.
        struct Window
        {
            const OrderedGraph * graph;
            vector<int> ys, xs;

            // Number of window Y-vertices adjacent to xs[i - 1]; zero for i = 0.
            [[nodiscard]] auto neighbourhoods() const -> vector<int>
            {
                vector<int> nb(xs.size() + 1, 0);
                for (std::size_t i = 0 ; i < xs.size() ; ++i)
                    for (int y : ys)
                        if (graph->adjacent(xs[i], y))
                            ++nb[i + 1];
                return nb;
            }
        };

        struct Candidate
        {
            long value = impossible;
            vector<pair<int, int>> pairs;
        };

        // Best solution matching Y only to Y and X only to X.
        auto same_side_dp(const Window & g, const Window & h) -> Candidate
        {
            const int bg = static_cast<int>(g.xs.size()), bh = static_cast<int>(h.xs.size());
            const int ag = static_cast<int>(g.ys.size()), ah = static_cast<int>(h.ys.size());
            auto nbg = g.neighbourhoods(), nbh = h.neighbourhoods();

            vector<vector<long>> dp(bg + 1, vector<long>(bh + 1, impossible));
            vector<vector<pair<int, int>>> parent(bg + 1, vector<pair<int, int>>(bh + 1, { -1, -1 }));
            dp[0][0] = 0;

            for (int i = 1 ; i <= bg ; ++i)
                for (int j = 1 ; j <= bh ; ++j) {
                    auto consider = [&] (int pi, int pj) {
                        if (dp[pi][pj] == impossible)
                            return;
                        long v = dp[pi][pj] + 1 + std::min(nbg[i] - nbg[pi], nbh[j] - nbh[pj]);
                        if (v > dp[i][j]) {
                            dp[i][j] = v;
                            parent[i][j] = { pi, pj };
                        }
                    };
                    consider(0, 0);
                    for (int pi = 1 ; pi < i ; ++pi)
                        for (int pj = 1 ; pj < j ; ++pj)
                            consider(pi, pj);
                }

            long best = impossible;
            pair<int, int> end{ 0, 0 };
            for (int i = 0 ; i <= bg ; ++i)
                for (int j = 0 ; j <= bh ; ++j) {
                    if (dp[i][j] == impossible || ((i == 0) != (j == 0)))
                        continue;
                    long v = dp[i][j] + std::min(ag - nbg[i], ah - nbh[j]);
                    if (v > best) {
                        best = v;
                        end = { i, j };
                    }
                }

            vector<pair<int, int>> x_pairs;
            for (auto at = end ; at.first != 0 ; at = parent[at.first][at.second])
                x_pairs.push_back(at);
            std::ranges::reverse(x_pairs);

            // Y-vertices adjacent to x_pairs[k] but not x_pairs[k - 1] form a block;
            // blocks appear in Y order from the non-neighbours of the last pair to
            // the neighbours of the first.
            Candidate result;
            result.value = best;
            auto take_block = [&] (int g_from, int g_to, int h_from, int h_to) {
                int d = std::min(g_to - g_from, h_to - h_from);
                for (int t = 0 ; t < d ; ++t)
                    result.pairs.emplace_back(g.ys[g_from + t], h.ys[h_from + t]);
            };

            int levels = static_cast<int>(x_pairs.size());
            auto nb_g_at = [&] (int k) { return k < 0 ? 0 : nbg[x_pairs[k].first]; };
            auto nb_h_at = [&] (int k) { return k < 0 ? 0 : nbh[x_pairs[k].second]; };
            take_block(0, ag - nb_g_at(levels - 1), 0, ah - nb_h_at(levels - 1));
            for (int k = levels - 1 ; k >= 0 ; --k)
                take_block(ag - nb_g_at(k), ag - nb_g_at(k - 1), ah - nb_h_at(k), ah - nb_h_at(k - 1));
            for (auto [i, j] : x_pairs)
                result.pairs.emplace_back(g.xs[i - 1], h.xs[j - 1]);

            return result;
        }

        auto split_sides(const OrderedGraph & g) -> Window
        {
            Window w{ &g, { }, { } };
            for (int v = 0 ; v < g.size() ; ++v)
                (g.side(v) == Side::y ? w.ys : w.xs).push_back(v);
            return w;
        }

        // Best solution in which G's X-vertex xs[a] is matched to H's Y-vertex
        // ys[b], with every other pair staying on its side.
        auto crossing_guess(const Window & g, const Window & h, int a, int b, bool x_internal, bool y_internal) -> Candidate
        {
            int xa = g.xs[a], yb = h.ys[b];
            Window rg{ g.graph, { }, { } }, rh{ h.graph, { }, { } };
            for (int y : g.ys)
                if (g.graph->adjacent(xa, y) == y_internal)
                    rg.ys.push_back(y);
            rg.xs.assign(g.xs.begin() + a + 1, g.xs.end());
            rh.ys.assign(h.ys.begin(), h.ys.begin() + b);
            for (int x : h.xs)
                if (h.graph->adjacent(yb, x) == x_internal)
                    rh.xs.push_back(x);

            auto inner = same_side_dp(rg, rh);
            inner.value += 1;
            auto split = std::ranges::partition_point(inner.pairs, [&] (const pair<int, int> & p) { return p.first < xa; });
            inner.pairs.insert(split, { xa, yb });
            return inner;
        }

        auto independence(const Window & w) -> vector<int>
        {
            // Take x_1..x_i and the Y-vertices none of them sees.
            auto nb = w.neighbourhoods();
            int a = static_cast<int>(w.ys.size()), best_i = 0;
            for (int i = 0 ; i < static_cast<int>(w.xs.size()) + 1 ; ++i)
                if (i + a - nb[i] > best_i + a - nb[best_i])
                    best_i = i;
            vector<int> result(w.ys.begin(), w.ys.begin() + (a - nb[best_i]));
            result.insert(result.end(), w.xs.begin(), w.xs.begin() + best_i);
            return result;
        }

        auto clique(const Window & w) -> vector<int>
        {
            // Take x_i..x_b and their common neighbourhood N(x_i), or all of Y.
            auto nb = w.neighbourhoods();
            int a = static_cast<int>(w.ys.size()), b = static_cast<int>(w.xs.size());
            int best_i = -1, best = a;
            for (int i = 1 ; i <= b ; ++i)
                if (b - i + 1 + nb[i] > best) {
                    best = b - i + 1 + nb[i];
                    best_i = i;
                }
            if (best_i == -1)
                return w.ys;
            vector<int> result(w.ys.end() - nb[best_i], w.ys.end());
            result.insert(result.end(), w.xs.begin() + (best_i - 1), w.xs.end());
            return result;
        }

        auto zip(const vector<int> & a, const vector<int> & b) -> Candidate
        {
            Candidate c;
            std::size_t k = std::min(a.size(), b.size());
            for (std::size_t t = 0 ; t < k ; ++t)
                c.pairs.emplace_back(a[t], b[t]);
            c.value = static_cast<long>(k);
            return c;
        }
    }

    auto mcois_inclusion(const OrderedGraph & g, const OrderedGraph & h) -> CommonSolution
    {
        if (g.directed() || h.directed() || ! g.has_sides() || ! h.has_sides())
            throw PreconditionFailed("inclusion DP needs undirected graphs with sides", VerifyReport::fail({ }, "no side map"));
        if (auto r = verify_ordering(OrderingKind::inclusion, g) ; ! r)
            throw PreconditionFailed("ordering of G is not an inclusion ordering", r);
        if (auto r = verify_ordering(OrderingKind::inclusion, h) ; ! r)
            throw PreconditionFailed("ordering of H is not an inclusion ordering", r);

        auto g_classes = inclusion_classes(g), h_classes = inclusion_classes(h);
        auto shared = std::ranges::find_if(g_classes, [&] (InclusionClass c) { return std::ranges::count(h_classes, c) > 0; });
        if (shared == g_classes.end())
            throw PreconditionFailed("G and H are not of a common threshold, chain or cochain class",
                    VerifyReport::fail({ }, "class mismatch"));

        const InclusionClass cls = *shared;
        const bool x_internal = cls != InclusionClass::chain;
        const bool y_internal = cls == InclusionClass::cochain;

        auto wg = split_sides(g), wh = split_sides(h);
        Candidate best = same_side_dp(wg, wh);
        auto offer = [&] (Candidate c) {
            if (c.value > best.value)
                best = std::move(c);
        };

        for (int a = 0 ; a < static_cast<int>(wg.xs.size()) ; ++a)
            for (int b = 0 ; b < static_cast<int>(wh.ys.size()) ; ++b)
                offer(crossing_guess(wg, wh, a, b, x_internal, y_internal));

        for (int a = 0 ; a < static_cast<int>(wh.xs.size()) ; ++a)
            for (int b = 0 ; b < static_cast<int>(wg.ys.size()) ; ++b) {
                auto c = crossing_guess(wh, wg, a, b, x_internal, y_internal);
                for (auto & p : c.pairs)
                    std::swap(p.first, p.second);
                offer(std::move(c));
            }

        if (cls == InclusionClass::chain)
            offer(zip(independence(wg), independence(wh)));
        if (cls == InclusionClass::cochain)
            offer(zip(clique(wg), clique(wh)));

        return CommonSolution{ McoVariant::mcois, std::move(best.pairs), best.value };
    }
}
