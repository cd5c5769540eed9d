/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/vertex_cover_dp.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        constexpr long impossible = std::numeric_limits<long>::min() / 4;

        auto is_cover(const OrderedGraph & g, const vector<char> & in) -> bool
        {
            for (auto [u, v] : g.edges())
                if (! in[u] && ! in[v])
                    return false;
            return true;
        }

        auto branch(const OrderedGraph & g, vector<char> & in, int budget) -> bool
        {
            for (auto [u, v] : g.edges())
                if (! in[u] && ! in[v]) {
                    if (budget == 0)
                        return false;
                    for (int w : { u, v }) {
                        in[w] = 1;
                        if (branch(g, in, budget - 1))
                            return true;
                        in[w] = 0;
                        if (u == v)
                            break;
                    }
                    return false;
                }
            return true;
        }

        auto cover_from_hint(const OrderedGraph & g, const vector<int> & hint) -> vector<int>
        {
            vector<char> in(g.size(), 0);
            for (int v : hint) {
                if (v < 0 || v >= g.size())
                    throw std::invalid_argument("cover hint vertex out of range");
                in[v] = 1;
            }
            if (! is_cover(g, in))
                throw std::invalid_argument("cover hint does not cover every edge");
            for (int v = 0 ; v < g.size() ; ++v)
                if (in[v]) {
                    in[v] = 0;
                    if (! is_cover(g, in))
                        in[v] = 1;
                }
            vector<int> result;
            for (int v = 0 ; v < g.size() ; ++v)
                if (in[v])
                    result.push_back(v);
            return result;
        }
    }

    auto minimum_vertex_cover(const OrderedGraph & g) -> vector<int>
    {
        vector<char> in(g.size(), 0);
        for (int budget = 0 ; ; ++budget)
            if (branch(g, in, budget))
                break;

        vector<int> result;
        for (int v = 0 ; v < g.size() ; ++v)
            if (in[v])
                result.push_back(v);
        return result;
    }

    auto twin_classes(const OrderedGraph & h) -> TwinPartition
    {
        if (h.directed())
            throw std::invalid_argument("twin classes are defined for undirected graphs");

        auto twins = [&] (int u, int v) {
            auto ru = h.row(u), rv = h.row(v);
            for (std::size_t k = 0 ; k < ru.size() ; ++k) {
                Word a = ru[k], b = rv[k];
                if (static_cast<int>(k) == v / bits_per_word)
                    a &= ~(Word{ 1 } << (v % bits_per_word));
                if (static_cast<int>(k) == u / bits_per_word)
                    b &= ~(Word{ 1 } << (u % bits_per_word));
                if (a != b)
                    return false;
            }
            return true;
        };

        TwinPartition result;
        result.class_of.assign(h.size(), -1);
        for (int v = 0 ; v < h.size() ; ++v) {
            for (std::size_t c = 0 ; c < result.classes.size() ; ++c)
                if (twins(result.classes[c].front(), v)) {
                    result.class_of[v] = static_cast<int>(c);
                    result.classes[c].push_back(v);
                    break;
                }
            if (result.class_of[v] == -1) {
                result.class_of[v] = static_cast<int>(result.classes.size());
                result.classes.push_back({ v });
            }
        }
        return result;
    }

    namespace
    {
        struct Solver
        {
            McoVariant variant;
            const OrderedGraph & g;
            const OrderedGraph & h;
            TwinPartition twins;
            int q;
            // class_adjacent[a][b]: members of class a and class b are adjacent
            // (for a == b, the class is a clique).
            vector<vector<char>> class_adjacent;
            // next_of[c][x]: least rank >= x in class c, or n_H.
            vector<vector<int>> next_of;

            // Per run.
            vector<int> g_vertices;
            vector<char> in_s;
            vector<int> phi;       // indexed by G-vertex, -1 outside S
            vector<char> allowed;  // H-vertices usable by G-vertices outside S
            vector<vector<long>> dp;
            vector<vector<int>> choice;  // -1 skip, else matched H rank

            Solver(McoVariant v, const OrderedGraph & gg, const OrderedGraph & hh) :
                variant(v), g(gg), h(hh), twins(twin_classes(hh)), q(static_cast<int>(twins.classes.size()))
            {
                class_adjacent.assign(q, vector<char>(q, 0));
                for (int a = 0 ; a < q ; ++a)
                    for (int b = 0 ; b < q ; ++b) {
                        const auto & ca = twins.classes[a], & cb = twins.classes[b];
                        if (a != b)
                            class_adjacent[a][b] = h.adjacent(ca.front(), cb.front());
                        else
                            class_adjacent[a][b] = ca.size() > 1 && h.adjacent(ca[0], ca[1]);
                    }

                next_of.assign(q, vector<int>(h.size() + 1, h.size()));
                for (int c = 0 ; c < q ; ++c)
                    for (int x = h.size() - 1 ; x >= 0 ; --x)
                        next_of[c][x] = twins.class_of[x] == c ? x : next_of[c][x + 1];
            }

            auto mu(int u, int hv, const vector<int> & s_list) const -> long
            {
                int c = twins.class_of[hv];
                if (variant == McoVariant::mcois) {
                    if (! allowed[hv])
                        return impossible;
                    for (int s : s_list)
                        if (g.adjacent(u, s) != static_cast<bool>(class_adjacent[c][phi[s]]))
                            return impossible;
                    return 1;
                }
                long count = 0;
                for (int s : s_list)
                    if (g.adjacent(u, s) && class_adjacent[c][phi[s]])
                        ++count;
                return count;
            }

            auto base_value(const vector<int> & s_list) const -> long
            {
                if (variant == McoVariant::mcois)
                    return static_cast<long>(s_list.size());
                long count = 0;
                for (std::size_t a = 0 ; a < s_list.size() ; ++a)
                    for (std::size_t b = a + 1 ; b < s_list.size() ; ++b)
                        if (g.adjacent(s_list[a], s_list[b]) && class_adjacent[phi[s_list[a]]][phi[s_list[b]]])
                            ++count;
                return count;
            }

            // G[S] looks the same as any placement of S on its classes.
            auto induced_consistent(const vector<int> & s_list) const -> bool
            {
                for (std::size_t a = 0 ; a < s_list.size() ; ++a)
                    for (std::size_t b = a + 1 ; b < s_list.size() ; ++b)
                        if (g.adjacent(s_list[a], s_list[b]) != static_cast<bool>(class_adjacent[phi[s_list[a]]][phi[s_list[b]]]))
                            return false;
                return true;
            }

            // S-vertices up to prefix i placed greedily inside the first j ranks and
            // the rest after them, each on its class.
            auto feasibility(const vector<int> & s_list) const -> vector<vector<char>>
            {
                const int n = static_cast<int>(g_vertices.size()), nh = h.size();
                const int p = static_cast<int>(s_list.size());
                vector<int> earliest(p + 1, -1);
                for (int t = 1 ; t <= p ; ++t) {
                    int from = earliest[t - 1] + 1;
                    earliest[t] = from > nh ? nh : next_of[phi[s_list[t - 1]]][std::min(from, nh)];
                }

                vector<vector<char>> ok(n + 1, vector<char>(nh + 1, 0));
                int placed = 0;
                for (int i = 0 ; i <= n ; ++i) {
                    if (i > 0 && in_s[g_vertices[i - 1]])
                        ++placed;
                    for (int j = 0 ; j <= nh ; ++j) {
                        if (placed > 0 && (earliest[placed] >= nh || earliest[placed] > j - 1))
                            continue;
                        int at = j - 1;
                        bool fits = true;
                        for (int t = placed + 1 ; t <= p && fits ; ++t) {
                            at = at + 1 >= nh ? nh : next_of[phi[s_list[t - 1]]][at + 1];
                            fits = at < nh;
                        }
                        ok[i][j] = fits;
                    }
                }
                return ok;
            }

            auto run_dp(const vector<int> & s_list) -> long
            {
                const int n = static_cast<int>(g_vertices.size()), nh = h.size();
                auto ok = feasibility(s_list);
                if (! ok[n][nh])
                    return impossible;

                dp.assign(n + 1, vector<long>(nh + 1, impossible));
                choice.assign(n + 1, vector<int>(nh + 1, -1));
                const long base = base_value(s_list);

                for (int i = 0 ; i <= n ; ++i) {
                    long running = impossible;
                    int running_h = -1;
                    for (int j = 0 ; j <= nh ; ++j) {
                        if (i == 0 || j == 0) {
                            if (ok[i][j])
                                dp[i][j] = base;
                            continue;
                        }

                        int u = g_vertices[i - 1];
                        // Candidate: u matched to rank j - 1 on top of dp[i - 1][j - 1].
                        long candidate = impossible;
                        if (dp[i - 1][j - 1] != impossible) {
                            if (in_s[u]) {
                                if (twins.class_of[j - 1] == phi[u])
                                    candidate = dp[i - 1][j - 1];
                            }
                            else if (long m = mu(u, j - 1, s_list) ; m != impossible)
                                candidate = dp[i - 1][j - 1] + m;
                        }
                        if (candidate > running) {
                            running = candidate;
                            running_h = j - 1;
                        }

                        if (! ok[i][j])
                            continue;

                        long best = running;
                        int how = running == impossible ? -1 : running_h;
                        if (! in_s[u] && dp[i - 1][j] > best) {
                            best = dp[i - 1][j];
                            how = -1;
                        }
                        dp[i][j] = best;
                        choice[i][j] = how;
                    }
                }
                return dp[n][nh];
            }

            auto reconstruct() const -> vector<std::pair<int, int>>
            {
                vector<std::pair<int, int>> pairs;
                int i = static_cast<int>(g_vertices.size()), j = h.size();
                while (i > 0 && j > 0) {
                    int c = choice[i][j];
                    if (c == -1)
                        --i;
                    else {
                        pairs.emplace_back(g_vertices[i - 1], c);
                        --i;
                        j = c;
                    }
                }
                std::ranges::reverse(pairs);
                return pairs;
            }
        };
    }

    auto mco_vertex_cover(McoVariant variant, const OrderedGraph & g, const OrderedGraph & h,
            const VertexCoverOptions & options, VertexCoverStats * stats) -> CommonSolution
    {
        if (g.directed() || h.directed())
            throw std::invalid_argument("vertex cover DP needs undirected graphs");

        auto cover_g = options.cover_hint ? cover_from_hint(g, *options.cover_hint) : minimum_vertex_cover(g);
        auto cover_h = minimum_vertex_cover(h);
        const int p = static_cast<int>(std::max(cover_g.size(), cover_h.size()));
        if (p > vertex_cover_guard && ! options.unguarded)
            throw GuardExceeded("vertex cover DP refuses p = " + std::to_string(p) + " > " + std::to_string(vertex_cover_guard));

        Solver solver{ variant, g, h };
        const int q = solver.q;
        const int pg = static_cast<int>(cover_g.size()), ph = static_cast<int>(cover_h.size());
        if (static_cast<double>(q) > std::ldexp(1.0, ph) + ph)
            throw std::logic_error("twin class count exceeds 2^p + p");

        if (stats) {
            *stats = VertexCoverStats{ };
            stats->cover_size_g = pg;
            stats->cover_size_h = ph;
            stats->twin_class_count = q;
        }

        // Independent subsets R of H's cover; outside S, images must lie in R or
        // among the uncovered vertices with no neighbour in R.
        vector<vector<char>> allowed_sets;
        if (variant == McoVariant::mcos)
            allowed_sets.emplace_back(h.size(), 1);
        else {
            vector<char> covered(h.size(), 0);
            for (int v : cover_h)
                covered[v] = 1;
            for (unsigned r = 0 ; r < (1u << ph) ; ++r) {
                vector<int> chosen;
                for (int b = 0 ; b < ph ; ++b)
                    if (r & (1u << b))
                        chosen.push_back(cover_h[b]);
                bool independent = true;
                for (std::size_t a = 0 ; a < chosen.size() && independent ; ++a)
                    for (std::size_t b = a + 1 ; b < chosen.size() && independent ; ++b)
                        independent = ! h.adjacent(chosen[a], chosen[b]);
                if (! independent)
                    continue;
                vector<char> allowed(h.size(), 0);
                for (int v : chosen)
                    allowed[v] = 1;
                for (int v = 0 ; v < h.size() ; ++v)
                    if (! covered[v] && std::ranges::none_of(chosen, [&] (int c) { return h.adjacent(v, c); }))
                        allowed[v] = 1;
                allowed_sets.push_back(std::move(allowed));
            }
        }

        CommonSolution best{ variant, { }, impossible };
        for (unsigned subset = 0 ; subset < (1u << pg) ; ++subset) {
            vector<int> s_list;
            solver.in_s.assign(g.size(), 0);
            vector<char> dropped(g.size(), 0);
            for (int b = 0 ; b < pg ; ++b) {
                if (subset & (1u << b)) {
                    s_list.push_back(cover_g[b]);
                    solver.in_s[cover_g[b]] = 1;
                }
                else
                    dropped[cover_g[b]] = 1;
            }
            solver.g_vertices.clear();
            for (int v = 0 ; v < g.size() ; ++v)
                if (! dropped[v])
                    solver.g_vertices.push_back(v);

            const int k = static_cast<int>(s_list.size());
            vector<int> digits(k, 0);
            long enumerated = 0;
            solver.phi.assign(g.size(), -1);
            while (k == 0 || q > 0) {
                ++enumerated;
                for (int t = 0 ; t < k ; ++t)
                    solver.phi[s_list[t]] = digits[t];

                if (variant == McoVariant::mcos || solver.induced_consistent(s_list))
                    for (const auto & allowed : allowed_sets) {
                        solver.allowed = allowed;
                        if (stats)
                            ++stats->dp_runs;
                        long value = solver.run_dp(s_list);
                        if (value > best.value) {
                            best.value = value;
                            best.pairs = solver.reconstruct();
                        }
                    }

                int t = 0;
                while (t < k && ++digits[t] == q)
                    digits[t++] = 0;
                if (t == k)
                    break;
            }

            if (stats)
                stats->assignments_per_subset.emplace_back(k, enumerated);
        }

        if (best.value == impossible)
            throw std::logic_error("vertex cover DP found no feasible assignment");
        return best;
    }
}
