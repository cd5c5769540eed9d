/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/oracle.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::optional;
using std::pair;
using std::vector;

namespace ordsub
{
    using std::to_string;

    auto validate_ops(const OpsInstance & inst) -> void
    {
        auto check = [] (const vector<int> & p, const char * name) {
            vector<char> seen(p.size() + 1, 0);
            for (int v : p) {
                if (v < 1 || v > static_cast<int>(p.size()) || seen[v])
                    throw invalid_argument(std::string(name) + " is not a permutation of 1.." + std::to_string(p.size()));
                seen[v] = 1;
            }
        };
        check(inst.pi, "pi");
        check(inst.rho, "rho");
        if (inst.rho.size() > inst.pi.size())
            throw invalid_argument("rho is longer than pi");
    }

    namespace
    {
        struct IsoSearch
        {
            const OrderedGraph & g;
            const OrderedGraph & h;
            bool induced;
            vector<int> upper;
            int words;
            // domains[depth][j] holds the candidate images of H-vertex j once
            // H-vertices 0..depth-1 are placed.
            vector<vector<vector<Word>>> domains;
            vector<int> images;

            IsoSearch(const OrderedGraph & gg, const OrderedGraph & hh, bool ind, const optional<vector<int>> & max_image) :
                g(gg), h(hh), induced(ind),
                upper(hh.size(), gg.size() - 1),
                words(words_for(gg.size())),
                domains(hh.size() + 1, vector<vector<Word>>(hh.size(), vector<Word>(words_for(gg.size()), 0))),
                images(hh.size(), -1)
            {
                if (max_image) {
                    if (static_cast<int>(max_image->size()) != h.size())
                        throw invalid_argument("max_image has the wrong length");
                    for (int j = 0 ; j < h.size() ; ++j)
                        upper[j] = std::min(upper[j], (*max_image)[j]);
                }

                for (int j = 0 ; j < h.size() ; ++j)
                    for (int v = 0 ; v < g.size() ; ++v)
                        if (v <= upper[j] && (! h.adjacent(j, j) || g.adjacent(v, v)) && (! induced || h.adjacent(j, j) || ! g.adjacent(v, v)))
                            set_bit(domains[0][j], v);
            }

            // Restricts later domains to images consistent with placing j at c.
            auto narrow(int depth, int j, int c) -> void
            {
                auto out_c = g.row(c);
                auto in_c = g.directed() ? g.in_row(c) : g.row(c);
                for (int l = j + 1 ; l < h.size() ; ++l) {
                    auto & d = domains[depth + 1][l];
                    d = domains[depth][l];
                    bool fwd = h.adjacent(j, l), bwd = h.directed() ? h.adjacent(l, j) : fwd;
                    for (int k = 0 ; k < words ; ++k) {
                        if (fwd)
                            d[k] &= out_c[k];
                        else if (induced)
                            d[k] &= ~out_c[k];
                        if (h.directed()) {
                            if (bwd)
                                d[k] &= in_c[k];
                            else if (induced)
                                d[k] &= ~in_c[k];
                        }
                    }
                }
            }

            // Candidates w of H-vertex l2 compatible with l1 placed at v.
            auto compatible(int l1, int v, int l2, int k) const -> Word
            {
                Word m = ~Word{ 0 };
                bool fwd = h.adjacent(l1, l2), bwd = h.adjacent(l2, l1);
                auto out_v = g.row(v);
                if (fwd)
                    m &= out_v[k];
                else if (induced)
                    m &= ~out_v[k];
                if (h.directed()) {
                    auto in_v = g.in_row(v);
                    if (bwd)
                        m &= in_v[k];
                    else if (induced)
                        m &= ~in_v[k];
                }
                return m;
            }

            // Pairwise arc consistency over the unplaced vertices: drops every
            // candidate with no compatible, correctly ordered partner. False if
            // a domain empties.
            auto propagate(int depth) -> bool
            {
                auto & doms = domains[depth];
                for (bool changed = true ; changed ; ) {
                    changed = false;
                    for (int a = depth ; a < h.size() ; ++a)
                        for (int b = depth ; b < h.size() ; ++b) {
                            if (a == b)
                                continue;
                            auto & da = doms[a];
                            const auto & db = doms[b];
                            for (int v = first_set(da, 0, g.size()) ; v != -1 ; v = first_set(da, v + 1, g.size())) {
                                // b after a needs a partner above v, otherwise below.
                                int from = a < b ? v + 1 : 0, to = a < b ? g.size() : v;
                                bool supported = false;
                                for (int k = from / bits_per_word ; k < words && k * bits_per_word < to && ! supported ; ++k) {
                                    Word w = db[k] & compatible(a, v, b, k);
                                    int lo = k * bits_per_word;
                                    if (from > lo)
                                        w &= ~Word{ 0 } << (from - lo);
                                    if (to < lo + bits_per_word)
                                        w &= (Word{ 1 } << (to - lo)) - 1;
                                    supported = w != 0;
                                }
                                if (! supported) {
                                    reset_bit(da, v);
                                    changed = true;
                                }
                            }
                            if (first_set(da, 0, g.size()) == -1)
                                return false;
                        }
                }
                return true;
            }

            // Earliest increasing completion exists for the unplaced vertices.
            auto completable(int depth, int from) const -> bool
            {
                int at = from;
                for (int l = depth ; l < h.size() ; ++l) {
                    at = first_set(domains[depth][l], at + 1, upper[l] + 1);
                    if (at == -1)
                        return false;
                }
                return true;
            }

            auto search(int depth, int previous) -> bool
            {
                if (depth == h.size())
                    return true;

                const auto & d = domains[depth][depth];
                for (int c = first_set(d, previous + 1, upper[depth] + 1) ; c != -1 ; c = first_set(d, c + 1, upper[depth] + 1)) {
                    images[depth] = c;
                    narrow(depth, depth, c);
                    if (completable(depth + 1, c) && propagate(depth + 1) && search(depth + 1, c))
                        return true;
                }
                images[depth] = -1;
                return false;
            }
        };
    }

    auto brute_ordered_iso(IsoVariant variant, const OrderedGraph & g, const OrderedGraph & h, const OracleOptions & options)
        -> optional<OrderPreservingMap>
    {
        if (g.directed() != h.directed())
            throw invalid_argument("graph kinds differ");
        if (! options.unguarded && g.size() > decision_guard)
            throw GuardExceeded("brute force decision refuses n_G = " + std::to_string(g.size())
                    + " > " + std::to_string(decision_guard));
        if (h.size() > g.size())
            return std::nullopt;

        IsoSearch s{ g, h, variant == IsoVariant::oisi, options.max_image };
        if (! s.completable(0, -1) || ! s.propagate(0) || ! s.search(0, -1))
            return std::nullopt;
        return OrderPreservingMap{ s.images };
    }

    namespace
    {
        struct McoSearch
        {
            const OrderedGraph & g;
            const OrderedGraph & h;
            McoVariant variant;
            vector<pair<int, int>> current;
            long current_value = 0;
            CommonSolution best;

            auto contribution(int x, int y) const -> long
            {
                long gained = 0;
                if (g.directed() && g.adjacent(x, x) && h.adjacent(y, y))
                    ++gained;
                for (auto [a, b] : current) {
                    if (g.adjacent(a, x) && h.adjacent(b, y))
                        ++gained;
                    if (g.directed() && g.adjacent(x, a) && h.adjacent(y, b))
                        ++gained;
                }
                return gained;
            }

            auto induced_compatible(int x, int y) const -> bool
            {
                if (g.directed() && g.adjacent(x, x) != h.adjacent(y, y))
                    return false;
                for (auto [a, b] : current)
                    if (g.adjacent(a, x) != h.adjacent(b, y) || g.adjacent(x, a) != h.adjacent(y, b))
                        return false;
                return true;
            }

            auto search(int from_g, int from_h) -> void
            {
                if (current_value > best.value) {
                    best.pairs = current;
                    best.value = current_value;
                }

                if (variant == McoVariant::mcois
                        && current_value + std::min(g.size() - from_g, h.size() - from_h) <= best.value)
                    return;

                for (int x = from_g ; x < g.size() ; ++x)
                    for (int y = from_h ; y < h.size() ; ++y) {
                        long gained;
                        if (variant == McoVariant::mcois) {
                            if (! induced_compatible(x, y))
                                continue;
                            gained = 1;
                        }
                        else
                            gained = contribution(x, y);

                        current.emplace_back(x, y);
                        current_value += gained;
                        search(x + 1, y + 1);
                        current_value -= gained;
                        current.pop_back();
                    }
            }
        };
    }

    auto brute_mco(McoVariant variant, const OrderedGraph & g, const OrderedGraph & h, const OracleOptions & options) -> CommonSolution
    {
        if (g.directed() != h.directed())
            throw invalid_argument("graph kinds differ");
        if (! options.unguarded && std::max(g.size(), h.size()) > optimisation_guard)
            throw GuardExceeded("brute force optimisation refuses max(n_G, n_H) = "
                    + std::to_string(std::max(g.size(), h.size())) + " > " + std::to_string(optimisation_guard));

        McoSearch s{ g, h, variant, { }, 0, CommonSolution{ variant, { }, 0 } };
        s.search(0, 0);
        return s.best;
    }

    auto brute_ops(const OpsInstance & inst) -> optional<vector<int>>
    {
        validate_ops(inst);
        const int n = static_cast<int>(inst.pi.size()), k = static_cast<int>(inst.rho.size());
        vector<int> chosen;

        auto consistent = [&] (int i) {
            int j = static_cast<int>(chosen.size());
            for (int a = 0 ; a < j ; ++a)
                if ((inst.pi[chosen[a]] < inst.pi[i]) != (inst.rho[a] < inst.rho[j]))
                    return false;
            return true;
        };

        auto search = [&] (auto & self, int from) -> bool {
            if (static_cast<int>(chosen.size()) == k)
                return true;
            for (int i = from ; i <= n - (k - static_cast<int>(chosen.size())) ; ++i)
                if (consistent(i)) {
                    chosen.push_back(i);
                    if (self(self, i + 1))
                        return true;
                    chosen.pop_back();
                }
            return false;
        };

        if (! search(search, 0))
            return std::nullopt;

        for (auto & i : chosen)
            ++i;
        return chosen;
    }

    auto brute_balanced_biclique(const OrderedGraph & g, int k) -> optional<pair<vector<int>, vector<int>>>
    {
        if (g.kind() != GraphKind::bipartite)
            throw invalid_argument("balanced biclique needs a bipartite graph");
        if (k < 0)
            throw invalid_argument("negative biclique size");

        vector<int> xs, ys;
        for (int v = 0 ; v < g.size() ; ++v)
            (g.side(v) == Side::x ? xs : ys).push_back(v);

        vector<int> chosen;
        optional<pair<vector<int>, vector<int>>> result;

        auto common = [&] {
            vector<int> b;
            for (int y : ys)
                if (std::ranges::all_of(chosen, [&] (int x) { return g.adjacent(x, y); }))
                    b.push_back(y);
            return b;
        };

        auto search = [&] (auto & self, std::size_t from) -> bool {
            auto b = common();
            if (static_cast<int>(b.size()) < k)
                return false;
            if (static_cast<int>(chosen.size()) == k) {
                b.resize(k);
                result.emplace(chosen, b);
                return true;
            }
            for (auto i = from ; i < xs.size() ; ++i) {
                chosen.push_back(xs[i]);
                if (self(self, i + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };

        search(search, 0);
        return result;
    }
}
