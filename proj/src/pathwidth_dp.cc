/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/pathwidth_dp.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

using std::uint64_t;
using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        // Four 16-bit masks over bag positions: G forgotten-partner, G current,
        // H forgotten-partner, H current.
        struct State
        {
            uint64_t key;

            [[nodiscard]] auto part(int k) const -> unsigned
            {
                return static_cast<unsigned>((key >> (16 * k)) & 0xffff);
            }

            [[nodiscard]] static auto make(unsigned gf, unsigned gc, unsigned hf, unsigned hc) -> State
            {
                return State{ uint64_t{ gf } | (uint64_t{ gc } << 16) | (uint64_t{ hf } << 32) | (uint64_t{ hc } << 48) };
            }
        };

        enum class From : std::uint8_t
        {
            base,
            left,      // (i - 1, j)
            down,      // (i, j - 1)
            diagonal,  // (i - 1, j - 1), no new pair
            matched    // (i - 1, j - 1), x^i matched to y^j
        };

        struct Entry
        {
            long value;
            uint64_t previous;
            From from;
        };

        using Cell = std::unordered_map<uint64_t, Entry>;

        auto drop_bit(unsigned mask, int p) -> unsigned
        {
            unsigned low = mask & ((1u << p) - 1);
            return low | ((mask >> (p + 1)) << p);
        }

        // Position of the t-th set bit.
        auto nth_set(unsigned mask, int t) -> int
        {
            for ( ; t > 0 ; --t)
                mask &= mask - 1;
            return std::countr_zero(mask);
        }

        auto offer(Cell & cell, uint64_t key, long value, uint64_t previous, From from) -> void
        {
            auto [it, inserted] = cell.try_emplace(key, Entry{ value, previous, from });
            if (! inserted && value > it->second.value)
                it->second = Entry{ value, previous, from };
        }

        auto position_in(const vector<int> & bag, int v) -> int
        {
            for (std::size_t p = 0 ; p < bag.size() ; ++p)
                if (bag[p] == v)
                    return static_cast<int>(p);
            throw InvalidDecomposition("forgotten vertex missing from bag");
        }

        struct Dp
        {
            McoVariant variant;
            const OrderedGraph & g;
            const NicePathDecomposition & pg;
            const OrderedGraph & h;
            const NicePathDecomposition & ph;
            vector<vector<Cell>> cells;

            // Forgetting bag position p on the "mine" side; the aligned partner of
            // a current match moves to forgotten-partner (MCOIS) or drops out (MCOS).
            auto forget(const Cell & from, Cell & to, int p, bool g_side, From direction) -> void
            {
                for (auto & [key, e] : from) {
                    State s{ key };
                    unsigned mf = s.part(g_side ? 0 : 2), mc = s.part(g_side ? 1 : 3);
                    unsigned of = s.part(g_side ? 2 : 0), oc = s.part(g_side ? 3 : 1);
                    if (mc & (1u << p)) {
                        int t = std::popcount(mc & ((1u << p) - 1));
                        int q = nth_set(oc, t);
                        oc &= ~(1u << q);
                        if (variant == McoVariant::mcois)
                            of |= 1u << q;
                    }
                    mf = drop_bit(mf, p);
                    mc = drop_bit(mc, p);
                    auto next = g_side ? State::make(mf, mc, of, oc) : State::make(of, oc, mf, mc);
                    offer(to, next.key, e.value, key, direction);
                }
            }

            // Gain from matching x to y given state s over the previous bags, or
            // nullopt if MCOIS forbids it.
            auto gain(State s, const vector<int> & xbag, int x, const vector<int> & ybag, int y) const -> std::optional<long>
            {
                unsigned gf = s.part(0), gc = s.part(1), hf = s.part(2), hc = s.part(3);
                if (variant == McoVariant::mcois) {
                    if (g.adjacent(x, x) != h.adjacent(y, y))
                        return std::nullopt;
                    for (unsigned m = gf ; m ; m &= m - 1)
                        if (g.linked(x, xbag[std::countr_zero(m)]))
                            return std::nullopt;
                    for (unsigned m = hf ; m ; m &= m - 1)
                        if (h.linked(y, ybag[std::countr_zero(m)]))
                            return std::nullopt;
                    for (unsigned a = gc, b = hc ; a ; a &= a - 1, b &= b - 1) {
                        int u = xbag[std::countr_zero(a)], w = ybag[std::countr_zero(b)];
                        if (g.adjacent(u, x) != h.adjacent(w, y) || g.adjacent(x, u) != h.adjacent(y, w))
                            return std::nullopt;
                    }
                    return 1;
                }

                long z = (g.adjacent(x, x) && h.adjacent(y, y)) ? 1 : 0;
                for (unsigned a = gc, b = hc ; a ; a &= a - 1, b &= b - 1) {
                    int u = xbag[std::countr_zero(a)], w = ybag[std::countr_zero(b)];
                    if (g.adjacent(u, x) && h.adjacent(w, y))
                        ++z;
                    if (g.directed() && u != x && g.adjacent(x, u) && h.adjacent(y, w))
                        ++z;
                }
                return z;
            }

            auto run(PathwidthStats * stats) -> CommonSolution
            {
                const int sg = static_cast<int>(pg.steps.size()), sh = static_cast<int>(ph.steps.size());
                cells.assign(sg + 1, vector<Cell>(sh + 1));

                for (int i = 0 ; i <= sg ; ++i)
                    for (int j = 0 ; j <= sh ; ++j) {
                        auto & cell = cells[i][j];
                        if (i == 0 || j == 0) {
                            cell.emplace(0, Entry{ 0, 0, From::base });
                            continue;
                        }

                        auto [gk, x] = pg.steps[i - 1];
                        auto [hk, y] = ph.steps[j - 1];
                        if (gk == StepKind::forget)
                            forget(cells[i - 1][j], cell, position_in(pg.bags[i - 1], x), true, From::left);
                        else if (hk == StepKind::forget)
                            forget(cells[i][j - 1], cell, position_in(ph.bags[j - 1], y), false, From::down);
                        else {
                            for (auto & [key, e] : cells[i - 1][j])
                                offer(cell, key, e.value, key, From::left);
                            for (auto & [key, e] : cells[i][j - 1])
                                offer(cell, key, e.value, key, From::down);
                            for (auto & [key, e] : cells[i - 1][j - 1]) {
                                offer(cell, key, e.value, key, From::diagonal);
                                State s{ key };
                                if (auto z = gain(s, pg.bags[i - 1], x, ph.bags[j - 1], y)) {
                                    int px = static_cast<int>(pg.bags[i - 1].size());
                                    int py = static_cast<int>(ph.bags[j - 1].size());
                                    auto next = State::make(s.part(0), s.part(1) | (1u << px), s.part(2), s.part(3) | (1u << py));
                                    offer(cell, next.key, e.value + *z, key, From::matched);
                                }
                            }
                        }
                    }

                long total = 0;
                for (auto & row : cells)
                    for (auto & cell : row)
                        total += static_cast<long>(cell.size());
                double k = variant == McoVariant::mcois ? 3.0 : 2.0;
                double bound = double(sg + 1) * double(sh + 1) * std::pow(k, pg.width + 1) * std::pow(k, ph.width + 1);
                if (stats) {
                    stats->states = total;
                    stats->state_bound = bound;
                }
                if (double(total) > bound)
                    throw std::logic_error("pathwidth DP exceeded its state bound");

                CommonSolution result{ variant, { }, cells[sg][sh].at(0).value };
                uint64_t key = 0;
                for (int i = sg, j = sh ; i > 0 && j > 0 ; ) {
                    const auto & e = cells[i][j].at(key);
                    switch (e.from) {
                        case From::base: i = j = 0; continue;
                        case From::left: --i; break;
                        case From::down: --j; break;
                        case From::diagonal: --i; --j; break;
                        case From::matched:
                            result.pairs.emplace_back(pg.steps[i - 1].vertex, ph.steps[j - 1].vertex);
                            --i; --j;
                            break;
                    }
                    key = e.previous;
                }
                std::ranges::reverse(result.pairs);
                return result;
            }
        };
    }

    auto mco_pathwidth(McoVariant variant, const OrderedGraph & g, const NicePathDecomposition & pg,
            const OrderedGraph & h, const NicePathDecomposition & ph, PathwidthStats * stats) -> CommonSolution
    {
        if (g.directed() != h.directed())
            throw std::invalid_argument("graph kinds differ");
        validate_decomposition(g, pg);
        validate_decomposition(h, ph);
        if (pg.width > pathwidth_guard || ph.width > pathwidth_guard)
            throw GuardExceeded("pathwidth DP refuses width above " + std::to_string(pathwidth_guard));

        return Dp{ variant, g, pg, h, ph, { } }.run(stats);
    }
}
