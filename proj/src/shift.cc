/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/orderings.hh>
#include <ordsub/shift.hh>

#include <algorithm>
#include <stdexcept>
#include <utility>

using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        struct Shifter
        {
            const OrderedGraph & g;
            const OrderedGraph & h;
            const ShiftOptions & options;
            vector<int> f;
            // Violated pairs p <= q as bit rows indexed by p, plus the rows
            // that are non-empty, so the smallest pair is two bit scans away.
            vector<vector<Word>> violated;
            vector<int> row_count;
            vector<Word> nonempty_rows;

            auto predecessors(const OrderedGraph & x, int v) const -> const vector<int> &
            {
                return x.directed() ? x.in_neighbours(v) : x.neighbours(v);
            }

            // H-arc p -> q is not mapped onto a G-arc.
            auto forward_broken(int p, int q) const -> bool
            {
                return h.adjacent(p, q) && ! g.adjacent(f[p], f[q]);
            }

            auto backward_broken(int p, int q) const -> bool
            {
                return h.adjacent(q, p) && ! g.adjacent(f[q], f[p]);
            }

            auto refresh(int a, int b) -> void
            {
                auto [p, q] = std::minmax(a, b);
                bool broken = forward_broken(p, q) || backward_broken(p, q);
                auto & row = violated[p];
                if (broken == test_bit(row, q))
                    return;
                if (broken) {
                    set_bit(row, q);
                    if (row_count[p]++ == 0)
                        set_bit(nonempty_rows, p);
                }
                else {
                    reset_bit(row, q);
                    if (--row_count[p] == 0)
                        reset_bit(nonempty_rows, p);
                }
            }

            // Re-examines every pair involving H-vertex w after its image moved.
            auto refresh_around(int w) -> void
            {
                for (int z : h.neighbours(w))
                    refresh(w, z);
                if (h.directed())
                    for (int z : h.in_neighbours(w))
                        refresh(w, z);
            }

            // Some k strictly between lo and hi is in the sorted list.
            static auto any_between(const vector<int> & list, int lo, int hi) -> bool
            {
                auto it = std::upper_bound(list.begin(), list.end(), lo);
                return it != list.end() && *it < hi;
            }

            auto run() -> ShiftResult
            {
                ShiftResult result;
                const int n_g = g.size(), n_h = h.size();
                if (n_h > n_g)
                    return result;

                f.resize(n_h);
                for (int i = 0 ; i < n_h ; ++i)
                    f[i] = i;
                violated.assign(n_h, vector<Word>(words_for(n_h), 0));
                row_count.assign(n_h, 0);
                nonempty_rows.assign(words_for(n_h), 0);
                for (auto [a, b] : h.edges())
                    refresh(a, b);

                auto & trace = result.trace;
                for (int p ; (p = first_set(nonempty_rows, 0, n_h)) != -1 ; ) {
                    int q = first_set(violated[p], p, n_h);
                    const int p_image = f[p], q_image = f[q];
                    ++trace.iterations;

                    bool case_one = false;
                    if (forward_broken(p, q) && ! any_between(predecessors(g, q_image), p_image, q_image))
                        case_one = true;
                    if (backward_broken(p, q) && ! any_between(g.neighbours(q_image), p_image, q_image))
                        case_one = true;

                    // Case 1 advances q and whatever it bumps into; case 2 does the same from p.
                    int moving = case_one ? q : p;
                    int cascade = 0;
                    bool stuck = false;
                    while (true) {
                        int target = f[moving] + 1;
                        if (target >= n_g) {
                            stuck = true;
                            break;
                        }
                        f[moving] = target;
                        ++cascade;
                        refresh_around(moving);
                        if (moving + 1 < n_h && f[moving + 1] == target)
                            ++moving;
                        else
                            break;
                    }

                    if (options.record_steps)
                        trace.steps.push_back({ case_one ? 1 : 2, p, q, p_image, q_image, cascade });
                    if (options.record_snapshots)
                        trace.snapshots.push_back(f);
                    if (stuck)
                        return result;
                }

                result.map = OrderPreservingMap{ f };
                trace.final_map = result.map;
                return result;
            }
        };
    }

    auto osi_shift_2dor(const OrderedGraph & g, const OrderedGraph & h, const ShiftOptions & options) -> ShiftResult
    {
        if (g.kind() != GraphKind::bipartite || h.kind() != GraphKind::bipartite)
            throw std::invalid_argument("the 2DOR shift algorithm needs two bipartite graphs");
        if (auto r = verify_ordering(OrderingKind::comparability_weak, g) ; ! r)
            throw PreconditionFailed("ordering of G is not comparability weak", r);

        return Shifter{ g, h, options, { }, { }, { }, { } }.run();
    }

    auto osi_shift_signed_interval(const OrderedGraph & g, const OrderedGraph & h, const ShiftOptions & options) -> ShiftResult
    {
        if (! g.directed() || ! h.directed())
            throw std::invalid_argument("the signed-interval shift algorithm needs two digraphs");
        if (auto r = verify_ordering(OrderingKind::min, g) ; ! r)
            throw PreconditionFailed("ordering of G is not a min ordering", r);

        return Shifter{ g, h, options, { }, { }, { }, { } }.run();
    }
}
