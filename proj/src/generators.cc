/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/instances.hh>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        // The standard distributions are not portable across libraries, so the
        // conversions from raw engine output are done here.
        struct Random
        {
            std::mt19937_64 engine;

            auto uniform() -> double
            {
                return double(engine() >> 11) * 0x1.0p-53;
            }

            auto below(int m) -> int
            {
                return static_cast<int>(engine() % static_cast<unsigned long long>(m));
            }

            auto coin(double p) -> bool
            {
                return uniform() < p;
            }

            auto shuffle(vector<int> & v) -> void
            {
                for (int i = static_cast<int>(v.size()) - 1 ; i > 0 ; --i)
                    std::swap(v[i], v[below(i + 1)]);
            }

            auto permutation(int n) -> vector<int>
            {
                vector<int> v(n);
                std::iota(v.begin(), v.end(), 0);
                shuffle(v);
                return v;
            }
        };

        struct Interval
        {
            double left, right;
            int id;
        };

        // Left ends in [0, 1 - d), lengths in [0, d): d = 0 gives distinct points,
        // d = 1 gives intervals that all contain 0.
        auto random_intervals(Random & rng, int n, double density) -> vector<Interval>
        {
            vector<Interval> result;
            for (int v = 0 ; v < n ; ++v) {
                double left = (1.0 - density) * rng.uniform();
                result.push_back(Interval{ left, left + density * rng.uniform(), v });
            }
            std::ranges::sort(result, { }, [] (const Interval & i) { return std::tuple{ i.right, i.left, i.id }; });
            return result;
        }

        auto intersects(const Interval & a, const Interval & b) -> bool
        {
            return a.left <= b.right && b.left <= a.right;
        }

        auto interval_graph(Random & rng, int n, double density) -> OrderedGraph
        {
            auto iv = random_intervals(rng, n, density);
            vector<Edge> edges;
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if (intersects(iv[a], iv[b]))
                        edges.emplace_back(a, b);
            return make_undirected(n, edges);
        }

        auto interval_bigraph(Random & rng, int n, double density) -> OrderedGraph
        {
            auto iv = random_intervals(rng, n, density);
            vector<Side> sides(n);
            for (auto & s : sides)
                s = rng.coin(0.5) ? Side::x : Side::y;
            vector<Edge> edges;
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if (sides[a] != sides[b] && intersects(iv[a], iv[b]))
                        edges.emplace_back(a, b);
            return make_bipartite(std::move(sides), edges);
        }

        // X-vertices are rightward rays from (a, b), Y-vertices downward rays
        // from (c, d); they meet iff c >= a and d >= b. Sorting X by a and Y by
        // decreasing d gives a weak ordering.
        auto two_dor(Random & rng, int n, double density) -> OrderedGraph
        {
            struct Ray
            {
                bool is_x;
                double s, t;
                int id;
            };
            vector<Ray> xs, ys;
            for (int v = 0 ; v < n ; ++v) {
                if (rng.coin(0.5))
                    xs.push_back(Ray{ true, rng.uniform(), rng.uniform(), v });
                else {
                    double offset = 2.0 * density - 1.0;
                    ys.push_back(Ray{ false, rng.uniform() + offset, rng.uniform() + offset, v });
                }
            }
            std::ranges::sort(xs, { }, [] (const Ray & r) { return std::tuple{ r.s, r.id }; });
            std::ranges::sort(ys, { }, [] (const Ray & r) { return std::tuple{ -r.t, r.id }; });

            vector<Ray> order;
            bool x_first = rng.coin(0.5);
            for (auto * block : { x_first ? &xs : &ys, x_first ? &ys : &xs })
                order.insert(order.end(), block->begin(), block->end());

            vector<Side> sides;
            vector<Edge> edges;
            for (int a = 0 ; a < n ; ++a) {
                sides.push_back(order[a].is_x ? Side::x : Side::y);
                for (int b = a + 1 ; b < n ; ++b) {
                    if (order[a].is_x == order[b].is_x)
                        continue;
                    auto & x = order[a].is_x ? order[a] : order[b];
                    auto & y = order[a].is_x ? order[b] : order[a];
                    if (y.s >= x.s && y.t >= x.t)
                        edges.emplace_back(a, b);
                }
            }
            return make_bipartite(std::move(sides), edges);
        }

        // Random arcs, then closed under componentwise minimum. Arc (a, b) lies
        // in the closure iff a has an out-neighbour >= b and b an in-neighbour
        // >= a, and adding these changes neither maximum, so one pass suffices.
        auto signed_interval(Random & rng, int n, double density) -> OrderedGraph
        {
            vector<int> max_out(n, -1), max_in(n, -1);
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    if (rng.coin(density)) {
                        max_out[a] = std::max(max_out[a], b);
                        max_in[b] = std::max(max_in[b], a);
                    }
            vector<Edge> arcs;
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b <= max_out[a] ; ++b)
                    if (max_in[b] >= a)
                        arcs.emplace_back(a, b);
            return make_directed(n, arcs);
        }

        // Y block then X block; x_i sees a suffix of Y whose length grows with i.
        auto nested_neighbourhoods(Random & rng, InclusionClass cls, int n, double density) -> OrderedGraph
        {
            int ny = 0;
            for (int v = 0 ; v < n ; ++v)
                ny += rng.coin(0.5);
            int nx = n - ny;
            vector<int> counts(nx);
            for (auto & c : counts)
                for (int t = 0 ; t < ny ; ++t)
                    c += rng.coin(density);
            std::ranges::sort(counts);

            vector<Side> sides(n, Side::y);
            vector<Edge> edges;
            for (int i = 0 ; i < nx ; ++i) {
                sides[ny + i] = Side::x;
                for (int t = ny - counts[i] ; t < ny ; ++t)
                    edges.emplace_back(t, ny + i);
            }
            auto clique = [&] (int from, int to) {
                for (int a = from ; a < to ; ++a)
                    for (int b = a + 1 ; b < to ; ++b)
                        edges.emplace_back(a, b);
            };
            if (cls == InclusionClass::chain)
                return make_bipartite(std::move(sides), edges);
            clique(ny, n);
            if (cls == InclusionClass::cochain)
                clique(0, ny);
            return OrderedGraph(GraphKind::undirected, n, edges, std::move(sides));
        }

        auto arbitrary(Random & rng, int n, double density) -> OrderedGraph
        {
            vector<Edge> edges;
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if (rng.coin(density))
                        edges.emplace_back(a, b);
            return make_undirected(n, edges);
        }

        // Candidate edges in random order, kept only while the vertex separation
        // of the identity ordering stays within the width.
        auto bounded_pathwidth(Random & rng, int n, double density, int width) -> OrderedGraph
        {
            vector<int> pairs;
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    pairs.push_back(a * n + b);
            rng.shuffle(pairs);

            vector<int> last(n);
            std::iota(last.begin(), last.end(), 0);
            auto separation = [&] {
                vector<int> open(n + 1, 0);
                for (int u = 0 ; u < n ; ++u)
                    if (last[u] > u) {
                        ++open[u];
                        --open[last[u]];
                    }
                int best = 0;
                for (int p = 0, running = 0 ; p < n ; ++p) {
                    running += open[p];
                    best = std::max(best, running);
                }
                return best;
            };

            vector<Edge> edges;
            for (int p : pairs) {
                if (! rng.coin(density))
                    continue;
                int a = p / n, b = p % n, saved = last[a];
                last[a] = std::max(last[a], b);
                if (separation() <= width)
                    edges.emplace_back(a, b);
                else
                    last[a] = saved;
            }
            return make_undirected(n, edges);
        }

        auto bounded_vc(Random & rng, int n, double density, int cover) -> OrderedGraph
        {
            auto perm = rng.permutation(n);
            vector<bool> in_cover(n, false);
            for (int i = 0 ; i < std::min(cover, n) ; ++i)
                in_cover[perm[i]] = true;
            vector<Edge> edges;
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if ((in_cover[a] || in_cover[b]) && rng.coin(density))
                        edges.emplace_back(a, b);
            return make_undirected(n, edges);
        }

        constexpr std::array generator_names{
            std::pair{ GeneratorClass::interval, "interval" },
            std::pair{ GeneratorClass::interval_bigraph, "interval_bigraph" },
            std::pair{ GeneratorClass::two_dor, "2dor" },
            std::pair{ GeneratorClass::signed_interval, "signed_interval" },
            std::pair{ GeneratorClass::threshold, "threshold" },
            std::pair{ GeneratorClass::chain, "chain" },
            std::pair{ GeneratorClass::cochain, "cochain" },
            std::pair{ GeneratorClass::arbitrary, "arbitrary" },
            std::pair{ GeneratorClass::bounded_pathwidth, "bounded_pathwidth" },
            std::pair{ GeneratorClass::bounded_vc, "bounded_vc" } };
    }

    auto to_string(GeneratorClass c) -> std::string_view
    {
        for (auto & [cls, name] : generator_names)
            if (cls == c)
                return name;
        throw std::logic_error("unknown generator class");
    }

    auto parse_generator_class(std::string_view s) -> std::optional<GeneratorClass>
    {
        for (auto & [cls, name] : generator_names)
            if (s == name)
                return cls;
        return std::nullopt;
    }

    auto characteristic_kind(GeneratorClass c) -> std::optional<OrderingKind>
    {
        switch (c) {
            case GeneratorClass::interval: return OrderingKind::interval;
            case GeneratorClass::interval_bigraph: return OrderingKind::interval_bigraph;
            case GeneratorClass::two_dor: return OrderingKind::comparability_weak;
            case GeneratorClass::signed_interval: return OrderingKind::min;
            case GeneratorClass::threshold:
            case GeneratorClass::chain:
            case GeneratorClass::cochain: return OrderingKind::inclusion;
            case GeneratorClass::arbitrary:
            case GeneratorClass::bounded_pathwidth:
            case GeneratorClass::bounded_vc: return std::nullopt;
        }
        return std::nullopt;
    }

    auto random_instance(GeneratorSpec spec, int n, double density, std::uint64_t seed) -> OrderedGraph
    {
        if (n < 0)
            throw std::invalid_argument("vertex count must be non-negative");
        if (! (density >= 0.0 && density <= 1.0))
            throw std::invalid_argument("density must lie in [0, 1]");
        if ((spec.cls == GeneratorClass::bounded_pathwidth || spec.cls == GeneratorClass::bounded_vc) && spec.parameter < 0)
            throw std::invalid_argument("generator parameter must be non-negative");

        Random rng{ std::mt19937_64{ seed } };
        switch (spec.cls) {
            case GeneratorClass::interval: return interval_graph(rng, n, density);
            case GeneratorClass::interval_bigraph: return interval_bigraph(rng, n, density);
            case GeneratorClass::two_dor: return two_dor(rng, n, density);
            case GeneratorClass::signed_interval: return signed_interval(rng, n, density);
            case GeneratorClass::threshold: return nested_neighbourhoods(rng, InclusionClass::threshold, n, density);
            case GeneratorClass::chain: return nested_neighbourhoods(rng, InclusionClass::chain, n, density);
            case GeneratorClass::cochain: return nested_neighbourhoods(rng, InclusionClass::cochain, n, density);
            case GeneratorClass::arbitrary: return arbitrary(rng, n, density);
            case GeneratorClass::bounded_pathwidth: return bounded_pathwidth(rng, n, density, spec.parameter);
            case GeneratorClass::bounded_vc: return bounded_vc(rng, n, density, spec.parameter);
        }
        throw std::logic_error("unknown generator class");
    }

    auto random_ops(int n, int k, std::uint64_t seed) -> OpsInstance
    {
        if (k < 0 || k > n)
            throw std::invalid_argument("need 0 <= k <= n");
        Random rng{ std::mt19937_64{ seed } };
        OpsInstance result{ rng.permutation(n), rng.permutation(k) };
        for (auto * p : { &result.pi, &result.rho })
            for (auto & v : *p)
                ++v;
        return result;
    }
}
