/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/instances.hh>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

using std::vector;

namespace ordsub
{
    using std::to_string;

    namespace
    {
        auto require(bool condition, const std::string & what) -> void
        {
            if (! condition)
                throw std::logic_error("reduction produced a bad instance: " + what);
        }

        auto spider(const vector<int> & perm, bool centre, bool centre_to_leaves) -> OrderedGraph
        {
            int n = static_cast<int>(perm.size());
            vector<Edge> edges;
            if (centre) {
                for (int i = 1 ; i <= n ; ++i) {
                    edges.emplace_back(0, i);
                    edges.emplace_back(i, n + perm[i - 1]);
                    if (centre_to_leaves)
                        edges.emplace_back(0, n + i);
                }
                return make_undirected(2 * n + 1, edges);
            }
            for (int i = 1 ; i <= n ; ++i)
                edges.emplace_back(i - 1, n + perm[i - 1] - 1);
            return make_undirected(2 * n, edges);
        }

        auto check_spider(const OrderedGraph & t) -> void
        {
            int n = (t.size() - 1) / 2;
            require(t.edge_count() == 2 * n, "spider edge count");
            require(t.degree(0) == n, "spider centre degree");
            for (int i = 1 ; i <= n ; ++i) {
                require(t.degree(i) == 2 && t.adjacent(0, i), "spider leg");
                require(t.degree(n + i) == 1, "spider leaf");
            }
        }

        auto check_trivially_perfect(const OrderedGraph & t) -> void
        {
            int n = t.size();
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    for (int c = b + 1 ; c < n ; ++c)
                        for (int d = c + 1 ; d < n ; ++d) {
                            int q[4] = { a, b, c, d }, deg[4] = { }, m = 0;
                            for (int s = 0 ; s < 4 ; ++s)
                                for (int r = s + 1 ; r < 4 ; ++r)
                                    if (t.adjacent(q[s], q[r])) {
                                        ++deg[s];
                                        ++deg[r];
                                        ++m;
                                    }
                            int ones = 0, twos = 0;
                            for (int x : deg) {
                                ones += x == 1;
                                twos += x == 2;
                            }
                            require(! (m == 3 && ones == 2 && twos == 2), "induced P4");
                            require(! (m == 4 && twos == 4), "induced C4");
                        }
        }

        auto check_matching(const OrderedGraph & t) -> void
        {
            for (int v = 0 ; v < t.size() ; ++v)
                require(t.degree(v) == 1, "matching degree");
        }

        auto check_claim(const ReducedInstance & r) -> void
        {
            if (! r.claimed)
                return;
            auto check = [&] (const OrderedGraph & x, const vector<int> & order, const char * which) {
                auto report = verify_ordering(*r.claimed, order.empty() ? x : reorder(x, order));
                require(report.ok, std::string(which) + " fails " + std::string(to_string(*r.claimed)) + ": " + report.detail);
            };
            check(r.g, r.g_order, "G");
            check(r.h, r.h_order, "H");
        }

        struct NestedLayout
        {
            int n;
            bool mid;

            auto x(int i) const -> int
            {
                return i - 1;
            }

            auto middle() const -> int
            {
                return n;
            }

            auto y(int t) const -> int
            {
                return n + t - (mid ? 0 : 1);
            }

            auto size() const -> int
            {
                return 2 * n + (mid ? 1 : 0);
            }
        };

        auto nested(InclusionClass cls, const vector<int> & perm, bool mid) -> OrderedGraph
        {
            NestedLayout at{ static_cast<int>(perm.size()), mid };
            int n = at.n;
            vector<Side> sides(at.size(), Side::y);
            for (int i = 1 ; i <= n ; ++i)
                sides[at.x(i)] = Side::x;
            if (mid)
                sides[at.middle()] = Side::x;

            vector<int> xs;
            for (int i = 1 ; i <= n ; ++i)
                xs.push_back(at.x(i));
            if (mid)
                xs.push_back(at.middle());
            vector<int> ys;
            for (int t = 1 ; t <= n ; ++t)
                ys.push_back(at.y(t));

            vector<Edge> edges;
            for (int i = 1 ; i <= n ; ++i)
                for (int j = i ; j <= n ; ++j)
                    edges.emplace_back(at.x(i), at.y(perm[j - 1]));

            auto clique = [&] (const vector<int> & part) {
                for (std::size_t a = 0 ; a < part.size() ; ++a)
                    for (std::size_t b = a + 1 ; b < part.size() ; ++b)
                        edges.emplace_back(part[a], part[b]);
            };
            switch (cls) {
                case InclusionClass::threshold: clique(xs); break;
                case InclusionClass::cochain: clique(xs); clique(ys); break;
                case InclusionClass::chain: break;
                case InclusionClass::none: throw std::invalid_argument("no inclusion class given");
            }

            if (cls == InclusionClass::chain)
                return make_bipartite(std::move(sides), edges);
            return OrderedGraph(GraphKind::undirected, at.size(), edges, std::move(sides));
        }

        auto nested_inclusion_order(const vector<int> & perm, bool mid) -> vector<int>
        {
            NestedLayout at{ static_cast<int>(perm.size()), mid };
            vector<int> order;
            for (int j = 1 ; j <= at.n ; ++j)
                order.push_back(at.y(perm[j - 1]));
            if (mid)
                order.push_back(at.middle());
            for (int i = at.n ; i >= 1 ; --i)
                order.push_back(at.x(i));
            return order;
        }

        auto bigraph_order(int n, bool mid) -> vector<int>
        {
            NestedLayout at{ n, mid };
            vector<int> order;
            if (mid)
                order.push_back(at.middle());
            for (int i = n ; i >= 1 ; --i)
                order.push_back(at.x(i));
            for (int t = n ; t >= 1 ; --t)
                order.push_back(at.y(t));
            return order;
        }

        auto complete_bipartite(int k) -> OrderedGraph
        {
            vector<Side> sides(2 * k, Side::x);
            vector<Edge> edges;
            for (int a = 0 ; a < k ; ++a) {
                sides[k + a] = Side::y;
                for (int b = 0 ; b < k ; ++b)
                    edges.emplace_back(a, k + b);
            }
            return make_bipartite(std::move(sides), edges);
        }

        auto split_padding(const OrderedGraph & g, int pendants) -> OrderedGraph
        {
            int n = g.size();
            vector<int> xs, ys;
            for (int v = 0 ; v < n ; ++v)
                (g.side(v) == Side::x ? xs : ys).push_back(v);

            // (Y, L, u, X)
            vector<int> index(n);
            int next = 0;
            for (int v : ys)
                index[v] = next++;
            int first_pendant = next;
            next += pendants;
            int apex = next++;
            for (int v : xs)
                index[v] = next++;

            vector<Edge> edges;
            for (auto [a, b] : g.edges())
                edges.emplace_back(index[a], index[b]);
            for (int l = 0 ; l < pendants ; ++l)
                edges.emplace_back(first_pendant + l, apex);
            for (std::size_t a = 0 ; a < xs.size() ; ++a) {
                edges.emplace_back(apex, index[xs[a]]);
                for (std::size_t b = a + 1 ; b < xs.size() ; ++b)
                    edges.emplace_back(index[xs[a]], index[xs[b]]);
            }
            return make_undirected(next, edges);
        }

        auto cobipartite_padding(const OrderedGraph & g, int padding) -> OrderedGraph
        {
            int n = g.size();
            vector<int> xs, ys;
            for (int v = 0 ; v < n ; ++v)
                (g.side(v) == Side::x ? xs : ys).push_back(v);

            // (Y', Y, u, X, X')
            vector<int> index(n), left, right;
            int next = 0;
            for (int l = 0 ; l < padding ; ++l)
                left.push_back(next++);
            for (int v : ys) {
                index[v] = next++;
                left.push_back(index[v]);
            }
            int apex = next++;
            for (int v : xs) {
                index[v] = next++;
                right.push_back(index[v]);
            }
            for (int l = 0 ; l < padding ; ++l)
                right.push_back(next++);

            vector<Edge> edges;
            for (auto [a, b] : g.edges())
                edges.emplace_back(index[a], index[b]);
            for (auto * part : { &left, &right })
                for (std::size_t a = 0 ; a < part->size() ; ++a)
                    for (std::size_t b = a + 1 ; b < part->size() ; ++b)
                        edges.emplace_back((*part)[a], (*part)[b]);
            for (int v = 0 ; v < next ; ++v)
                if (v != apex)
                    edges.emplace_back(std::min(v, apex), std::max(v, apex));
            return make_undirected(next, edges);
        }
    }

    auto ops_to_spiders(const OpsInstance & ops) -> ReducedInstance
    {
        validate_ops(ops);
        ReducedInstance r{ "ops-spiders", spider(ops.pi, true, false), spider(ops.rho, true, false), ops, { }, 0, { }, { }, { } };
        check_spider(r.g);
        check_spider(r.h);
        return r;
    }

    auto ops_to_trivially_perfect(const OpsInstance & ops) -> ReducedInstance
    {
        validate_ops(ops);
        ReducedInstance r{ "ops-trivially-perfect", spider(ops.pi, true, true), spider(ops.rho, true, true), ops, { }, 0, { }, { }, { } };
        check_trivially_perfect(r.g);
        check_trivially_perfect(r.h);
        return r;
    }

    auto ops_to_disjoint_edges(const OpsInstance & ops) -> ReducedInstance
    {
        validate_ops(ops);
        ReducedInstance r{ "ops-disjoint-edges", spider(ops.pi, false, false), spider(ops.rho, false, false), ops, { }, 0, { }, { }, { } };
        check_matching(r.g);
        check_matching(r.h);
        return r;
    }

    auto ops_to_inclusion_class(InclusionClass cls, const OpsInstance & ops, bool drop_mid) -> ReducedInstance
    {
        validate_ops(ops);
        ReducedInstance r{ "ops-" + std::string(to_string(cls)) + (drop_mid ? "-nomid" : ""),
            nested(cls, ops.pi, ! drop_mid), nested(cls, ops.rho, ! drop_mid), ops, { }, 0,
            OrderingKind::inclusion, nested_inclusion_order(ops.pi, ! drop_mid), nested_inclusion_order(ops.rho, ! drop_mid) };
        check_claim(r);
        for (auto [x, order] : { std::pair{ &r.g, &r.g_order }, std::pair{ &r.h, &r.h_order } }) {
            bool found = false;
            for (auto c : inclusion_classes(reorder(*x, *order)))
                found = found || c == cls;
            require(found, "class " + std::string(to_string(cls)) + " does not hold");
        }
        return r;
    }

    auto ops_to_interval_ordered(IntervalFlavour flavour, const OpsInstance & ops, bool drop_mid) -> ReducedInstance
    {
        validate_ops(ops);
        ReducedInstance r;
        r.ops = ops;
        if (flavour == IntervalFlavour::interval) {
            r.reduction = drop_mid ? "ops-interval-nomid" : "ops-interval";
            r.g = complement(nested(InclusionClass::threshold, ops.pi, ! drop_mid));
            r.h = complement(nested(InclusionClass::threshold, ops.rho, ! drop_mid));
            r.claimed = OrderingKind::interval;
        }
        else {
            r.reduction = drop_mid ? "ops-interval-bigraph-nomid" : "ops-interval-bigraph";
            int n = static_cast<int>(ops.pi.size()), k = static_cast<int>(ops.rho.size());
            r.g = reorder(nested(InclusionClass::chain, ops.pi, ! drop_mid), bigraph_order(n, ! drop_mid));
            r.h = reorder(nested(InclusionClass::chain, ops.rho, ! drop_mid), bigraph_order(k, ! drop_mid));
            r.claimed = OrderingKind::interval_bigraph;
        }
        check_claim(r);
        return r;
    }

    auto bb_to_ordered(BicliqueTarget target, const OrderedGraph & g, int k) -> ReducedInstance
    {
        if (g.kind() != GraphKind::bipartite)
            throw std::invalid_argument("balanced biclique source must be bipartite");
        if (k < 1)
            throw std::invalid_argument("biclique size must be positive");

        auto kk = complete_bipartite(k);
        ReducedInstance r;
        r.source = g;
        r.k = k;
        if (target == BicliqueTarget::split) {
            r.reduction = "bb-split";
            r.g = split_padding(g, g.size());
            r.h = split_padding(kk, g.size());
            r.claimed = OrderingKind::perfect_elimination;
        }
        else {
            r.reduction = "bb-cobipartite";
            r.g = cobipartite_padding(g, g.size());
            r.h = cobipartite_padding(kk, g.size());
            r.claimed = OrderingKind::cocomparability;
        }
        check_claim(r);
        return r;
    }
}
