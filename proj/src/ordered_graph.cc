/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordsub/errors.hh>
#include <ordsub/ordered_graph.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::invalid_argument;
using std::pair;
using std::span;
using std::string;
using std::vector;

namespace ordsub
{
    using std::to_string;

    PreconditionFailed::PreconditionFailed(const string & what, VerifyReport report) :
        std::runtime_error(what + (report.detail.empty() ? "" : ": " + report.detail)),
        _report(std::move(report))
    {
    }

    auto to_string(GraphKind kind) -> std::string_view
    {
        switch (kind) {
            case GraphKind::undirected: return "undirected";
            case GraphKind::directed: return "directed";
            case GraphKind::bipartite: return "bipartite";
        }
        return "?";
    }

    auto to_string(IsoVariant v) -> std::string_view
    {
        return v == IsoVariant::osi ? "osi" : "oisi";
    }

    auto to_string(McoVariant v) -> std::string_view
    {
        return v == McoVariant::mcos ? "mcos" : "mcois";
    }

    OrderedGraph::OrderedGraph(GraphKind kind, int size, span<const Edge> edges, std::optional<vector<Side>> sides) :
        _kind(kind),
        _size(size),
        _out(size),
        _in(kind == GraphKind::directed ? size : 0),
        _out_lists(size),
        _in_lists(kind == GraphKind::directed ? size : 0),
        _sides(std::move(sides))
    {
        if (size < 0)
            throw invalid_argument("negative vertex count");

        if (_sides) {
            if (kind == GraphKind::directed)
                throw invalid_argument("directed graphs carry no side map");
            if (static_cast<int>(_sides->size()) != size)
                throw invalid_argument("side map has " + to_string(_sides->size()) + " entries, expected " + to_string(size));
        }
        else if (kind == GraphKind::bipartite)
            throw invalid_argument("bipartite graph needs a side map");

        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= size || v >= size)
                throw invalid_argument("edge (" + to_string(u + 1) + ", " + to_string(v + 1) + ") out of range");
            if (u == v && kind != GraphKind::directed)
                throw invalid_argument("loop at vertex " + to_string(u + 1) + " in a simple graph");
            if (kind == GraphKind::bipartite && (*_sides)[u] == (*_sides)[v])
                throw invalid_argument("edge (" + to_string(u + 1) + ", " + to_string(v + 1) + ") inside one side");

            _out.set(u, v);
            if (kind == GraphKind::directed)
                _in.set(v, u);
            else
                _out.set(v, u);
        }

        for (int u = 0 ; u < size ; ++u) {
            auto r = _out.row(u);
            for (int v = first_set(r, 0, size) ; v != -1 ; v = first_set(r, v + 1, size)) {
                _out_lists[u].push_back(v);
                if (kind == GraphKind::directed)
                    _in_lists[v].push_back(u);
            }
            _edge_count += static_cast<long>(_out_lists[u].size());
        }

        if (kind != GraphKind::directed)
            _edge_count /= 2;
    }

    auto OrderedGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (int u = 0 ; u < _size ; ++u)
            for (int v : _out_lists[u])
                if (directed() || u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto OrderedGraph::operator== (const OrderedGraph & other) const -> bool
    {
        return _kind == other._kind && _size == other._size && _sides == other._sides && _out == other._out;
    }

    auto make_undirected(int size, span<const Edge> edges) -> OrderedGraph
    {
        return OrderedGraph{ GraphKind::undirected, size, edges };
    }

    auto make_directed(int size, span<const Edge> edges) -> OrderedGraph
    {
        return OrderedGraph{ GraphKind::directed, size, edges };
    }

    auto make_bipartite(vector<Side> sides, span<const Edge> edges) -> OrderedGraph
    {
        int size = static_cast<int>(sides.size());
        return OrderedGraph{ GraphKind::bipartite, size, edges, std::move(sides) };
    }

    auto with_kind(const OrderedGraph & g, GraphKind kind) -> OrderedGraph
    {
        auto e = g.edges();
        return OrderedGraph{ kind, g.size(), e, g.sides() };
    }

    auto with_sides(const OrderedGraph & g, std::optional<vector<Side>> sides) -> OrderedGraph
    {
        auto e = g.edges();
        return OrderedGraph{ g.kind(), g.size(), e, std::move(sides) };
    }

    auto reorder(const OrderedGraph & g, span<const int> order) -> OrderedGraph
    {
        int n = g.size();
        if (static_cast<int>(order.size()) != n)
            throw invalid_argument("reorder: permutation has wrong length");

        vector<int> position(n, -1);
        for (int r = 0 ; r < n ; ++r) {
            if (order[r] < 0 || order[r] >= n || position[order[r]] != -1)
                throw invalid_argument("reorder: not a permutation");
            position[order[r]] = r;
        }

        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(position[u], position[v]);

        std::optional<vector<Side>> sides;
        if (g.has_sides()) {
            sides.emplace(n);
            for (int r = 0 ; r < n ; ++r)
                (*sides)[r] = g.side(order[r]);
        }

        return OrderedGraph{ g.kind(), n, edges, std::move(sides) };
    }

    OrderPreservingMap::OrderPreservingMap(vector<int> images) :
        _images(std::move(images))
    {
        for (std::size_t i = 0 ; i < _images.size() ; ++i) {
            if (_images[i] < 0)
                throw invalid_argument("negative image");
            if (i > 0 && _images[i - 1] >= _images[i])
                throw invalid_argument("images are not strictly increasing at position " + to_string(i + 1));
        }
    }

    auto is_ordered_subgraph_iso(const OrderedGraph & g, const OrderedGraph & h, const OrderPreservingMap & f, bool induced) -> bool
    {
        if (g.kind() != h.kind())
            throw invalid_argument("graph kinds differ: " + string(to_string(g.kind())) + " vs " + string(to_string(h.kind())));
        if (f.size() != h.size())
            throw invalid_argument("map has " + to_string(f.size()) + " images, pattern has " + to_string(h.size()) + " vertices");
        if (f.size() > 0 && f.images().back() >= g.size())
            throw invalid_argument("image out of range");

        const bool directed = h.directed();
        for (int a = 0 ; a < h.size() ; ++a)
            for (int b = directed ? 0 : a + 1 ; b < h.size() ; ++b) {
                bool in_h = h.adjacent(a, b);
                bool in_g = g.adjacent(f[a], f[b]);
                if (in_h && ! in_g)
                    return false;
                if (induced && in_g && ! in_h)
                    return false;
            }

        return true;
    }

    auto induced_subgraph(const OrderedGraph & g, span<const int> vertices) -> OrderedGraph
    {
        int k = static_cast<int>(vertices.size());
        for (int i = 0 ; i < k ; ++i) {
            if (vertices[i] < 0 || vertices[i] >= g.size())
                throw invalid_argument("vertex " + to_string(vertices[i] + 1) + " out of range");
            if (i > 0 && vertices[i - 1] >= vertices[i])
                throw invalid_argument("vertex list is not strictly increasing");
        }

        vector<Edge> edges;
        for (int a = 0 ; a < k ; ++a)
            for (int b = g.directed() ? 0 : a + 1 ; b < k ; ++b)
                if (g.adjacent(vertices[a], vertices[b]))
                    edges.emplace_back(a, b);

        std::optional<vector<Side>> sides;
        if (g.has_sides()) {
            sides.emplace();
            for (int v : vertices)
                sides->push_back(g.side(v));
        }

        return OrderedGraph{ g.kind(), k, edges, std::move(sides) };
    }

    auto complement(const OrderedGraph & g) -> OrderedGraph
    {
        if (g.kind() != GraphKind::undirected)
            throw invalid_argument("complement is defined for undirected graphs only");

        vector<Edge> edges;
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = u + 1 ; v < g.size() ; ++v)
                if (! g.adjacent(u, v))
                    edges.emplace_back(u, v);

        return OrderedGraph{ GraphKind::undirected, g.size(), edges, g.sides() };
    }

    auto common_objective(const OrderedGraph & g, const OrderedGraph & h, span<const pair<int, int>> pairs, McoVariant variant) -> long
    {
        if (variant == McoVariant::mcois)
            return static_cast<long>(pairs.size());

        long result = 0;
        const bool directed = g.directed();
        int k = static_cast<int>(pairs.size());
        for (int a = 0 ; a < k ; ++a)
            for (int b = directed ? 0 : a + 1 ; b < k ; ++b)
                if (g.adjacent(pairs[a].first, pairs[b].first) && h.adjacent(pairs[a].second, pairs[b].second))
                    ++result;
        return result;
    }

    auto verify_common_solution(const OrderedGraph & g, const OrderedGraph & h, const CommonSolution & s) -> VerifyReport
    {
        int k = static_cast<int>(s.pairs.size());
        for (int a = 0 ; a < k ; ++a) {
            auto [x, y] = s.pairs[a];
            if (x < 0 || x >= g.size() || y < 0 || y >= h.size())
                return VerifyReport::fail({ x, y }, "pair-out-of-range");
            if (a > 0 && (s.pairs[a - 1].first >= x || s.pairs[a - 1].second >= y))
                return VerifyReport::fail({ s.pairs[a - 1].first, s.pairs[a - 1].second, x, y }, "pairs-not-increasing");
        }

        if (g.directed() != h.directed())
            return VerifyReport::fail({ }, "kind-mismatch");

        if (s.variant == McoVariant::mcois) {
            const bool directed = g.directed();
            for (int a = 0 ; a < k ; ++a)
                for (int b = directed ? 0 : a + 1 ; b < k ; ++b)
                    if (g.adjacent(s.pairs[a].first, s.pairs[b].first) != h.adjacent(s.pairs[a].second, s.pairs[b].second))
                        return VerifyReport::fail({ s.pairs[a].first, s.pairs[b].first, s.pairs[a].second, s.pairs[b].second },
                                "induced-subgraphs-differ");
        }

        long expected = common_objective(g, h, s.pairs, s.variant);
        if (expected != s.value)
            return VerifyReport::fail({ }, "value-mismatch: claimed " + to_string(s.value) + ", recomputed " + to_string(expected));

        return VerifyReport::pass();
    }
}
