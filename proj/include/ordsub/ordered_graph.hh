/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDSUB_GUARD_ORDSUB_ORDERED_GRAPH_HH
#define ORDSUB_GUARD_ORDSUB_ORDERED_GRAPH_HH 1

#include <ordsub/bit_row.hh>
#include <ordsub/verify_report.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ordsub
{
    enum class GraphKind
    {
        undirected,
        directed,
        bipartite
    };

    enum class Side : std::uint8_t
    {
        x = 0,
        y = 1
    };

    [[nodiscard]] auto to_string(GraphKind) -> std::string_view;

    using Edge = std::pair<int, int>;

    /**
     * A graph whose vertex ordering is the identity on vertex indices: vertex v
     * has rank v + 1, and every algorithm in this library reads the ordering off
     * the indices. Relabelling happens only when a file is parsed or a generator
     * emits a graph.
     *
     * Undirected and bipartite graphs are simple. Directed graphs may carry loops
     * and opposite arcs. Bipartite graphs always carry a side map; undirected
     * graphs may carry one, which is how threshold and cochain instances record
     * their (X, Y) partition.
     *
     * Adjacency membership is a bit test. Immutable after construction.
     */
    class OrderedGraph
    {
        private:
            GraphKind _kind = GraphKind::undirected;
            int _size = 0;
            BitMatrix _out;
            BitMatrix _in;
            std::vector<std::vector<int>> _out_lists;
            std::vector<std::vector<int>> _in_lists;
            std::optional<std::vector<Side>> _sides;
            long _edge_count = 0;

        public:
            OrderedGraph() = default;

            // Throws std::invalid_argument on out-of-range endpoints, loops in an
            // undirected or bipartite graph, a bipartite graph without sides, an
            // edge inside one side of a bipartite graph, or sides on a digraph.
            // Duplicate edges collapse.
            OrderedGraph(GraphKind kind, int size, std::span<const Edge> edges,
                    std::optional<std::vector<Side>> sides = std::nullopt);

            [[nodiscard]] auto kind() const -> GraphKind
            {
                return _kind;
            }

            [[nodiscard]] auto size() const -> int
            {
                return _size;
            }

            [[nodiscard]] auto directed() const -> bool
            {
                return _kind == GraphKind::directed;
            }

            // Arc u -> v for digraphs, edge {u, v} otherwise.
            [[nodiscard]] auto adjacent(int u, int v) const -> bool
            {
                return _out.test(u, v);
            }

            // Adjacent in either direction.
            [[nodiscard]] auto linked(int u, int v) const -> bool
            {
                return _out.test(u, v) || _out.test(v, u);
            }

            [[nodiscard]] auto row(int u) const -> std::span<const Word>
            {
                return _out.row(u);
            }

            [[nodiscard]] auto in_row(int v) const -> std::span<const Word>
            {
                return _in.row(v);
            }

            // Sorted out-neighbours (neighbours, for undirected graphs).
            [[nodiscard]] auto neighbours(int u) const -> const std::vector<int> &
            {
                return _out_lists[u];
            }

            [[nodiscard]] auto in_neighbours(int v) const -> const std::vector<int> &
            {
                return _in_lists[v];
            }

            [[nodiscard]] auto degree(int u) const -> int
            {
                return static_cast<int>(_out_lists[u].size());
            }

            [[nodiscard]] auto edge_count() const -> long
            {
                return _edge_count;
            }

            // Canonical edge list: sorted, (i < j) for undirected graphs.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            [[nodiscard]] auto has_sides() const -> bool
            {
                return _sides.has_value();
            }

            [[nodiscard]] auto side(int v) const -> Side
            {
                return (*_sides)[v];
            }

            [[nodiscard]] auto sides() const -> const std::optional<std::vector<Side>> &
            {
                return _sides;
            }

            [[nodiscard]] auto operator== (const OrderedGraph & other) const -> bool;
    };

    // Convenience constructors used throughout tests and generators.
    [[nodiscard]] auto make_undirected(int size, std::span<const Edge> edges) -> OrderedGraph;
    [[nodiscard]] auto make_directed(int size, std::span<const Edge> edges) -> OrderedGraph;
    [[nodiscard]] auto make_bipartite(std::vector<Side> sides, std::span<const Edge> edges) -> OrderedGraph;

    // Same edges and sides, different kind tag. Bipartite requires sides.
    [[nodiscard]] auto with_kind(const OrderedGraph &, GraphKind) -> OrderedGraph;
    [[nodiscard]] auto with_sides(const OrderedGraph &, std::optional<std::vector<Side>>) -> OrderedGraph;

    // Relabels so that the vertex currently at index order[r] gets index r.
    // Sides follow their vertices.
    [[nodiscard]] auto reorder(const OrderedGraph &, std::span<const int> order) -> OrderedGraph;

    /**
     * Image sequence of an order-preserving injective map from H's vertices to
     * G's vertices: images()[i] is the image of H-vertex i. Construction rejects
     * anything that is not strictly increasing, which is exactly injective plus
     * order-preserving.
     */
    class OrderPreservingMap
    {
        private:
            std::vector<int> _images;

        public:
            OrderPreservingMap() = default;

            // Throws std::invalid_argument unless strictly increasing and non-negative.
            explicit OrderPreservingMap(std::vector<int> images);

            [[nodiscard]] auto images() const -> const std::vector<int> &
            {
                return _images;
            }

            [[nodiscard]] auto size() const -> int
            {
                return static_cast<int>(_images.size());
            }

            [[nodiscard]] auto operator[] (int i) const -> int
            {
                return _images[i];
            }

            [[nodiscard]] auto operator== (const OrderPreservingMap &) const -> bool = default;
    };

    enum class IsoVariant
    {
        osi,
        oisi
    };

    enum class McoVariant
    {
        mcos,
        mcois
    };

    [[nodiscard]] auto to_string(IsoVariant) -> std::string_view;
    [[nodiscard]] auto to_string(McoVariant) -> std::string_view;

    // Matched (g, h) vertex pairs plus objective: common edges for MCOS, matched
    // vertices for MCOIS.
    struct CommonSolution
    {
        McoVariant variant = McoVariant::mcois;
        std::vector<std::pair<int, int>> pairs;
        long value = 0;
    };

    // True iff f sends every H-edge (H-arc, including loops) to a G-edge, and,
    // when induced, every H-non-edge among the images to a G-non-edge.
    // Throws std::invalid_argument if |f| != |H|, an image is out of range, or
    // the kinds differ. Bipartite side maps are metadata and do not constrain f.
    [[nodiscard]] auto is_ordered_subgraph_iso(const OrderedGraph & g, const OrderedGraph & h,
            const OrderPreservingMap & f, bool induced) -> bool;

    // Subgraph induced by strictly increasing vertex indices, relabelled 0..k-1.
    // Throws std::invalid_argument on out-of-range or non-increasing input.
    [[nodiscard]] auto induced_subgraph(const OrderedGraph &, std::span<const int> vertices) -> OrderedGraph;

    // Undirected graphs only; keeps any side map.
    [[nodiscard]] auto complement(const OrderedGraph &) -> OrderedGraph;

    // Objective of a pair sequence without checking its validity.
    [[nodiscard]] auto common_objective(const OrderedGraph & g, const OrderedGraph & h,
            std::span<const std::pair<int, int>> pairs, McoVariant) -> long;

    [[nodiscard]] auto verify_common_solution(const OrderedGraph & g, const OrderedGraph & h,
            const CommonSolution &) -> VerifyReport;
}

#endif
