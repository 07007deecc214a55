#ifndef DOMLAB_GRAPH_HPP
#define DOMLAB_GRAPH_HPP

#include <domlab/vertex_set.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domlab {

/// Raised for any malformed graph, edge, or vertex argument.
class GraphError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// An edge, normalized so that u < v.
struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;

    /// Throws GraphError on u == v or negative ids.
    Edge(Vertex a, Vertex b);

    auto to_string() const -> std::string;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Immutable simple undirected graph on vertices 0..n-1, with one adjacency
 * word per vertex. Adjacency is symmetric and irreflexive; every constructor
 * and edit enforces that, so a Graph in hand is always well formed.
 */
class Graph
{
    public:
        /// The empty graph (n = 0).
        Graph() = default;

        /// Edgeless graph on n vertices.
        explicit Graph(int n, std::string label = {});

        /// Throws GraphError on self-loops, ids out of range, or n > max_vertices.
        Graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges, std::string label = {});

        auto order() const -> int { return _n; }
        auto size() const -> int;
        auto label() const -> const std::string & { return _label; }
        auto with_label(std::string label) const -> Graph;

        auto vertices() const -> VertexSet { return VertexSet::full(_n); }
        auto has_edge(Vertex u, Vertex v) const -> bool;
        auto has_edge(const Edge & e) const -> bool { return has_edge(e.u, e.v); }

        /// N(v); throws on out-of-range v.
        auto open_neighborhood(Vertex v) const -> VertexSet;
        /// N[v] = N(v) + v.
        auto closed_neighborhood(Vertex v) const -> VertexSet;
        auto degree(Vertex v) const -> int;

        /// Unchecked row access for hot loops.
        auto row(Vertex v) const -> VertexSet { return _adj[v]; }
        auto closed_row(Vertex v) const -> VertexSet { return _adj[v].with(v); }

        auto min_degree() const -> int;
        auto max_degree() const -> int;

        /// All edges in (u, v) lexicographic order.
        auto edges() const -> std::vector<Edge>;

        friend auto operator==(const Graph & a, const Graph & b) -> bool
        {
            return a._n == b._n && a._adj == b._adj;
        }

    private:
        int _n = 0;
        std::vector<VertexSet> _adj;
        std::string _label;

        friend class GraphBuilder;
};

/// Mutable staging area used by parsers, generators and edits.
class GraphBuilder
{
    public:
        explicit GraphBuilder(int n);

        auto add_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto remove_edge(Vertex u, Vertex v) -> GraphBuilder &;
        auto order() const -> int { return _g._n; }
        auto build(std::string label = {}) && -> Graph;

    private:
        Graph _g;
};

/// Result of an edit that compacts vertex ids: remap[old] = new id, or -1.
struct Remapped
{
    Graph graph;
    std::vector<Vertex> remap;
};

auto check_vertex(const Graph & g, Vertex v) -> void;

auto delete_edge(const Graph & g, const Edge & e) -> Graph;
auto add_edge(const Graph & g, const Edge & e) -> Graph;
auto delete_vertex(const Graph & g, Vertex v) -> Remapped;

/**
 * Replaces e = uv by the path u, x1, ..., xt, v. The new vertices take ids
 * n, n+1, ..., n+t-1 in path order starting from u (= e.u, the smaller end).
 */
auto subdivide_edge(const Graph & g, const Edge & e, int t) -> Graph;

/// Vertices y with N[y] meeting X exactly in {x}. Throws if x is not in X.
auto private_neighbors(const Graph & g, Vertex x, VertexSet X) -> VertexSet;

/// Connected components of the subgraph induced by within (default: all).
auto components(const Graph & g) -> std::vector<VertexSet>;
auto components_within(const Graph & g, VertexSet within) -> std::vector<VertexSet>;

/// The empty graph counts as connected.
auto is_connected(const Graph & g) -> bool;

/// Induced subgraph with relative vertex order preserved.
auto induced_subgraph(const Graph & g, VertexSet s) -> Remapped;

/// Disjoint union with a fresh isolated vertex (id n).
auto add_isolated_vertex(const Graph & g) -> Graph;

}

#endif
