#include <domlab/graph.hpp>

#include <algorithm>

namespace domlab {

auto VertexSet::to_string() const -> std::string
{
    std::string out = "{";
    bool first_member = true;
    for (auto v : *this) {
        if (! first_member)
            out += ',';
        out += std::to_string(v);
        first_member = false;
    }
    out += '}';
    return out;
}

auto lex_less(VertexSet a, VertexSet b) -> bool
{
    if (a.size() != b.size())
        return a.size() < b.size();
    auto diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    // lowest differing vertex decides: the set that has it is smaller
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

Edge::Edge(Vertex a, Vertex b)
{
    if (a < 0 || b < 0)
        throw GraphError("negative vertex id in edge");
    if (a == b)
        throw GraphError("self-loop " + std::to_string(a) + "-" + std::to_string(b));
    u = std::min(a, b);
    v = std::max(a, b);
}

auto Edge::to_string() const -> std::string
{
    return std::to_string(u) + "-" + std::to_string(v);
}

Graph::Graph(int n, std::string label) :
    _n(n),
    _label(std::move(label))
{
    if (n < 0 || n > max_vertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside supported range 0.." + std::to_string(max_vertices));
    _adj.resize(n);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges, std::string label) :
    Graph(n, std::move(label))
{
    for (auto [a, b] : edges) {
        Edge e{ a, b };
        if (e.v >= n)
            throw GraphError("edge " + e.to_string() + " out of range for n = " + std::to_string(n));
        _adj[e.u].insert(e.v);
        _adj[e.v].insert(e.u);
    }
}

auto Graph::with_label(std::string label) const -> Graph
{
    Graph g = *this;
    g._label = std::move(label);
    return g;
}

auto Graph::size() const -> int
{
    int twice = 0;
    for (auto r : _adj)
        twice += r.size();
    return twice / 2;
}

auto Graph::has_edge(Vertex u, Vertex v) const -> bool
{
    if (u < 0 || v < 0 || u >= _n || v >= _n)
        return false;
    return _adj[u].contains(v);
}

auto check_vertex(const Graph & g, Vertex v) -> void
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(g.order()));
}

auto Graph::open_neighborhood(Vertex v) const -> VertexSet
{
    check_vertex(*this, v);
    return _adj[v];
}

auto Graph::closed_neighborhood(Vertex v) const -> VertexSet
{
    check_vertex(*this, v);
    return _adj[v].with(v);
}

auto Graph::degree(Vertex v) const -> int
{
    return open_neighborhood(v).size();
}

auto Graph::min_degree() const -> int
{
    int d = _n == 0 ? 0 : max_vertices;
    for (auto r : _adj)
        d = std::min(d, r.size());
    return d;
}

auto Graph::max_degree() const -> int
{
    int d = 0;
    for (auto r : _adj)
        d = std::max(d, r.size());
    return d;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < _n; ++u)
        for (auto v : _adj[u])
            if (v > u)
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int n) :
    _g(n)
{
}

auto GraphBuilder::add_edge(Vertex u, Vertex v) -> GraphBuilder &
{
    Edge e{ u, v };
    if (e.v >= _g._n)
        throw GraphError("edge " + e.to_string() + " out of range for n = " + std::to_string(_g._n));
    _g._adj[e.u].insert(e.v);
    _g._adj[e.v].insert(e.u);
    return *this;
}

auto GraphBuilder::remove_edge(Vertex u, Vertex v) -> GraphBuilder &
{
    _g._adj[u].erase(v);
    _g._adj[v].erase(u);
    return *this;
}

auto GraphBuilder::build(std::string label) && -> Graph
{
    _g._label = std::move(label);
    return std::move(_g);
}

namespace {
    auto require_edge(const Graph & g, const Edge & e) -> void
    {
        if (! g.has_edge(e))
            throw GraphError("edge " + e.to_string() + " not present");
    }

    auto copy_edges(const Graph & g, GraphBuilder & b) -> void
    {
        for (auto e : g.edges())
            b.add_edge(e.u, e.v);
    }
}

auto delete_edge(const Graph & g, const Edge & e) -> Graph
{
    require_edge(g, e);
    GraphBuilder b{ g.order() };
    copy_edges(g, b);
    b.remove_edge(e.u, e.v);
    return std::move(b).build(g.label());
}

auto add_edge(const Graph & g, const Edge & e) -> Graph
{
    check_vertex(g, e.v);
    if (g.has_edge(e))
        throw GraphError("edge " + e.to_string() + " already present");
    GraphBuilder b{ g.order() };
    copy_edges(g, b);
    b.add_edge(e.u, e.v);
    return std::move(b).build(g.label());
}

auto induced_subgraph(const Graph & g, VertexSet s) -> Remapped
{
    if (! s.is_subset_of(g.vertices()))
        throw GraphError("vertex set " + s.to_string() + " not contained in graph");
    std::vector<Vertex> remap(g.order(), -1);
    int next = 0;
    for (auto v : s)
        remap[v] = next++;
    GraphBuilder b{ next };
    for (auto u : s)
        for (auto v : g.row(u) & s)
            if (v > u)
                b.add_edge(remap[u], remap[v]);
    return { std::move(b).build(g.label()), std::move(remap) };
}

auto delete_vertex(const Graph & g, Vertex v) -> Remapped
{
    check_vertex(g, v);
    return induced_subgraph(g, g.vertices().without(v));
}

auto subdivide_edge(const Graph & g, const Edge & e, int t) -> Graph
{
    require_edge(g, e);
    if (t < 1)
        throw GraphError("subdivision count must be at least 1");
    if (g.order() + t > max_vertices)
        throw GraphError("subdivided graph would exceed " + std::to_string(max_vertices) + " vertices");
    int n = g.order();
    GraphBuilder b{ n + t };
    copy_edges(g, b);
    b.remove_edge(e.u, e.v);
    Vertex prev = e.u;
    for (int i = 0; i < t; ++i) {
        b.add_edge(prev, n + i);
        prev = n + i;
    }
    b.add_edge(prev, e.v);
    return std::move(b).build(g.label());
}

auto private_neighbors(const Graph & g, Vertex x, VertexSet X) -> VertexSet
{
    check_vertex(g, x);
    if (! X.contains(x))
        throw GraphError("vertex " + std::to_string(x) + " is not in " + X.to_string());
    VertexSet out;
    // y must lie in N[x]; then N[y] & X has to be exactly {x}
    for (auto y : g.closed_row(x))
        if ((g.closed_row(y) & X) == VertexSet::singleton(x))
            out.insert(y);
    return out;
}

auto components_within(const Graph & g, VertexSet within) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (! left.empty()) {
        VertexSet comp = VertexSet::singleton(left.first());
        VertexSet frontier = comp;
        while (! frontier.empty()) {
            VertexSet grown;
            for (auto v : frontier)
                grown |= g.row(v);
            grown &= within;
            frontier = grown - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

auto components(const Graph & g) -> std::vector<VertexSet>
{
    return components_within(g, g.vertices());
}

auto is_connected(const Graph & g) -> bool
{
    return components(g).size() <= 1;
}

auto add_isolated_vertex(const Graph & g) -> Graph
{
    GraphBuilder b{ g.order() + 1 };
    copy_edges(g, b);
    return std::move(b).build(g.label());
}

}
