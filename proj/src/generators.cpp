#include <domlab/generators.hpp>

#include <numeric>
#include <string>
#include <utility>

namespace domlab {

namespace {
    auto require_positive(int value, const char * what) -> void
    {
        if (value < 1)
            throw GraphError(std::string{ what } + " must be at least 1, got " + std::to_string(value));
    }
}

auto path(int n) -> Graph
{
    require_positive(n, "path order");
    GraphBuilder b{ n };
    for (int i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return std::move(b).build("P" + std::to_string(n));
}

auto cycle(int n) -> Graph
{
    if (n < 3)
        throw GraphError("cycle order must be at least 3, got " + std::to_string(n));
    GraphBuilder b{ n };
    for (int i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return std::move(b).build("C" + std::to_string(n));
}

auto star(int p) -> Graph
{
    require_positive(p, "star size");
    GraphBuilder b{ p + 1 };
    for (int i = 1; i <= p; ++i)
        b.add_edge(0, i);
    return std::move(b).build("K1," + std::to_string(p));
}

auto complete(int n) -> Graph
{
    require_positive(n, "complete graph order");
    GraphBuilder b{ n };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return std::move(b).build("K" + std::to_string(n));
}

auto complete_multipartite(const std::vector<int> & parts) -> Graph
{
    if (parts.empty())
        throw GraphError("complete multipartite graph needs at least one part");
    std::string label = "K";
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require_positive(parts[i], "part size");
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
        label += (i == 0 ? "" : ",") + std::to_string(parts[i]);
    }
    int n = static_cast<int>(part_of.size());
    GraphBuilder b{ n };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j])
                b.add_edge(i, j);
    return std::move(b).build(label);
}

auto three_stars_triangle(int p) -> Graph
{
    require_positive(p, "star size");
    GraphBuilder b{ 3 + 3 * p };
    b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < p; ++i)
            b.add_edge(c, 3 + c * p + i);
    return std::move(b).build("3K1," + std::to_string(p) + "+K3");
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    GraphBuilder out{ a.order() + b.order() };
    for (auto e : a.edges())
        out.add_edge(e.u, e.v);
    for (auto e : b.edges())
        out.add_edge(e.u + a.order(), e.v + a.order());
    return std::move(out).build();
}

auto edgeless(int n) -> Graph
{
    return Graph{ n, std::to_string(n) + "K1" };
}

}
