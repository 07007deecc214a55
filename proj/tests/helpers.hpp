#ifndef DOMLAB_TESTS_HELPERS_HPP
#define DOMLAB_TESTS_HELPERS_HPP

#include <domlab/enumerate.hpp>
#include <domlab/graph.hpp>

#include <random>
#include <vector>

namespace domlab::test {

inline auto make(int n, std::vector<std::pair<Vertex, Vertex>> edges) -> Graph
{
    return Graph{ n, edges };
}

/// Every graph on 1..max_n vertices, one per isomorphism class.
inline auto small_graphs(int max_n) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto gs = all_graphs(n);
        out.insert(out.end(), gs.begin(), gs.end());
    }
    return out;
}

/// G(n, p) with a fixed-seed engine owned by the caller.
inline auto random_graph(std::mt19937 & rng, int n, double p) -> Graph
{
    std::bernoulli_distribution coin{ p };
    GraphBuilder b{ n };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                b.add_edge(i, j);
    return std::move(b).build();
}

}

#endif
