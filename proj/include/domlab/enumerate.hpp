#ifndef DOMLAB_ENUMERATE_HPP
#define DOMLAB_ENUMERATE_HPP

#include <domlab/graph.hpp>

#include <vector>

namespace domlab {

/// Largest order the brute-force canonical labeling handles in reasonable time.
inline constexpr int max_enumeration_order = 7;

/**
 * One labeled representative of every isomorphism class on n vertices
 * (0 < n <= 7). The representative is the relabeling whose graph6
 * adjacency bits, read as a binary number, are largest; the list is sorted
 * by edge count, then by those bits. Deterministic across runs.
 */
auto all_graphs(int n) -> std::vector<Graph>;

/// As all_graphs, keeping the connected ones.
auto connected_graphs(int n) -> std::vector<Graph>;

/// Canonical representative of g's isomorphism class (n <= 7).
auto canonical_form(const Graph & g) -> Graph;

}

#endif
