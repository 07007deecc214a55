#ifndef DOMLAB_GENERATORS_HPP
#define DOMLAB_GENERATORS_HPP

#include <domlab/graph.hpp>

#include <vector>

namespace domlab {

/// P_n: 0 - 1 - ... - (n-1).
auto path(int n) -> Graph;

/// C_n on 0..n-1 in cyclic order, n >= 3.
auto cycle(int n) -> Graph;

/// K_{1,p}: center 0, leaves 1..p.
auto star(int p) -> Graph;

auto complete(int n) -> Graph;

/// Parts are numbered consecutively: part 0 is 0..parts[0]-1, and so on.
auto complete_multipartite(const std::vector<int> & parts) -> Graph;

/**
 * Three stars K_{1,p} whose centers 0, 1, 2 form a triangle. The leaves of
 * center c are 3 + c*p .. 3 + c*p + p - 1.
 */
auto three_stars_triangle(int p) -> Graph;

/// Disjoint union; vertices of b are shifted by a.order().
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

/// n isolated vertices.
auto edgeless(int n) -> Graph;

}

#endif
