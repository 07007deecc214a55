#ifndef DOMLAB_SCAN_HPP
#define DOMLAB_SCAN_HPP

#include <domlab/graph.hpp>
#include <domlab/properties.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace domlab {

/// A corpus graph that satisfies an exploratory predicate.
struct ScanMatch
{
    std::size_t index = 0;
    std::string graph6;
    std::string label;
    std::string details;
};

/**
 * Exploratory predicates for hunting structure in the S^i classes:
 *   in-S1, in-S2, in-S3  msd_P(G) equals 1, 2, 3
 *   msd-gt-3             some graph with msd_P(G) > 3
 *   s2-cut-vertex        in S^2 and has a cut vertex
 *   cs-minus, cer-minus  every edge S- / ER- critical
 * Edgeless graphs never match.
 */
auto scan_assertion_ids() -> std::vector<std::string>;

/// Matching graphs in corpus order. Throws std::invalid_argument for an unknown id.
auto scan_counterexamples(std::string_view assertion_id, const PropertyDescriptor & p,
        const std::vector<Graph> & corpus, int jobs = 1) -> std::vector<ScanMatch>;

}

#endif
