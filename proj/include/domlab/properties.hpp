#ifndef DOMLAB_PROPERTIES_HPP
#define DOMLAB_PROPERTIES_HPP

#include <domlab/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace domlab {

enum class PropertyId
{
    Any,           ///< I: every graph
    Edgeless,      ///< O: totally disconnected
    Connected,     ///< C
    NoIsolated,    ///< T: min degree >= 1
    Forest,        ///< F
    UnionOfCliques,///< UK: every component complete
    MaxDegree      ///< Dk: max degree <= k
};

struct PropertyFlags
{
    bool hereditary = false;
    bool induced_hereditary = false;
    bool closed_union_k1 = false;
    bool nondegenerate = false;

    friend auto operator==(const PropertyFlags &, const PropertyFlags &) -> bool = default;
};

/**
 * One entry of the property catalog. Flags are fixed by the id and are the
 * gate for which theorems apply; audit_flags() cross-checks them
 * empirically but never overrides them.
 */
class PropertyDescriptor
{
    public:
        /// Throws std::invalid_argument for MaxDegree with k < 0.
        explicit PropertyDescriptor(PropertyId id, int k = 1);

        auto id() const -> PropertyId { return _id; }
        /// Only meaningful for MaxDegree.
        auto k() const -> int { return _k; }
        auto flags() const -> const PropertyFlags & { return _flags; }

        /// CLI spelling: I, O, C, T, F, UK, D:<k>.
        auto name() const -> std::string;

        friend auto operator==(const PropertyDescriptor & a, const PropertyDescriptor & b) -> bool
        {
            return a._id == b._id && (a._id != PropertyId::MaxDegree || a._k == b._k);
        }

    private:
        PropertyId _id;
        int _k = 0;
        PropertyFlags _flags;
};

/// Parses the CLI spelling; "D" alone means D:1.
auto parse_property(std::string_view text) -> PropertyDescriptor;

/// Comma separated list of property names.
auto parse_property_list(std::string_view text) -> std::vector<PropertyDescriptor>;

/// The seven catalog entries, with D:1 and D:2 for the degree family.
auto standard_properties() -> std::vector<PropertyDescriptor>;

/**
 * Does g have the property? On the empty graph I, O, F, UK and Dk hold and
 * C and T do not.
 */
auto holds(const PropertyDescriptor & p, const Graph & g) -> bool;

/// holds(p, <S>) evaluated directly on the adjacency words of g.
auto holds_induced(const PropertyDescriptor & p, const Graph & g, VertexSet s) -> bool;

/// Outcome of auditing one flag. A counterexample refutes the flag.
struct FlagFinding
{
    std::string flag;
    bool claimed = false;
    bool refuted = false;
    /// graph6 of the corpus graph and of the offending derived graph.
    std::string graph6{};
    std::string witness_graph6{};

    /// Claimed flags must survive; unclaimed ones should be refuted.
    auto consistent() const -> bool { return claimed != refuted; }
};

struct AuditReport
{
    PropertyDescriptor property;
    int graphs_checked = 0;
    std::vector<FlagFinding> findings;

    auto finding(std::string_view flag) const -> const FlagFinding &;
    /// Claimed-true flags that the corpus refuted.
    auto violations() const -> std::vector<FlagFinding>;
};

/**
 * Exhaustively tests the defining implication of every flag on the corpus:
 * hereditary over every edge subset of every induced subgraph,
 * induced_hereditary over every induced subgraph, closed_union_k1 by adding
 * an isolated vertex, nondegenerate on the edgeless graph of each order
 * 1..max order seen. The first counterexample per flag is kept.
 */
auto audit_flags(const PropertyDescriptor & p, const std::vector<Graph> & corpus) -> AuditReport;

}

#endif
