#ifndef DOMLAB_SOLVER_HPP
#define DOMLAB_SOLVER_HPP

#include <domlab/graph.hpp>
#include <domlab/properties.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace domlab {

/**
 * A domination number: a finite count, or undefined when the graph has no
 * dominating P-set at all (only possible for C and T). Undefined compares
 * unequal to everything and every ordering comparison against it is false.
 */
class Gamma
{
    public:
        static constexpr auto undefined() -> Gamma { return Gamma{}; }
        static constexpr auto of(int value) -> Gamma { return Gamma{ value }; }

        constexpr auto defined() const -> bool { return _value >= 0; }
        /// Throws if undefined.
        auto value() const -> int;
        auto to_string() const -> std::string;

        friend constexpr auto operator==(Gamma a, Gamma b) -> bool { return a.defined() && b.defined() && a._value == b._value; }
        friend constexpr auto operator<(Gamma a, Gamma b) -> bool { return a.defined() && b.defined() && a._value < b._value; }
        friend constexpr auto operator>(Gamma a, Gamma b) -> bool { return b < a; }
        friend constexpr auto operator<=(Gamma a, Gamma b) -> bool { return a.defined() && b.defined() && a._value <= b._value; }
        friend constexpr auto operator>=(Gamma a, Gamma b) -> bool { return b <= a; }

        /// Exact representation equality; undefined matches undefined.
        constexpr auto same_as(Gamma o) const -> bool { return _value == o._value; }

        /// Finite + constant; undefined stays undefined.
        constexpr auto plus(int d) const -> Gamma { return defined() ? Gamma{ _value + d } : Gamma{}; }

    private:
        constexpr Gamma() = default;
        constexpr explicit Gamma(int v) : _value(v) {}

        int _value = -1;
};

/// Raised when an operation needs a defined domination number and has none.
class UndefinedGamma : public std::domain_error
{
    public:
        using std::domain_error::domain_error;
};

struct GammaResult
{
    Gamma value = Gamma::undefined();
    /// Lexicographically first minimum dominating P-set; present iff defined.
    std::optional<VertexSet> witness;
    PropertyDescriptor property;
    std::string graph_label;
};

/// Union of the closed neighborhoods of s covers every vertex.
auto is_dominating(const Graph & g, VertexSet s) -> bool;

/**
 * The branch-and-prune engine behind every exact query. It searches
 * dominating P-sets of at most a given size that contain a forced set and
 * avoid a forbidden set, branching on the closed neighborhood of an
 * undominated vertex. Every qualifying set of minimum size is reached by
 * exactly one branch.
 */
class DominationSearch
{
    public:
        DominationSearch(const Graph & g, const PropertyDescriptor & p);

        /// Called with each complete solution; return true to stop.
        using Visitor = std::function<bool (VertexSet)>;

        /// Is there a dominating P-set S with forced <= S, S & forbidden = {}, |S| <= budget?
        auto feasible(int budget, VertexSet forced = {}, VertexSet forbidden = {}) const -> bool;

        /// Visits every solution found at this budget; see class comment for coverage.
        auto visit(int budget, VertexSet forced, VertexSet forbidden, const Visitor & visitor) const -> bool;

        /// Smallest feasible budget, or undefined.
        auto minimum(VertexSet forced = {}, VertexSet forbidden = {}) const -> Gamma;

        auto nodes_explored() const -> long { return _nodes; }

    private:
        const Graph & _g;
        PropertyDescriptor _p;
        VertexSet _all;
        mutable long _nodes = 0;

        auto branch(VertexSet chosen, VertexSet dominated, VertexSet forbidden, int budget, const Visitor & visitor) const -> bool;
        auto complete(VertexSet chosen, VertexSet available, int budget, const Visitor & visitor) const -> bool;
};

/// Minimum dominating P-set with lexicographically first witness.
auto gamma(const Graph & g, const PropertyDescriptor & p) -> GammaResult;

/// Value only; skips witness selection.
auto gamma_number(const Graph & g, const PropertyDescriptor & p) -> Gamma;

/**
 * Independent brute force: every subset in increasing size, lexicographic
 * within a size, checked against the plain definitions. No pruning.
 * Throws std::invalid_argument above oracle_max_vertices.
 */
inline constexpr int oracle_max_vertices = 20;
auto gamma_oracle(const Graph & g, const PropertyDescriptor & p) -> GammaResult;
auto all_minimum_sets_oracle(const Graph & g, const PropertyDescriptor & p) -> std::vector<VertexSet>;

/// Every gamma_P-set, in lexicographic order. Throws UndefinedGamma.
auto all_minimum_sets(const Graph & g, const PropertyDescriptor & p) -> std::vector<VertexSet>;

/// Does v lie in at least one gamma_P-set? Throws UndefinedGamma.
auto in_some_minimum_set(const Graph & g, const PropertyDescriptor & p, Vertex v) -> bool;

/**
 * Vertices whose deletion strictly lowers gamma_P. A deletion that makes
 * gamma undefined is not a decrease. Throws UndefinedGamma if gamma_P(g)
 * itself is undefined.
 */
auto v_minus_set(const Graph & g, const PropertyDescriptor & p) -> VertexSet;

}

#endif
