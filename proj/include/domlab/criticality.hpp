#ifndef DOMLAB_CRITICALITY_HPP
#define DOMLAB_CRITICALITY_HPP

#include <domlab/graph.hpp>
#include <domlab/properties.hpp>
#include <domlab/solver.hpp>

#include <stdexcept>
#include <vector>

namespace domlab {

/// A theorem-scoped operation was called with a property outside its hypotheses.
class ScopeError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// How the third single-subdivision condition is read.
enum class ConditionReading
{
    /// v in M, u in pn[v,M], pn[v,M] not inside {u,v}: the mirror image of (ii).
    Symmetric,
    /// v in M, u in pn[v,M], pn[u,M] not inside {u,v}, taken word for word.
    Literal
};

/**
 * The three placements of an edge uv relative to a minimum set M under which
 * a single subdivision can raise the domination number:
 *   (i)   neither end in M;
 *   (ii)  u in M, v a private neighbor of u, and u has a private neighbor
 *         outside {u, v};
 *   (iii) the same with u and v exchanged.
 */
struct SubdivisionConditions
{
    bool i = false;
    bool ii = false;
    bool iii = false;
    /// (iii) evaluated literally; with u outside M its last clause is vacuous-false.
    bool iii_literal = false;

    auto any(ConditionReading reading = ConditionReading::Symmetric) const -> bool
    {
        return i || ii || (reading == ConditionReading::Symmetric ? iii : iii_literal);
    }
};

struct ConditionRecord
{
    VertexSet minimum_set;
    SubdivisionConditions conditions;
};

struct EdgeClassification
{
    Edge edge;
    Gamma gamma_g = Gamma::undefined();
    Gamma gamma_subdivided = Gamma::undefined();
    Gamma gamma_deleted = Gamma::undefined();
    /// gamma(G_e) > gamma(G)
    bool s_plus = false;
    /// gamma(G_e) < gamma(G)
    bool s_minus = false;
    /// gamma(G - e) < gamma(G)
    bool er_minus = false;
    /// False when any of the three values is undefined; flags are then all false.
    bool in_scope = true;
    /// One record per gamma-set of G (empty when out of scope or not requested).
    std::vector<ConditionRecord> condition_report;
};

/// Throws GraphError if e is absent from g.
auto classify_edge(const Graph & g, const Edge & e, const PropertyDescriptor & p, bool with_conditions = true) -> EdgeClassification;

/**
 * Evaluates (i)-(iii) for one minimum set. Throws std::invalid_argument if m
 * is not a gamma_P-set of g.
 */
auto check_subdivision_conditions(const Graph & g, const Edge & e, const PropertyDescriptor & p, VertexSet m) -> SubdivisionConditions;

/// Unchecked evaluation of the conditions; m need not be minimum.
auto subdivision_conditions(const Graph & g, const Edge & e, VertexSet m) -> SubdivisionConditions;

struct IffSides
{
    bool lhs = false;
    bool rhs = false;
};

/**
 * Plain domination only: lhs is the S+ flag, rhs is "every gamma-set meets
 * one of the conditions". Throws ScopeError for any other property.
 */
auto is_s_plus_critical_iff_conditions(const Graph & g, const Edge & e, const PropertyDescriptor & p,
        ConditionReading reading = ConditionReading::Symmetric) -> IffSides;

struct MinusFlags
{
    bool s_minus = false;
    bool er_minus = false;
};

/// Requires an induced-hereditary property closed under union with K1.
auto s_minus_equiv_er_minus(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> MinusFlags;

struct ClassMembership
{
    bool cs_minus = false;
    bool cer_minus = false;
};

/// Every edge S- critical / every edge ER- critical. Throws GraphError on edgeless g.
auto class_membership(const Graph & g, const PropertyDescriptor & p) -> ClassMembership;

}

#endif
