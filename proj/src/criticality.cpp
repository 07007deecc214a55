#include <domlab/criticality.hpp>

namespace domlab {

auto subdivision_conditions(const Graph & g, const Edge & e, VertexSet m) -> SubdivisionConditions
{
    auto u = e.u, v = e.v;
    auto pair = VertexSet::of({ u, v });
    SubdivisionConditions c;
    c.i = ! m.contains(u) && ! m.contains(v);
    if (m.contains(u)) {
        auto pn_u = private_neighbors(g, u, m);
        c.ii = pn_u.contains(v) && ! pn_u.is_subset_of(pair);
    }
    if (m.contains(v)) {
        auto pn_v = private_neighbors(g, v, m);
        c.iii = pn_v.contains(u) && ! pn_v.is_subset_of(pair);
        // pn[u,M] = {y : N[y] & M = {u}}, empty whenever u is not in M
        VertexSet pn_u_literal;
        for (Vertex y = 0; y < g.order(); ++y)
            if ((g.closed_row(y) & m) == VertexSet::singleton(u))
                pn_u_literal.insert(y);
        c.iii_literal = pn_v.contains(u) && ! pn_u_literal.is_subset_of(pair);
    }
    return c;
}

auto check_subdivision_conditions(const Graph & g, const Edge & e, const PropertyDescriptor & p, VertexSet m) -> SubdivisionConditions
{
    if (! g.has_edge(e))
        throw GraphError("edge " + e.to_string() + " not present");
    auto k = gamma_number(g, p);
    if (! m.is_subset_of(g.vertices()) || ! k.defined() || m.size() != k.value()
            || ! is_dominating(g, m) || ! holds_induced(p, g, m))
        throw std::invalid_argument(m.to_string() + " is not a minimum dominating " + p.name() + "-set");
    return subdivision_conditions(g, e, m);
}

auto classify_edge(const Graph & g, const Edge & e, const PropertyDescriptor & p, bool with_conditions) -> EdgeClassification
{
    if (! g.has_edge(e))
        throw GraphError("edge " + e.to_string() + " not present");
    EdgeClassification c;
    c.edge = e;
    c.gamma_g = gamma_number(g, p);
    c.gamma_subdivided = gamma_number(subdivide_edge(g, e, 1), p);
    c.gamma_deleted = gamma_number(delete_edge(g, e), p);
    c.in_scope = c.gamma_g.defined() && c.gamma_subdivided.defined() && c.gamma_deleted.defined();
    if (! c.in_scope)
        return c;
    c.s_plus = c.gamma_subdivided > c.gamma_g;
    c.s_minus = c.gamma_subdivided < c.gamma_g;
    c.er_minus = c.gamma_deleted < c.gamma_g;
    if (with_conditions)
        for (auto m : all_minimum_sets(g, p))
            c.condition_report.push_back({ m, subdivision_conditions(g, e, m) });
    return c;
}

auto is_s_plus_critical_iff_conditions(const Graph & g, const Edge & e, const PropertyDescriptor & p, ConditionReading reading) -> IffSides
{
    if (p.id() != PropertyId::Any)
        throw ScopeError("the S+ characterization is stated for plain domination (I) only");
    auto c = classify_edge(g, e, p, true);
    IffSides sides{ c.s_plus, true };
    for (auto & record : c.condition_report)
        if (! record.conditions.any(reading)) {
            sides.rhs = false;
            break;
        }
    return sides;
}

namespace {
    auto require_induced_scope(const PropertyDescriptor & p) -> void
    {
        if (! p.flags().induced_hereditary || ! p.flags().closed_union_k1)
            throw ScopeError("property " + p.name() + " is not induced-hereditary and closed under union with K1");
    }
}

auto s_minus_equiv_er_minus(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> MinusFlags
{
    require_induced_scope(p);
    auto c = classify_edge(g, e, p, false);
    return { c.s_minus, c.er_minus };
}

auto class_membership(const Graph & g, const PropertyDescriptor & p) -> ClassMembership
{
    auto edges = g.edges();
    if (edges.empty())
        throw GraphError("class membership needs at least one edge");
    ClassMembership out{ true, true };
    for (auto & e : edges) {
        auto c = classify_edge(g, e, p, false);
        out.cs_minus = out.cs_minus && c.s_minus;
        out.cer_minus = out.cer_minus && c.er_minus;
    }
    return out;
}

}
