#include <domlab/multisubdivision.hpp>

namespace domlab {

auto MsdValue::to_string() const -> std::string
{
    switch (_kind) {
        case Kind::Finite:         return std::to_string(_value);
        case Kind::BeyondCap:      return ">" + std::to_string(_value);
        case Kind::ProvenInfinite: return "inf";
    }
    return "?";
}

auto min(const MsdValue & a, const MsdValue & b) -> MsdValue
{
    if (a._kind != b._kind)
        return a._kind < b._kind ? a : b;
    if (a._kind == MsdValue::Kind::Finite)
        return a._value <= b._value ? a : b;
    // two caps: the smaller cap is the weaker claim
    return a._value <= b._value ? a : b;
}

auto profile(const Graph & g, const Edge & e, const PropertyDescriptor & p, int cap) -> MsdProfile
{
    if (! g.has_edge(e))
        throw GraphError("edge " + e.to_string() + " not present");
    if (cap < 1)
        throw GraphError("subdivision cap must be at least 1");

    MsdProfile prof;
    prof.edge = e;
    prof.cap = cap;
    prof.values.push_back(gamma_number(g, p));
    for (int t = 1; t <= cap; ++t)
        prof.values.push_back(gamma_number(subdivide_edge(g, e, t), p));

    for (auto & v : prof.values)
        prof.in_scope = prof.in_scope && v.defined();

    prof.msd = prof.msd_plus = MsdValue::beyond_cap(cap);
    // plain domination never drops under subdivision
    prof.msd_minus = p.id() == PropertyId::Any ? MsdValue::proven_infinite() : MsdValue::beyond_cap(cap);
    if (! prof.in_scope)
        return prof;

    auto base = prof.values[0];
    for (int t = cap; t >= 1; --t) {
        if (prof.values[t] > base)
            prof.msd_plus = MsdValue::finite(t);
        if (prof.values[t] < base)
            prof.msd_minus = MsdValue::finite(t);
    }
    prof.msd = min(prof.msd_plus, prof.msd_minus);
    return prof;
}

auto msd_graph(const Graph & g, const PropertyDescriptor & p, int cap) -> MsdNumbers
{
    auto edges = g.edges();
    if (edges.empty())
        throw GraphError("multisubdivision number needs at least one edge");
    MsdNumbers out;
    bool first = true;
    for (auto & e : edges) {
        auto prof = profile(g, e, p, cap);
        out.in_scope = out.in_scope && prof.in_scope;
        if (first) {
            out.msd = prof.msd;
            out.msd_plus = prof.msd_plus;
            out.msd_minus = prof.msd_minus;
            first = false;
        }
        else {
            out.msd = min(out.msd, prof.msd);
            out.msd_plus = min(out.msd_plus, prof.msd_plus);
            out.msd_minus = min(out.msd_minus, prof.msd_minus);
        }
    }
    return out;
}

namespace {
    auto require_hereditary_scope(const PropertyDescriptor & p) -> void
    {
        if (! p.flags().hereditary || ! p.flags().closed_union_k1)
            throw ScopeError("property " + p.name() + " is not hereditary and closed under union with K1");
    }

    auto require_induced_scope(const PropertyDescriptor & p) -> void
    {
        if (! p.flags().induced_hereditary || ! p.flags().closed_union_k1)
            throw ScopeError("property " + p.name() + " is not induced-hereditary and closed under union with K1");
    }

    /// u in V-(h) and partner in some gamma-set of h - u.
    auto end_condition(const Graph & h, Vertex u, Vertex partner, const PropertyDescriptor & p) -> bool
    {
        auto whole = gamma_number(h, p);
        auto removed = delete_vertex(h, u);
        auto reduced = gamma_number(removed.graph, p);
        if (! (reduced < whole))
            return false;
        return in_some_minimum_set(removed.graph, p, removed.remap[partner]);
    }
}

auto s_class(const Graph & g, const PropertyDescriptor & p) -> SClassResult
{
    require_hereditary_scope(p);
    auto numbers = msd_graph(g, p, 3);
    SClassResult out;
    if (! numbers.in_scope)
        out.counterexample = "undefined domination number under subdivision";
    else if (! numbers.msd.is_finite())
        out.counterexample = "msd " + numbers.msd.to_string() + " exceeds 3";
    else
        out.sclass = SClass{ numbers.msd.value() };
    return out;
}

auto deletion_pair_condition(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> bool
{
    auto minus_e = delete_edge(g, e);
    return end_condition(minus_e, e.u, e.v, p) || end_condition(minus_e, e.v, e.u, p);
}

auto check_multi1(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> Multi1Check
{
    require_induced_scope(p);
    Multi1Check c;
    c.gamma_g = gamma_number(g, p);
    c.gamma_deleted = gamma_number(delete_edge(g, e), p);
    c.gamma_three = gamma_number(subdivide_edge(g, e, 3), p);
    c.sandwich = c.gamma_deleted <= c.gamma_three && c.gamma_three <= c.gamma_deleted.plus(1);
    c.a1 = c.gamma_deleted == c.gamma_three;
    c.a2 = deletion_pair_condition(g, e, p);
    if (p.flags().hereditary)
        c.a3 = c.gamma_deleted == c.gamma_g.plus(1);
    return c;
}

auto chain_holds(const MsdProfile & prof) -> bool
{
    if (prof.values.size() < 7 || ! prof.in_scope)
        return false;
    auto & v = prof.values;
    return v[0] == v[1].plus(1) && v[0] == v[2].plus(1) && v[0] == v[3] && v[0] == v[4] && v[0] == v[5]
        && v[0] == v[6].plus(-1)
        && prof.msd == MsdValue::finite(1) && prof.msd_minus == MsdValue::finite(1)
        && prof.msd_plus == MsdValue::finite(6);
}

auto check_multi4(const Graph & g, const Edge & e, const PropertyDescriptor & p) -> Multi4Check
{
    require_hereditary_scope(p);
    Multi4Check c;
    c.profile = profile(g, e, p, default_msd_cap);
    auto whole = c.profile.values[0];
    auto deleted = gamma_number(delete_edge(g, e), p);
    bool left = whole == c.profile.values[3];
    bool right = whole == deleted.plus(1);
    c.iff_holds = left == right;
    if (right)
        c.chain = chain_holds(c.profile);
    c.msd_le_3 = c.profile.msd.is_finite() && c.profile.msd.value() <= 3;
    return c;
}

}
