#include <domlab/solver.hpp>

#include <algorithm>

namespace domlab {

auto Gamma::value() const -> int
{
    if (! defined())
        throw UndefinedGamma("domination number is undefined");
    return _value;
}

auto Gamma::to_string() const -> std::string
{
    return defined() ? std::to_string(_value) : "undefined";
}

auto is_dominating(const Graph & g, VertexSet s) -> bool
{
    VertexSet dominated;
    for (auto v : s)
        dominated |= g.closed_row(v);
    return g.vertices().is_subset_of(dominated);
}

DominationSearch::DominationSearch(const Graph & g, const PropertyDescriptor & p) :
    _g(g),
    _p(p),
    _all(g.vertices())
{
}

auto DominationSearch::feasible(int budget, VertexSet forced, VertexSet forbidden) const -> bool
{
    return visit(budget, forced, forbidden, [] (VertexSet) { return true; });
}

auto DominationSearch::visit(int budget, VertexSet forced, VertexSet forbidden, const Visitor & visitor) const -> bool
{
    if (forced.intersects(forbidden) || forced.size() > budget)
        return false;
    if (_p.flags().induced_hereditary && ! holds_induced(_p, _g, forced))
        return false;
    VertexSet dominated;
    for (auto v : forced)
        dominated |= _g.closed_row(v);
    return branch(forced, dominated, forbidden, budget - forced.size(), visitor);
}

auto DominationSearch::minimum(VertexSet forced, VertexSet forbidden) const -> Gamma
{
    for (int k = forced.size(); k <= _g.order(); ++k)
        if (feasible(k, forced, forbidden))
            return Gamma::of(k);
    return Gamma::undefined();
}

auto DominationSearch::branch(VertexSet chosen, VertexSet dominated, VertexSet forbidden, int budget, const Visitor & visitor) const -> bool
{
    ++_nodes;
    VertexSet undominated = _all - dominated;

    if (undominated.empty()) {
        if (holds_induced(_p, _g, chosen))
            return visitor(chosen);
        // an induced-hereditary property cannot be repaired by adding vertices
        if (_p.flags().induced_hereditary || budget == 0)
            return false;
        return complete(chosen, _all - chosen - forbidden, budget, visitor);
    }

    if (budget == 0)
        return false;

    // pick the undominated vertex with the fewest usable dominators, and
    // bound the remaining budget by the best single-vertex coverage
    VertexSet usable = _all - forbidden - chosen;
    Vertex pivot = -1;
    int pivot_choices = max_vertices + 1;
    for (auto w : undominated) {
        int choices = (_g.closed_row(w) & usable).size();
        if (choices == 0)
            return false;
        if (choices < pivot_choices) {
            pivot = w;
            pivot_choices = choices;
        }
    }

    int best_cover = 0;
    for (auto c : usable)
        best_cover = std::max(best_cover, (_g.closed_row(c) & undominated).size());
    if (best_cover * budget < undominated.size())
        return false;

    VertexSet excluded = forbidden;
    for (auto c : _g.closed_row(pivot) & usable) {
        auto next = chosen.with(c);
        if (! _p.flags().induced_hereditary || holds_induced(_p, _g, next))
            if (branch(next, dominated | _g.closed_row(c), excluded, budget - 1, visitor))
                return true;
        excluded.insert(c);
    }
    return false;
}

auto DominationSearch::complete(VertexSet chosen, VertexSet available, int budget, const Visitor & visitor) const -> bool
{
    // chosen already dominates; add vertices in increasing order, each
    // superset generated once
    for (auto c : available) {
        ++_nodes;
        auto next = chosen.with(c);
        if (holds_induced(_p, _g, next)) {
            if (visitor(next))
                return true;
        }
        else if (budget > 1) {
            VertexSet later{ available.bits() & ~((VertexSet::Word{ 2 } << c) - 1) };
            if (complete(next, later, budget - 1, visitor))
                return true;
        }
    }
    return false;
}

namespace {
    /// Quick refusals that the search would otherwise prove by exhaustion.
    auto trivially_undefined(const Graph & g, const PropertyDescriptor & p) -> bool
    {
        switch (p.id()) {
            case PropertyId::Connected:
                return g.order() == 0 || ! is_connected(g);
            case PropertyId::NoIsolated:
                return g.order() == 0 || g.min_degree() == 0;
            default:
                return false;
        }
    }

    auto lex_first_witness(const DominationSearch & search, int k, int n) -> VertexSet
    {
        VertexSet forced, forbidden;
        for (Vertex v = 0; v < n && forced.size() < k; ++v) {
            if (search.feasible(k, forced.with(v), forbidden))
                forced.insert(v);
            else
                forbidden.insert(v);
        }
        return forced;
    }

    auto require_defined(Gamma gm, const Graph & g, const PropertyDescriptor & p) -> int
    {
        if (! gm.defined())
            throw UndefinedGamma("gamma_" + p.name() + " undefined for graph '" + g.label() + "'");
        return gm.value();
    }
}

auto gamma_number(const Graph & g, const PropertyDescriptor & p) -> Gamma
{
    if (trivially_undefined(g, p))
        return Gamma::undefined();
    return DominationSearch{ g, p }.minimum();
}

auto gamma(const Graph & g, const PropertyDescriptor & p) -> GammaResult
{
    GammaResult result{ Gamma::undefined(), std::nullopt, p, g.label() };
    if (trivially_undefined(g, p))
        return result;
    DominationSearch search{ g, p };
    result.value = search.minimum();
    if (result.value.defined())
        result.witness = lex_first_witness(search, result.value.value(), g.order());
    return result;
}

auto all_minimum_sets(const Graph & g, const PropertyDescriptor & p) -> std::vector<VertexSet>
{
    auto k = require_defined(gamma_number(g, p), g, p);
    std::vector<VertexSet> out;
    DominationSearch{ g, p }.visit(k, {}, {}, [&] (VertexSet s) {
        out.push_back(s);
        return false;
    });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

auto in_some_minimum_set(const Graph & g, const PropertyDescriptor & p, Vertex v) -> bool
{
    check_vertex(g, v);
    auto k = require_defined(gamma_number(g, p), g, p);
    return DominationSearch{ g, p }.feasible(k, VertexSet::singleton(v));
}

auto v_minus_set(const Graph & g, const PropertyDescriptor & p) -> VertexSet
{
    auto whole = gamma_number(g, p);
    require_defined(whole, g, p);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (gamma_number(delete_vertex(g, v).graph, p) < whole)
            out.insert(v);
    return out;
}

}
