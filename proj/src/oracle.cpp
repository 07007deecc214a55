#include <domlab/solver.hpp>

#include <numeric>

// Brute-force reference. Deliberately shares nothing with DominationSearch:
// domination is checked vertex by vertex through has_edge, and the property
// through an explicit induced subgraph and holds().

namespace domlab {

namespace {
    auto plain_dominating(const Graph & g, const std::vector<Vertex> & s) -> bool
    {
        for (Vertex y = 0; y < g.order(); ++y) {
            bool covered = false;
            for (auto x : s)
                if (x == y || g.has_edge(x, y)) {
                    covered = true;
                    break;
                }
            if (! covered)
                return false;
        }
        return true;
    }

    auto plain_has_property(const Graph & g, const PropertyDescriptor & p, const std::vector<Vertex> & s) -> bool
    {
        VertexSet bits;
        for (auto v : s)
            bits.insert(v);
        return holds(p, induced_subgraph(g, bits).graph);
    }

    /// Calls f on each k-subset of 0..n-1 in lexicographic order until f returns true.
    template <typename F>
    auto for_each_subset(int n, int k, F && f) -> bool
    {
        std::vector<Vertex> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (f(idx))
                return true;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                return false;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    auto check_cap(const Graph & g) -> void
    {
        if (g.order() > oracle_max_vertices)
            throw std::invalid_argument("oracle limited to " + std::to_string(oracle_max_vertices) + " vertices");
    }

    auto to_set(const std::vector<Vertex> & s) -> VertexSet
    {
        VertexSet out;
        for (auto v : s)
            out.insert(v);
        return out;
    }
}

auto gamma_oracle(const Graph & g, const PropertyDescriptor & p) -> GammaResult
{
    check_cap(g);
    GammaResult result{ Gamma::undefined(), std::nullopt, p, g.label() };
    for (int k = 0; k <= g.order(); ++k) {
        bool found = for_each_subset(g.order(), k, [&] (const std::vector<Vertex> & s) {
            if (plain_dominating(g, s) && plain_has_property(g, p, s)) {
                result.value = Gamma::of(k);
                result.witness = to_set(s);
                return true;
            }
            return false;
        });
        if (found)
            break;
    }
    return result;
}

auto all_minimum_sets_oracle(const Graph & g, const PropertyDescriptor & p) -> std::vector<VertexSet>
{
    auto first = gamma_oracle(g, p);
    if (! first.value.defined())
        throw UndefinedGamma("gamma_" + p.name() + " undefined");
    std::vector<VertexSet> out;
    for_each_subset(g.order(), first.value.value(), [&] (const std::vector<Vertex> & s) {
        if (plain_dominating(g, s) && plain_has_property(g, p, s))
            out.push_back(to_set(s));
        return false;
    });
    return out;
}

}
