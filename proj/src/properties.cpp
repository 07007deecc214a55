#include <domlab/properties.hpp>
#include <domlab/generators.hpp>
#include <domlab/io.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <unordered_set>
#include <stdexcept>

namespace domlab {

namespace {
    auto flags_for(PropertyId id) -> PropertyFlags
    {
        switch (id) {
            case PropertyId::Any:
            case PropertyId::Edgeless:
            case PropertyId::Forest:
            case PropertyId::MaxDegree:
                return { .hereditary = true, .induced_hereditary = true, .closed_union_k1 = true, .nondegenerate = true };
            case PropertyId::UnionOfCliques:
                return { .hereditary = false, .induced_hereditary = true, .closed_union_k1 = true, .nondegenerate = true };
            case PropertyId::Connected:
            case PropertyId::NoIsolated:
                return {};
        }
        throw std::logic_error("unknown property id");
    }
}

PropertyDescriptor::PropertyDescriptor(PropertyId id, int k) :
    _id(id),
    _k(id == PropertyId::MaxDegree ? k : 0),
    _flags(flags_for(id))
{
    if (id == PropertyId::MaxDegree && k < 0)
        throw std::invalid_argument("degree bound k must be nonnegative");
}

auto PropertyDescriptor::name() const -> std::string
{
    switch (_id) {
        case PropertyId::Any:            return "I";
        case PropertyId::Edgeless:       return "O";
        case PropertyId::Connected:      return "C";
        case PropertyId::NoIsolated:     return "T";
        case PropertyId::Forest:         return "F";
        case PropertyId::UnionOfCliques: return "UK";
        case PropertyId::MaxDegree:      return "D:" + std::to_string(_k);
    }
    throw std::logic_error("unknown property id");
}

auto parse_property(std::string_view text) -> PropertyDescriptor
{
    if (text == "I") return PropertyDescriptor{ PropertyId::Any };
    if (text == "O") return PropertyDescriptor{ PropertyId::Edgeless };
    if (text == "C") return PropertyDescriptor{ PropertyId::Connected };
    if (text == "T") return PropertyDescriptor{ PropertyId::NoIsolated };
    if (text == "F") return PropertyDescriptor{ PropertyId::Forest };
    if (text == "UK") return PropertyDescriptor{ PropertyId::UnionOfCliques };
    if (text == "D") return PropertyDescriptor{ PropertyId::MaxDegree, 1 };
    if (text.starts_with("D:")) {
        auto digits = text.substr(2);
        int k = -1;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty() || k < 0)
            throw std::invalid_argument("bad degree bound in property '" + std::string{ text } + "'");
        return PropertyDescriptor{ PropertyId::MaxDegree, k };
    }
    throw std::invalid_argument("unknown property '" + std::string{ text } + "' (expected I, O, C, T, F, UK or D:<k>)");
}

auto parse_property_list(std::string_view text) -> std::vector<PropertyDescriptor>
{
    std::vector<PropertyDescriptor> out;
    while (true) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        if (! item.empty())
            out.push_back(parse_property(item));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument("empty property list");
    return out;
}

auto standard_properties() -> std::vector<PropertyDescriptor>
{
    return {
        PropertyDescriptor{ PropertyId::Any },
        PropertyDescriptor{ PropertyId::Edgeless },
        PropertyDescriptor{ PropertyId::Connected },
        PropertyDescriptor{ PropertyId::NoIsolated },
        PropertyDescriptor{ PropertyId::Forest },
        PropertyDescriptor{ PropertyId::UnionOfCliques },
        PropertyDescriptor{ PropertyId::MaxDegree, 1 },
        PropertyDescriptor{ PropertyId::MaxDegree, 2 }
    };
}

auto holds(const PropertyDescriptor & p, const Graph & g) -> bool
{
    switch (p.id()) {
        case PropertyId::Any:
            return true;
        case PropertyId::Edgeless:
            return g.size() == 0;
        case PropertyId::Connected:
            return g.order() >= 1 && is_connected(g);
        case PropertyId::NoIsolated:
            return g.order() >= 1 && g.min_degree() >= 1;
        case PropertyId::Forest:
            return g.size() == g.order() - static_cast<int>(components(g).size());
        case PropertyId::UnionOfCliques:
            for (auto comp : components(g)) {
                int edges_inside = 0;
                for (auto v : comp)
                    edges_inside += (g.row(v) & comp).size();
                if (edges_inside != comp.size() * (comp.size() - 1))
                    return false;
            }
            return true;
        case PropertyId::MaxDegree:
            return g.max_degree() <= p.k();
    }
    throw std::logic_error("unknown property id");
}

namespace {
    auto connected_within(const Graph & g, VertexSet s) -> bool
    {
        if (s.empty())
            return false;
        VertexSet reached = VertexSet::singleton(s.first());
        VertexSet frontier = reached;
        while (! frontier.empty()) {
            VertexSet grown;
            for (auto v : frontier)
                grown |= g.row(v);
            frontier = (grown & s) - reached;
            reached |= frontier;
        }
        return reached == s;
    }
}

auto holds_induced(const PropertyDescriptor & p, const Graph & g, VertexSet s) -> bool
{
    switch (p.id()) {
        case PropertyId::Any:
            return true;
        case PropertyId::Edgeless:
            for (auto v : s)
                if (g.row(v).intersects(s))
                    return false;
            return true;
        case PropertyId::Connected:
            return connected_within(g, s);
        case PropertyId::NoIsolated:
            if (s.empty())
                return false;
            for (auto v : s)
                if (! g.row(v).intersects(s))
                    return false;
            return true;
        case PropertyId::Forest: {
            int twice_edges = 0;
            for (auto v : s)
                twice_edges += (g.row(v) & s).size();
            if (twice_edges / 2 >= s.size() && ! s.empty())
                return false;
            return twice_edges / 2 == s.size() - static_cast<int>(components_within(g, s).size());
        }
        case PropertyId::UnionOfCliques:
            for (auto v : s) {
                auto closed = g.closed_row(v) & s;
                for (auto u : closed)
                    if ((g.closed_row(u) & s) != closed)
                        return false;
            }
            return true;
        case PropertyId::MaxDegree:
            for (auto v : s)
                if ((g.row(v) & s).size() > p.k())
                    return false;
            return true;
    }
    throw std::logic_error("unknown property id");
}

auto AuditReport::finding(std::string_view flag) const -> const FlagFinding &
{
    for (auto & f : findings)
        if (f.flag == flag)
            return f;
    throw std::out_of_range("no finding for flag '" + std::string{ flag } + "'");
}

auto AuditReport::violations() const -> std::vector<FlagFinding>
{
    std::vector<FlagFinding> out;
    for (auto & f : findings)
        if (f.claimed && f.refuted)
            out.push_back(f);
    return out;
}

namespace {
    auto refute(FlagFinding & f, const Graph & g, const Graph & witness) -> void
    {
        if (f.refuted)
            return;
        f.refuted = true;
        f.graph6 = to_graph6(g);
        f.witness_graph6 = to_graph6(witness);
    }

    // Labeled graphs on at most 8 vertices packed as (n << 32) | upper-triangle bits.
    constexpr int audit_max_order = 8;

    auto pack(const Graph & g) -> std::uint64_t
    {
        std::uint64_t code = 0;
        int k = 0;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g.has_edge(i, j))
                    code |= std::uint64_t{ 1 } << k;
        return (static_cast<std::uint64_t>(g.order()) << 32) | code;
    }

    auto unpack(std::uint64_t packed) -> Graph
    {
        int n = static_cast<int>(packed >> 32);
        GraphBuilder b{ n };
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if ((packed >> k) & 1)
                    b.add_edge(i, j);
        return std::move(b).build();
    }

    /**
     * Walks everything reachable from g by single edge and vertex deletions,
     * which is every subgraph of g. Graphs already cleared on an earlier walk
     * are not revisited.
     */
    auto first_failing_subgraph(const PropertyDescriptor & p, const Graph & g, std::unordered_set<std::uint64_t> & cleared) -> std::optional<Graph>
    {
        std::vector<std::uint64_t> stack{ pack(g) };
        while (! stack.empty()) {
            auto code = stack.back();
            stack.pop_back();
            if (! cleared.insert(code).second)
                continue;
            auto h = unpack(code);
            if (! holds(p, h))
                return h;
            for (auto e : h.edges())
                stack.push_back(pack(delete_edge(h, e)));
            for (Vertex v = 0; v < h.order(); ++v)
                stack.push_back(pack(delete_vertex(h, v).graph));
        }
        return std::nullopt;
    }
}

auto audit_flags(const PropertyDescriptor & p, const std::vector<Graph> & corpus) -> AuditReport
{
    AuditReport report{ p, 0, {} };
    FlagFinding hereditary{ "hereditary", p.flags().hereditary };
    FlagFinding induced{ "induced_hereditary", p.flags().induced_hereditary };
    FlagFinding union_k1{ "closed_union_k1", p.flags().closed_union_k1 };
    FlagFinding nondegenerate{ "nondegenerate", p.flags().nondegenerate };

    std::unordered_set<std::uint64_t> cleared;
    int max_order = 0;
    for (auto & g : corpus) {
        ++report.graphs_checked;
        max_order = std::max(max_order, g.order());
        if (! holds(p, g))
            continue;

        if (g.order() >= max_vertices)
            throw std::invalid_argument("audit corpus graph too large");
        auto plus_k1 = add_isolated_vertex(g);
        if (! holds(p, plus_k1))
            refute(union_k1, g, plus_k1);

        if (g.order() > audit_max_order)
            throw std::invalid_argument("audit corpus graphs must have at most " + std::to_string(audit_max_order) + " vertices");
        for (VertexSet::Word bits = 0; bits < (VertexSet::Word{ 1 } << g.order()); ++bits) {
            auto sub = induced_subgraph(g, VertexSet{ bits }).graph;
            if (! holds(p, sub)) {
                refute(induced, g, sub);
                break;
            }
        }
        if (! hereditary.refuted)
            if (auto bad = first_failing_subgraph(p, g, cleared))
                refute(hereditary, g, *bad);
    }

    for (int n = 1; n <= max_order; ++n) {
        auto e = edgeless(n);
        if (! holds(p, e))
            refute(nondegenerate, e, e);
    }

    report.findings = { hereditary, induced, union_k1, nondegenerate };
    return report;
}

}
