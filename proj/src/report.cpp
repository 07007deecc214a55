#include <domlab/report.hpp>
#include <domlab/io.hpp>

#include <stdexcept>

namespace domlab {

auto to_json(Gamma g) -> json
{
    return g.defined() ? json(g.value()) : json(nullptr);
}

auto to_json(const MsdValue & v) -> json
{
    return v.is_finite() ? json(v.value()) : json(v.to_string());
}

auto to_json(VertexSet s) -> json
{
    return s.members();
}

auto to_json(const Edge & e) -> json
{
    return json::array({ e.u, e.v });
}

auto to_json(const GammaResult & r) -> json
{
    return {
        { "graph", r.graph_label },
        { "property", r.property.name() },
        { "gamma", to_json(r.value) },
        { "witness", r.witness ? to_json(*r.witness) : json(nullptr) }
    };
}

auto to_json(const EdgeClassification & c) -> json
{
    json conditions = json::array();
    for (auto & rec : c.condition_report)
        conditions.push_back({
            { "set", to_json(rec.minimum_set) },
            { "i", rec.conditions.i },
            { "ii", rec.conditions.ii },
            { "iii", rec.conditions.iii },
            { "iii_literal", rec.conditions.iii_literal }
        });
    return {
        { "edge", to_json(c.edge) },
        { "gammas", { { "G", to_json(c.gamma_g) }, { "G_e", to_json(c.gamma_subdivided) }, { "G-e", to_json(c.gamma_deleted) } } },
        { "flags", { { "s_plus", c.s_plus }, { "s_minus", c.s_minus }, { "er_minus", c.er_minus } } },
        { "in_scope", c.in_scope },
        { "conditions", conditions }
    };
}

auto to_json(const MsdProfile & p) -> json
{
    json values = json::array();
    for (auto v : p.values)
        values.push_back(to_json(v));
    return {
        { "edge", to_json(p.edge) },
        { "cap", p.cap },
        { "values", values },
        { "msd", to_json(p.msd) },
        { "msd_plus", to_json(p.msd_plus) },
        { "msd_minus", to_json(p.msd_minus) },
        { "in_scope", p.in_scope }
    };
}

auto to_json(const SuiteReport & r, bool with_timing) -> json
{
    json violations = json::array();
    for (auto & v : r.violations)
        violations.push_back({ { "graph6", v.graph6 }, { "location", v.location }, { "details", v.details } });
    json out = {
        { "suite", r.suite_id },
        { "property", r.property.name() },
        { "status", to_string(r.status) },
        { "graphs_checked", r.graphs_checked },
        { "instances_checked", r.instances_checked },
        { "violations", violations }
    };
    if (r.status == SuiteStatus::Skipped)
        out["reason"] = r.reason;
    if (with_timing)
        out["elapsed_ms"] = r.elapsed.count();
    return out;
}

auto emit_report(const SuiteReport & r, std::ostream & sink, bool with_timing) -> void
{
    sink << to_json(r, with_timing).dump() << '\n';
    sink.flush();
    if (! sink)
        throw std::runtime_error("failed writing report for suite " + r.suite_id);
}

auto exit_code(const std::vector<SuiteReport> & reports) -> int
{
    for (auto & r : reports)
        if (! r.passed())
            return 1;
    return 0;
}

}
