#include <domlab/suites.hpp>
#include <domlab/io.hpp>
#include <domlab/multisubdivision.hpp>
#include <domlab/solver.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace domlab {

auto to_string(SuiteStatus s) -> std::string
{
    switch (s) {
        case SuiteStatus::Pass:    return "pass";
        case SuiteStatus::Fail:    return "fail";
        case SuiteStatus::Skipped: return "skipped";
    }
    return "?";
}

auto Scope::check(const PropertyDescriptor & p) const -> std::string
{
    auto & f = p.flags();
    if (only_any && p.id() != PropertyId::Any)
        return "stated for plain domination (I) only";
    if (hereditary && ! f.hereditary)
        return p.name() + " is not hereditary";
    if (induced_hereditary && ! f.induced_hereditary)
        return p.name() + " is not induced-hereditary";
    if (closed_union_k1 && ! f.closed_union_k1)
        return p.name() + " is not closed under union with K1";
    if (nondegenerate && ! f.nondegenerate)
        return p.name() + " is not nondegenerate";
    return {};
}

namespace {
    constexpr Scope any_property{};
    constexpr Scope hereditary_k1{ .hereditary = true, .closed_union_k1 = true };
    constexpr Scope induced_k1{ .induced_hereditary = true, .closed_union_k1 = true };
    constexpr Scope nondegenerate_k1{ .closed_union_k1 = true, .nondegenerate = true };
    constexpr Scope plain_only{ .only_any = true };

    struct Outcome
    {
        long instances = 0;
        std::vector<Violation> violations;
    };

    struct Context
    {
        const Graph & g;
        const PropertyDescriptor & p;
        const SuiteOptions & options;
        Outcome & out;
        std::string graph6;

        auto fail(std::string location, std::string details) -> void
        {
            out.violations.push_back({ graph6, std::move(location), std::move(details) });
        }
    };

    auto at(const Edge & e) -> std::string { return "edge " + e.to_string(); }
    auto at(Vertex v) -> std::string { return "vertex " + std::to_string(v); }

    auto values(std::initializer_list<std::pair<const char *, Gamma>> items) -> std::string
    {
        std::string out;
        for (auto & [name, value] : items) {
            if (! out.empty())
                out += ' ';
            out += std::string{ name } + "=" + value.to_string();
        }
        return out;
    }

    using Check = void (*)(Context &);

    auto check_t1_bound(Context & c) -> void
    {
        auto base = gamma_number(c.g, c.p);
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto sub = gamma_number(subdivide_edge(c.g, e, 1), c.p);
            if (! (sub <= base.plus(1)))
                c.fail(at(e), "gamma(G_e) > gamma(G)+1: " + values({ { "G", base }, { "G_e", sub } }));
        }
    }

    auto check_t1_necessity(Context & c) -> void
    {
        if (c.g.size() == 0)
            return;
        auto base = gamma_number(c.g, c.p);
        auto sets = all_minimum_sets(c.g, c.p);
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto sub = gamma_number(subdivide_edge(c.g, e, 1), c.p);
            bool all_meet = true;
            VertexSet failing;
            for (auto m : sets)
                if (! subdivision_conditions(c.g, e, m).any(c.options.reading)) {
                    all_meet = false;
                    failing = m;
                    break;
                }
            if (sub > base) {
                if (! (sub == base.plus(1)))
                    c.fail(at(e), "S+ critical but " + values({ { "G", base }, { "G_e", sub } }));
                if (! all_meet)
                    c.fail(at(e), "S+ critical but gamma-set " + failing.to_string() + " meets none of (i)-(iii)");
            }
            else if (all_meet) {
                auto minus_e = delete_edge(c.g, e);
                bool found = DominationSearch{ minus_e, c.p }.feasible(base.value(), VertexSet::of({ e.u, e.v }));
                if (! found)
                    c.fail(at(e), "not S+ critical, every gamma-set meets (i)-(iii), yet no dominating set of G-e of size <= "
                            + base.to_string() + " contains both ends");
            }
        }
    }

    auto check_cor2(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto sides = is_s_plus_critical_iff_conditions(c.g, e, c.p, c.options.reading);
            if (sides.lhs != sides.rhs)
                c.fail(at(e), std::string{ "S+ critical = " } + (sides.lhs ? "true" : "false")
                        + " but all gamma-sets meet (i)-(iii) = " + (sides.rhs ? "true" : "false"));
        }
    }

    auto check_t3(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto cls = classify_edge(c.g, e, c.p, false);
            if (cls.s_minus != cls.er_minus)
                c.fail(at(e), "S- = " + std::string{ cls.s_minus ? "true" : "false" } + ", ER- = "
                        + (cls.er_minus ? "true" : "false") + ": "
                        + values({ { "G", cls.gamma_g }, { "G_e", cls.gamma_subdivided }, { "G-e", cls.gamma_deleted } }));
            if (c.p.id() == PropertyId::Any && cls.er_minus)
                c.fail(at(e), "ER- critical edge under plain domination: "
                        + values({ { "G", cls.gamma_g }, { "G-e", cls.gamma_deleted } }));
        }
    }

    auto check_cor4(Context & c) -> void
    {
        if (c.g.size() == 0)
            return;
        ++c.out.instances;
        auto m = class_membership(c.g, c.p);
        if (m.cs_minus != m.cer_minus)
            c.fail("", std::string{ "CS- = " } + (m.cs_minus ? "true" : "false") + ", CER- = " + (m.cer_minus ? "true" : "false"));
    }

    auto check_t5_sandwich(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto deleted = gamma_number(delete_edge(c.g, e), c.p);
            auto three = gamma_number(subdivide_edge(c.g, e, 3), c.p);
            if (! (deleted <= three && three <= deleted.plus(1)))
                c.fail(at(e), "sandwich broken: " + values({ { "G-e", deleted }, { "G_e3", three } }));
        }
    }

    auto check_t5_a1a2(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto m = check_multi1(c.g, e, c.p);
            if (m.a1 != m.a2)
                c.fail(at(e), std::string{ "A1 = " } + (m.a1 ? "true" : "false") + ", A2 = " + (m.a2 ? "true" : "false")
                        + ": " + values({ { "G", m.gamma_g }, { "G-e", m.gamma_deleted }, { "G_e3", m.gamma_three } }));
        }
    }

    auto check_t5_a1a3(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto g_val = gamma_number(c.g, c.p);
            auto deleted = gamma_number(delete_edge(c.g, e), c.p);
            auto three = gamma_number(subdivide_edge(c.g, e, 3), c.p);
            bool a1 = deleted == three;
            bool a3 = deleted == g_val.plus(1);
            if (a1 != a3)
                c.fail(at(e), std::string{ "A1 = " } + (a1 ? "true" : "false") + ", A3 = " + (a3 ? "true" : "false")
                        + ": " + values({ { "G", g_val }, { "G-e", deleted }, { "G_e3", three } }));
        }
    }

    auto profile_text(const MsdProfile & prof) -> std::string
    {
        std::string out = "values [";
        for (std::size_t t = 0; t < prof.values.size(); ++t)
            out += (t ? "," : "") + prof.values[t].to_string();
        return out + "] msd=" + prof.msd.to_string() + " msd+=" + prof.msd_plus.to_string() + " msd-=" + prof.msd_minus.to_string();
    }

    auto check_t6_iff(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto g_val = gamma_number(c.g, c.p);
            auto deleted = gamma_number(delete_edge(c.g, e), c.p);
            auto three = gamma_number(subdivide_edge(c.g, e, 3), c.p);
            if ((g_val == three) != (g_val == deleted.plus(1)))
                c.fail(at(e), "iff broken: " + values({ { "G", g_val }, { "G-e", deleted }, { "G_e3", three } }));
        }
    }

    auto check_t6_chain(Context & c) -> void
    {
        auto g_val = gamma_number(c.g, c.p);
        for (auto & e : c.g.edges()) {
            auto deleted = gamma_number(delete_edge(c.g, e), c.p);
            if (! (g_val == deleted.plus(1)))
                continue;
            ++c.out.instances;
            auto prof = profile(c.g, e, c.p, 6);
            if (! chain_holds(prof))
                c.fail(at(e), "chain broken: " + profile_text(prof));
        }
    }

    auto check_t6_msd3(Context & c) -> void
    {
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto prof = profile(c.g, e, c.p, 3);
            if (! prof.msd.is_finite())
                c.fail(at(e), "msd(e) > 3: " + profile_text(prof));
        }
    }

    /// Translates a set of h = G - v back into ids of G.
    auto lift(VertexSet s, const std::vector<Vertex> & remap) -> VertexSet
    {
        VertexSet out;
        for (Vertex old = 0; old < static_cast<Vertex>(remap.size()); ++old)
            if (remap[old] >= 0 && s.contains(remap[old]))
                out.insert(old);
        return out;
    }

    auto check_ta(Context & c) -> void
    {
        auto whole = gamma_number(c.g, c.p);
        for (Vertex v = 0; v < c.g.order(); ++v) {
            ++c.out.instances;
            auto removed = delete_vertex(c.g, v);
            auto reduced = gamma_number(removed.graph, c.p);
            if (! in_some_minimum_set(c.g, c.p, v) && ! (reduced == whole))
                c.fail(at(v), "in no gamma-set yet " + values({ { "G", whole }, { "G-v", reduced } }));
            if (! (reduced < whole))
                continue;
            if (! (reduced == whole.plus(-1)))
                c.fail(at(v), "drop larger than one: " + values({ { "G", whole }, { "G-v", reduced } }));
            for (auto m : all_minimum_sets(removed.graph, c.p)) {
                auto lifted = lift(m, removed.remap).with(v);
                bool is_min = lifted.size() == whole.value() && is_dominating(c.g, lifted) && holds_induced(c.p, c.g, lifted);
                if (! is_min)
                    c.fail(at(v), "M + v = " + lifted.to_string() + " is not a gamma-set of G");
                else if (private_neighbors(c.g, v, lifted) != VertexSet::singleton(v))
                    c.fail(at(v), "pn[v, M + v] = " + private_neighbors(c.g, v, lifted).to_string() + " for M + v = " + lifted.to_string());
            }
        }
    }

    auto check_tb(Context & c) -> void
    {
        auto whole = gamma_number(c.g, c.p);
        for (auto & e : c.g.edges()) {
            ++c.out.instances;
            auto deleted = gamma_number(delete_edge(c.g, e), c.p);
            if (whole < deleted && ! (whole == deleted.plus(-1)))
                c.fail(at(e), "increase larger than one: " + values({ { "G", whole }, { "G-e", deleted } }));
            bool drop_by_one = whole == deleted.plus(-1);
            bool pair = deletion_pair_condition(c.g, e, c.p);
            if (drop_by_one != pair)
                c.fail(at(e), std::string{ "gamma(G) = gamma(G-e)-1 is " } + (drop_by_one ? "true" : "false")
                        + " but the end-vertex condition is " + (pair ? "true" : "false"));
        }
    }

    auto check_tc(Context & c) -> void
    {
        auto whole = gamma_number(c.g, c.p);
        for (auto & e : c.g.edges()) {
            auto minus_e = delete_edge(c.g, e);
            auto deleted = gamma_number(minus_e, c.p);
            if (! (whole > deleted))
                continue;
            ++c.out.instances;
            auto x = e.u, y = e.v;
            for (auto m : all_minimum_sets(minus_e, c.p)) {
                if (holds_induced(c.p, c.g, m))
                    c.fail(at(e), "(i) gamma-set " + m.to_string() + " of G-e is a P-set of G");
                if (! m.contains(x) || ! m.contains(y))
                    c.fail(at(e), "(ii) gamma-set " + m.to_string() + " of G-e misses an end");
            }
            auto one_end = [&] (Vertex end, Vertex other, const char * item_iii, const char * item_iv) {
                auto removed = delete_vertex(c.g, end);
                auto reduced = gamma_number(removed.graph, c.p);
                if (! (reduced >= deleted))
                    c.fail(at(e), std::string{ item_iii } + " " + values({ { "G-end", reduced }, { "G-e", deleted } }) + " at end " + std::to_string(end));
                if (reduced == deleted && in_some_minimum_set(removed.graph, c.p, removed.remap[other]))
                    c.fail(at(e), std::string{ item_iv } + " " + std::to_string(other) + " lies in a gamma-set of G-" + std::to_string(end));
            };
            one_end(x, y, "(iii)", "(iv)");
            one_end(y, x, "(iii)", "(v)");
        }
    }

    auto check_oracle(Context & c) -> void
    {
        ++c.out.instances;
        auto fast = gamma(c.g, c.p);
        auto slow = gamma_oracle(c.g, c.p);
        if (! fast.value.same_as(slow.value) || fast.witness != slow.witness)
            c.fail("", "solver " + fast.value.to_string() + " " + (fast.witness ? fast.witness->to_string() : "null")
                    + " vs oracle " + slow.value.to_string() + " " + (slow.witness ? slow.witness->to_string() : "null"));
    }

    struct Entry
    {
        SuiteInfo info;
        Check check;
    };

    auto entries() -> const std::vector<Entry> &
    {
        static const std::vector<Entry> table = {
            { { "T1-bound", "gamma(G_e) <= gamma(G) + 1 for every edge", hereditary_k1 }, check_t1_bound },
            { { "T1-necessity", "S+ critical edges raise gamma by exactly one and every gamma-set meets (i)-(iii); otherwise a small set of G-e holds both ends", hereditary_k1 }, check_t1_necessity },
            { { "COR2-iff", "S+ critical iff every gamma-set meets (i)-(iii)", plain_only }, check_cor2 },
            { { "T3-equiv", "S- critical iff ER- critical (and no ER- edges under I)", induced_k1 }, check_t3 },
            { { "COR4-classes", "the classes CS- and CER- coincide", induced_k1 }, check_cor4 },
            { { "T5-sandwich", "gamma(G-e) <= gamma(G_e3) <= gamma(G-e) + 1", induced_k1 }, check_t5_sandwich },
            { { "T5-A1A2", "gamma(G-e) = gamma(G_e3) iff the end-vertex condition holds", induced_k1 }, check_t5_a1a2 },
            { { "T5-A1A3", "gamma(G-e) = gamma(G_e3) iff gamma(G-e) = gamma(G) + 1", hereditary_k1 }, check_t5_a1a3 },
            { { "T6-iff", "gamma(G) = gamma(G_e3) iff gamma(G) = gamma(G-e) + 1", hereditary_k1 }, check_t6_iff },
            { { "T6-chain", "seven-term chain whenever gamma(G) = gamma(G-e) + 1", hereditary_k1 }, check_t6_chain },
            { { "T6-msd3", "msd(e) <= 3 for every edge", hereditary_k1 }, check_t6_msd3 },
            { { "TA-vertex", "vertex removal lowers gamma by at most one, with a private-neighbor witness", nondegenerate_k1 }, check_ta },
            { { "TB-edgeadd", "adding an edge lowers gamma by at most one, exactly when the end-vertex condition holds", hereditary_k1 }, check_tb },
            { { "TC-plus1-lemma", "structure of minimum sets when deleting an edge lowers gamma", hereditary_k1 }, check_tc },
            { { "FLAG-audit", "claimed property flags survive exhaustive subgraph checks", any_property }, nullptr },
            { { "ORACLE-equiv", "branch-and-prune solver agrees with brute force, witness included", any_property }, check_oracle },
        };
        return table;
    }
}

auto suite_registry() -> const std::vector<SuiteInfo> &
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (auto & e : entries())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

auto required_suite_ids() -> std::vector<std::string>
{
    return { "T1-bound", "T1-necessity", "COR2-iff", "T3-equiv", "COR4-classes", "T5-sandwich", "T5-A1A2",
        "T5-A1A3", "T6-iff", "T6-chain", "T6-msd3", "TA-vertex", "TB-edgeadd", "TC-plus1-lemma", "FLAG-audit",
        "ORACLE-equiv" };
}

auto validate_registry() -> void
{
    auto required = required_suite_ids();
    auto & registry = suite_registry();
    if (registry.size() != required.size())
        throw std::logic_error("suite registry has " + std::to_string(registry.size()) + " entries, expected " + std::to_string(required.size()));
    for (std::size_t i = 0; i < required.size(); ++i)
        if (registry[i].id != required[i])
            throw std::logic_error("suite registry entry " + std::to_string(i) + " is '" + registry[i].id + "', expected '" + required[i] + "'");
}

auto find_suite(std::string_view id) -> const SuiteInfo &
{
    for (auto & info : suite_registry())
        if (info.id == id)
            return info;
    throw std::invalid_argument("unknown suite '" + std::string{ id } + "'");
}

auto parse_suite_list(std::string_view text) -> std::vector<std::string>
{
    if (text == "all")
        return required_suite_ids();
    std::vector<std::string> out;
    while (true) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        if (! item.empty())
            out.push_back(find_suite(item).id);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument("empty suite list");
    return out;
}

auto parallel_for(std::size_t count, int jobs, const std::function<bool (std::size_t)> & f) -> void
{
    std::atomic<std::size_t> next{ 0 };
    std::atomic<std::size_t> stop_at{ count };
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto worker = [&] {
        while (true) {
            auto i = next.fetch_add(1);
            if (i >= count || i > stop_at.load())
                return;
            try {
                if (f(i)) {
                    auto seen = stop_at.load();
                    while (i < seen && ! stop_at.compare_exchange_weak(seen, i))
                        ;
                }
            }
            catch (...) {
                std::lock_guard guard{ failure_lock };
                if (! failure)
                    failure = std::current_exception();
                stop_at.store(0);
                return;
            }
        }
    };

    int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (threads <= 1)
        worker();
    else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
}

auto run_suite(std::string_view suite_id, const PropertyDescriptor & p, const std::vector<Graph> & corpus, const SuiteOptions & options) -> SuiteReport
{
    auto started = std::chrono::steady_clock::now();
    auto & info = find_suite(suite_id);
    SuiteReport report{ .suite_id = info.id, .property = p };

    auto finish = [&] {
        report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        return report;
    };

    if (auto reason = info.scope.check(p); ! reason.empty()) {
        report.status = SuiteStatus::Skipped;
        report.reason = reason;
        return finish();
    }

    if (info.id == "FLAG-audit") {
        auto audit = audit_flags(p, corpus);
        report.graphs_checked = audit.graphs_checked;
        report.instances_checked = static_cast<long>(audit.findings.size());
        for (auto & v : audit.violations())
            report.violations.push_back({ v.graph6, "", v.flag + " refuted by subgraph " + v.witness_graph6 });
        report.status = report.violations.empty() ? SuiteStatus::Pass : SuiteStatus::Fail;
        return finish();
    }

    Check check = nullptr;
    for (auto & e : entries())
        if (e.info.id == info.id)
            check = e.check;

    std::vector<Outcome> outcomes(corpus.size());
    parallel_for(corpus.size(), options.jobs, [&] (std::size_t i) {
        Context ctx{ corpus[i], p, options, outcomes[i], to_graph6(corpus[i]) };
        check(ctx);
        return options.fail_fast && ! outcomes[i].violations.empty();
    });

    std::size_t checked = corpus.size();
    if (options.fail_fast)
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (! outcomes[i].violations.empty()) {
                checked = i + 1;
                break;
            }

    report.graphs_checked = static_cast<int>(checked);
    for (std::size_t i = 0; i < checked; ++i) {
        report.instances_checked += outcomes[i].instances;
        for (auto & v : outcomes[i].violations)
            report.violations.push_back(std::move(v));
    }
    report.status = report.violations.empty() ? SuiteStatus::Pass : SuiteStatus::Fail;
    return finish();
}

}
