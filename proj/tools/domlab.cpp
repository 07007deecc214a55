#include <domlab/corpus.hpp>
#include <domlab/criticality.hpp>
#include <domlab/io.hpp>
#include <domlab/multisubdivision.hpp>
#include <domlab/properties.hpp>
#include <domlab/report.hpp>
#include <domlab/scan.hpp>
#include <domlab/solver.hpp>
#include <domlab/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace domlab;

namespace {
    constexpr int exit_violation = 1;
    constexpr int exit_usage = 2;

    struct Args
    {
        std::string property = "I";
        std::string properties = "I,O,F,UK,D:1";
        std::string input;
        std::string suites = "all";
        std::string corpus = "bundled:n7c";
        std::string out;
        std::string assertion;
        std::string write_dir;
        std::string print_name;
        int jobs = 0;
        int cap = default_msd_cap;
        bool oracle = false;
        bool literal = false;
        bool fail_fast = false;
        bool no_timing = false;
        bool skip_bad = false;
        bool list = false;
    };

    auto load(const std::string & spec, bool skip_bad) -> std::vector<Graph>
    {
        std::vector<std::string> warnings;
        auto graphs = load_corpus(spec, skip_bad, &warnings);
        for (auto & w : warnings)
            std::cerr << "domlab: warning: " << w << '\n';
        return graphs;
    }

    auto jobs_or_default(int jobs) -> int
    {
        if (jobs > 0)
            return jobs;
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto graph_name(const Graph & g) -> std::string
    {
        return g.label().empty() ? to_graph6(g) : g.label();
    }

    auto run_gamma(const Args & a) -> int
    {
        auto p = parse_property(a.property);
        for (auto & g : load(a.input, a.skip_bad)) {
            auto r = a.oracle ? gamma_oracle(g, p) : gamma(g, p);
            r.graph_label = graph_name(g);
            std::cout << to_json(r).dump() << '\n';
        }
        return 0;
    }

    auto run_classify(const Args & a) -> int
    {
        auto p = parse_property(a.property);
        for (auto & g : load(a.input, a.skip_bad))
            for (auto & e : g.edges()) {
                auto line = to_json(classify_edge(g, e, p, true));
                line["graph"] = graph_name(g);
                line["property"] = p.name();
                if (p.id() == PropertyId::Any) {
                    auto sides = is_s_plus_critical_iff_conditions(g, e, p,
                            a.literal ? ConditionReading::Literal : ConditionReading::Symmetric);
                    line["conditions_all_hold"] = sides.rhs;
                }
                std::cout << line.dump() << '\n';
            }
        return 0;
    }

    auto run_msd(const Args & a) -> int
    {
        auto p = parse_property(a.property);
        for (auto & g : load(a.input, a.skip_bad))
            for (auto & e : g.edges()) {
                auto line = to_json(profile(g, e, p, a.cap));
                line["graph"] = graph_name(g);
                line["property"] = p.name();
                std::cout << line.dump() << '\n';
            }
        return 0;
    }

    auto run_sclass(const Args & a) -> int
    {
        auto p = parse_property(a.property);
        int code = 0;
        for (auto & g : load(a.input, a.skip_bad)) {
            json line = { { "graph", graph_name(g) }, { "property", p.name() } };
            if (g.size() == 0) {
                line["class"] = nullptr;
                line["reason"] = "edgeless";
            }
            else {
                auto r = s_class(g, p);
                if (r.sclass)
                    line["class"] = r.sclass->class_index;
                else {
                    line["class"] = nullptr;
                    line["counterexample"] = r.counterexample;
                    code = exit_violation;
                }
            }
            std::cout << line.dump() << '\n';
        }
        return code;
    }

    auto run_verify(const Args & a) -> int
    {
        validate_registry();
        auto suites = parse_suite_list(a.suites);
        auto props = parse_property_list(a.properties);
        auto corpus = load(a.corpus, a.skip_bad);

        std::ofstream file;
        std::ostream * sink = &std::cout;
        if (! a.out.empty() && a.out != "-") {
            file.open(a.out);
            if (! file)
                throw CorpusError("cannot open report file '" + a.out + "'");
            sink = &file;
        }

        SuiteOptions options;
        options.jobs = jobs_or_default(a.jobs);
        options.fail_fast = a.fail_fast;
        options.reading = a.literal ? ConditionReading::Literal : ConditionReading::Symmetric;

        std::vector<SuiteReport> reports;
        for (auto & s : suites)
            for (auto & p : props) {
                auto r = run_suite(s, p, corpus, options);
                emit_report(r, *sink, ! a.no_timing);
                std::cerr << "domlab: " << r.suite_id << " [" << p.name() << "] " << to_string(r.status)
                          << " (" << r.graphs_checked << " graphs, " << r.violations.size() << " violations)\n";
                reports.push_back(std::move(r));
                if (a.fail_fast && ! reports.back().passed())
                    return exit_violation;
            }
        return exit_code(reports);
    }

    auto run_scan(const Args & a) -> int
    {
        auto p = parse_property(a.property);
        auto corpus = load(a.corpus, a.skip_bad);
        for (auto & m : scan_counterexamples(a.assertion, p, corpus, jobs_or_default(a.jobs)))
            std::cout << json{ { "assertion", a.assertion }, { "property", p.name() }, { "index", m.index },
                { "graph6", m.graph6 }, { "details", m.details } }.dump() << '\n';
        return 0;
    }

    auto run_audit(const Args & a) -> int
    {
        auto p = parse_property(a.property);
        auto report = audit_flags(p, load(a.corpus, a.skip_bad));
        json findings = json::array();
        for (auto & f : report.findings)
            findings.push_back({ { "flag", f.flag }, { "claimed", f.claimed }, { "refuted", f.refuted },
                { "graph6", f.graph6 }, { "witness", f.witness_graph6 } });
        std::cout << json{ { "property", p.name() }, { "graphs_checked", report.graphs_checked },
            { "findings", findings } }.dump() << '\n';
        return report.violations().empty() ? 0 : exit_violation;
    }

    auto run_corpus(const Args & a) -> int
    {
        if (! a.write_dir.empty())
            write_bundled_corpora(a.write_dir);
        if (a.list)
            for (auto & name : bundled_corpus_names())
                std::cout << name << '\n';
        if (! a.print_name.empty())
            for (auto & g : generate_bundled(a.print_name))
                std::cout << to_graph6(g) << '\n';
        return 0;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{ "domlab: exact domination numbers for hereditary graph properties, subdivision criticality, and theorem verification" };
    app.require_subcommand(1);
    Args a;

    auto add_property = [&] (CLI::App * cmd) {
        cmd->add_option("--property,-p", a.property, "Property: I, O, C, T, F, UK, D:<k>")->capture_default_str();
    };
    auto add_input = [&] (CLI::App * cmd) {
        cmd->add_option("--input,-i", a.input, "g6:<file>, edges:<file>, bundled:<name>, or a graph6 file ('-' = stdin)")->required();
        cmd->add_flag("--skip-bad", a.skip_bad, "Warn about malformed records instead of failing");
    };

    auto gamma_cmd = app.add_subcommand("gamma", "Minimum dominating P-set of each input graph");
    add_property(gamma_cmd);
    add_input(gamma_cmd);
    gamma_cmd->add_flag("--oracle", a.oracle, "Use the brute-force reference (n <= 20)");

    auto classify_cmd = app.add_subcommand("classify", "Single-subdivision and deletion criticality of every edge");
    add_property(classify_cmd);
    add_input(classify_cmd);
    classify_cmd->add_flag("--literal", a.literal, "Read condition (iii) word for word");

    auto msd_cmd = app.add_subcommand("msd", "Subdivision profiles and multisubdivision numbers per edge");
    add_property(msd_cmd);
    add_input(msd_cmd);
    msd_cmd->add_option("--cap", a.cap, "Largest subdivision count")->capture_default_str()->check(CLI::Range(1, 60));

    auto sclass_cmd = app.add_subcommand("sclass", "S^1/S^2/S^3 class of each input graph");
    add_property(sclass_cmd);
    add_input(sclass_cmd);

    auto verify_cmd = app.add_subcommand("verify", "Run theorem suites over a corpus");
    verify_cmd->add_option("--suites", a.suites, "'all' or comma separated suite ids")->capture_default_str();
    verify_cmd->add_option("--properties", a.properties, "Comma separated properties")->capture_default_str();
    verify_cmd->add_option("--corpus", a.corpus, "Corpus source")->capture_default_str();
    verify_cmd->add_option("--jobs,-j", a.jobs, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    verify_cmd->add_option("--out,-o", a.out, "Report file (JSON lines); default stdout");
    verify_cmd->add_flag("--fail-fast", a.fail_fast, "Stop at the first violation");
    verify_cmd->add_flag("--no-timing", a.no_timing, "Omit elapsed_ms from reports");
    verify_cmd->add_flag("--literal", a.literal, "Read condition (iii) word for word");
    verify_cmd->add_flag("--skip-bad", a.skip_bad, "Warn about malformed records instead of failing");

    auto scan_cmd = app.add_subcommand("scan", "List corpus graphs matching an exploratory predicate");
    scan_cmd->add_option("--assertion,-a", a.assertion, "Predicate id")->required()
        ->check(CLI::IsMember(scan_assertion_ids()));
    add_property(scan_cmd);
    scan_cmd->add_option("--corpus", a.corpus, "Corpus source")->capture_default_str();
    scan_cmd->add_option("--jobs,-j", a.jobs, "Worker threads (0 = hardware concurrency)");
    scan_cmd->add_flag("--skip-bad", a.skip_bad, "Warn about malformed records instead of failing");

    auto audit_cmd = app.add_subcommand("audit", "Check a property's flags by exhaustive subgraph enumeration");
    add_property(audit_cmd);
    audit_cmd->add_option("--corpus", a.corpus, "Corpus source (graphs with at most 8 vertices)")->capture_default_str();
    audit_cmd->add_flag("--skip-bad", a.skip_bad, "Warn about malformed records instead of failing");

    auto corpus_cmd = app.add_subcommand("corpus", "Generate or list the bundled corpora");
    corpus_cmd->add_option("--write", a.write_dir, "Write every bundled corpus as <dir>/<name>.g6");
    corpus_cmd->add_option("--print", a.print_name, "Print one bundled corpus as graph6");
    corpus_cmd->add_flag("--list", a.list, "List bundled corpus names");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*gamma_cmd) return run_gamma(a);
        if (*classify_cmd) return run_classify(a);
        if (*msd_cmd) return run_msd(a);
        if (*sclass_cmd) return run_sclass(a);
        if (*verify_cmd) return run_verify(a);
        if (*scan_cmd) return run_scan(a);
        if (*audit_cmd) return run_audit(a);
        if (*corpus_cmd) return run_corpus(a);
    }
    catch (const std::exception & e) {
        std::cerr << "domlab: error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
