#include "helpers.hpp"

#include <domlab/corpus.hpp>
#include <domlab/generators.hpp>
#include <domlab/io.hpp>
#include <domlab/report.hpp>
#include <domlab/scan.hpp>
#include <domlab/suites.hpp>

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace domlab;

namespace {
    const auto I = PropertyDescriptor{ PropertyId::Any };
    const auto O = PropertyDescriptor{ PropertyId::Edgeless };
    const auto C = PropertyDescriptor{ PropertyId::Connected };
    const auto UK = PropertyDescriptor{ PropertyId::UnionOfCliques };

    auto temp_file(const std::string & name, const std::string & content) -> std::string
    {
        auto path = std::filesystem::temp_directory_path() / ("domlab_test_" + name);
        std::ofstream{ path } << content;
        return path.string();
    }

    auto codes(const std::vector<ScanMatch> & ms) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto & m : ms)
            out.push_back(m.graph6);
        return out;
    }

    auto codes(std::initializer_list<Graph> gs) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto & g : gs)
            out.push_back(to_graph6(g));
        return out;
    }
}

TEST_CASE("corpus ingest: graph6 lines in order")
{
    std::istringstream in{ "@\nA_\nBg\n" };
    CorpusReader reader{ in, CorpusFormat::Graph6 };
    std::vector<Graph> got;
    while (auto e = reader.next())
        got.push_back(e->graph);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == Graph{ 1 });
    CHECK(got[1] == path(2));
    CHECK(got[2] == path(3));
}

TEST_CASE("corpus ingest: malformed line with and without skip-bad")
{
    auto file = temp_file("bad.g6", "A_\nnot graph6!\nBg\n");
    std::vector<std::string> warnings;
    auto entries = read_corpus(file, CorpusFormat::Graph6, true, &warnings);
    CHECK(entries.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("line 2") != std::string::npos);
    CHECK(entries[1].line == 3);

    CHECK_THROWS_AS(read_corpus(file, CorpusFormat::Graph6), CorpusError);
    try {
        read_corpus(file, CorpusFormat::Graph6);
    }
    catch (const CorpusError & e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("corpus ingest: empty file gives an empty run")
{
    auto file = temp_file("empty.g6", "");
    auto corpus = load_corpus("g6:" + file);
    CHECK(corpus.empty());
    auto report = run_suite("T1-bound", I, corpus);
    CHECK(report.graphs_checked == 0);
    CHECK(report.status == SuiteStatus::Pass);
}

TEST_CASE("corpus ingest: edge-list blocks")
{
    auto file = temp_file("blocks.edges", "0 1\n1 2\n\n# second\nn 3\n0 1\n\n\n");
    auto corpus = load_corpus("edges:" + file);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0] == path(3));
    CHECK(corpus[1].order() == 3);
    CHECK(corpus[1].size() == 1);
    CHECK_THROWS_AS(load_corpus("g6:/nonexistent/file.g6"), CorpusError);
    CHECK_THROWS_AS(load_corpus("bundled:nope"), CorpusError);
}

TEST_CASE("registry covers every required suite in order")
{
    CHECK_NOTHROW(validate_registry());
    CHECK(suite_registry().size() == 16);
    CHECK(parse_suite_list("all").size() == 16);
    CHECK(parse_suite_list("T1-bound,T6-msd3") == std::vector<std::string>{ "T1-bound", "T6-msd3" });
    CHECK_THROWS_AS(parse_suite_list("T9"), std::invalid_argument);
    CHECK_THROWS_AS(find_suite("nope"), std::invalid_argument);
}

TEST_CASE("scope gating")
{
    auto r = run_suite("T1-bound", C, { path(3) });
    CHECK(r.status == SuiteStatus::Skipped);
    CHECK(r.reason == "C is not hereditary");
    CHECK(r.graphs_checked == 0);
    CHECK(r.passed());

    CHECK(run_suite("COR2-iff", O, { path(3) }).status == SuiteStatus::Skipped);
    CHECK(run_suite("T5-A1A3", UK, { path(3) }).status == SuiteStatus::Skipped);
    CHECK(run_suite("T5-A1A2", UK, { path(3) }).status == SuiteStatus::Pass);
    CHECK(run_suite("ORACLE-equiv", C, { path(3) }).status == SuiteStatus::Pass);
}

TEST_CASE("suites pass on small corpora")
{
    auto corpus = load_corpus("bundled:n5");
    SuiteOptions options;
    options.jobs = 4;
    for (auto & id : required_suite_ids())
        for (auto & p : standard_properties()) {
            auto r = run_suite(id, p, corpus, options);
            CHECK_MESSAGE(r.passed(), id << " " << p.name() << ": "
                    << (r.violations.empty() ? "" : r.violations[0].graph6 + " " + r.violations[0].details));
        }
}

TEST_CASE("literal reading of (iii) breaks the plain-domination equivalence")
{
    SuiteOptions literal;
    literal.reading = ConditionReading::Literal;
    auto r = run_suite("COR2-iff", I, { path(3) }, literal);
    CHECK(r.status == SuiteStatus::Fail);
    CHECK(run_suite("COR2-iff", I, { path(3) }).status == SuiteStatus::Pass);
}

TEST_CASE("reports are independent of the worker count")
{
    auto corpus = load_corpus("bundled:n6c");
    SuiteOptions literal;
    literal.reading = ConditionReading::Literal;
    literal.jobs = 1;
    auto one = to_json(run_suite("COR2-iff", I, corpus, literal), false).dump();
    literal.jobs = 8;
    auto many = to_json(run_suite("COR2-iff", I, corpus, literal), false).dump();
    CHECK(one == many);
    CHECK(one.find("\"fail\"") != std::string::npos);

    literal.fail_fast = true;
    auto ff1 = run_suite("COR2-iff", I, corpus, literal);
    literal.jobs = 1;
    auto ff2 = run_suite("COR2-iff", I, corpus, literal);
    CHECK(to_json(ff1, false) == to_json(ff2, false));
    CHECK(ff1.graphs_checked < static_cast<int>(corpus.size()));
}

TEST_CASE("parallel_for visits every index and propagates exceptions")
{
    std::vector<std::atomic<int>> hits(100);
    parallel_for(100, 6, [&] (std::size_t i) { ++hits[i]; return false; });
    for (auto & h : hits)
        CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [] (std::size_t i) -> bool {
        if (i == 4)
            throw std::runtime_error("boom");
        return false;
    }), std::runtime_error);
}

TEST_CASE("report emission")
{
    std::ostringstream sink;
    auto pass = run_suite("T1-bound", I, { path(3) });
    emit_report(pass, sink, false);
    auto line = sink.str();
    CHECK(line.back() == '\n');
    auto j = json::parse(line);
    CHECK(j["status"] == "pass");
    CHECK(j["violations"].empty());
    CHECK(j["suite"] == "T1-bound");
    CHECK(j["property"] == "I");
    CHECK(! j.contains("elapsed_ms"));

    SuiteOptions literal;
    literal.reading = ConditionReading::Literal;
    auto fail = run_suite("COR2-iff", I, { path(3) }, literal);
    auto jf = to_json(fail);
    CHECK(jf["status"] == "fail");
    CHECK(jf["violations"][0]["graph6"] == "Bg");
    CHECK(jf.contains("elapsed_ms"));
    CHECK(exit_code({ pass, fail }) == 1);

    auto skip = run_suite("T1-bound", C, { path(3) });
    auto js = to_json(skip);
    CHECK(js["status"] == "skipped");
    CHECK(js["reason"].is_string());
    CHECK(exit_code({ pass, skip }) == 0);

    std::ofstream closed;
    CHECK_THROWS_AS(emit_report(pass, closed), std::runtime_error);
}

TEST_CASE("violations are replayable")
{
    SuiteOptions literal;
    literal.reading = ConditionReading::Literal;
    auto r = run_suite("COR2-iff", I, load_corpus("bundled:n5"), literal);
    REQUIRE(! r.violations.empty());
    for (auto & v : r.violations) {
        auto g = parse_graph6(v.graph6);
        auto again = run_suite("COR2-iff", I, { g }, literal);
        CHECK(again.status == SuiteStatus::Fail);
        CHECK(v.location.rfind("edge ", 0) == 0);
    }
}

TEST_CASE("JSON values")
{
    CHECK(to_json(Gamma::undefined()).is_null());
    CHECK(to_json(Gamma::of(3)) == 3);
    CHECK(to_json(MsdValue::finite(2)) == 2);
    CHECK(to_json(MsdValue::beyond_cap(6)) == ">6");
    CHECK(to_json(MsdValue::proven_infinite()) == "inf");
    CHECK(to_json(VertexSet::of({ 0, 2 })) == json::array({ 0, 2 }));
}

TEST_CASE("scan: class members among paths and cycles")
{
    auto paths = load_corpus("bundled:paths");
    std::vector<Graph> p2_14(paths.begin() + 1, paths.end());
    // P2 = K2 also has msd 2 (gamma 1, 1, 2 along its edge)
    CHECK(codes(scan_counterexamples("in-S2", I, p2_14)) == codes({ path(2), path(5), path(8), path(11), path(14) }));
    std::vector<Graph> p3_14(paths.begin() + 2, paths.end());
    CHECK(codes(scan_counterexamples("in-S2", I, p3_14)) == codes({ path(5), path(8), path(11), path(14) }));

    auto cycles = load_corpus("bundled:cycles");
    std::vector<Graph> c3_12(cycles.begin(), cycles.begin() + 10);
    CHECK(codes(scan_counterexamples("in-S1", O, c3_12, 4)) == codes({ cycle(3), cycle(6), cycle(9), cycle(12) }));

    CHECK(scan_counterexamples("in-S3", I, { path(2) }).empty());
    CHECK(scan_counterexamples("in-S2", I, { path(2) }).size() == 1);
    CHECK(scan_counterexamples("msd-gt-3", I, load_corpus("bundled:n6c")).empty());
    CHECK(scan_counterexamples("in-S1", I, { Graph{ 3 } }).empty());
    CHECK_THROWS_AS(scan_counterexamples("nope", I, {}), std::invalid_argument);
}
