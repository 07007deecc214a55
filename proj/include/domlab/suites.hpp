#ifndef DOMLAB_SUITES_HPP
#define DOMLAB_SUITES_HPP

#include <domlab/criticality.hpp>
#include <domlab/graph.hpp>
#include <domlab/properties.hpp>

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace domlab {

/// One failed instance of a suite's universally quantified assertion.
struct Violation
{
    std::string graph6;
    /// "edge u-v", "vertex v", or empty for graph-level checks.
    std::string location;
    std::string details;
};

enum class SuiteStatus { Pass, Fail, Skipped };

auto to_string(SuiteStatus s) -> std::string;

struct SuiteReport
{
    std::string suite_id;
    PropertyDescriptor property;
    SuiteStatus status = SuiteStatus::Pass;
    /// Why the suite was skipped; empty otherwise.
    std::string reason{};
    int graphs_checked = 0;
    long instances_checked = 0;
    std::vector<Violation> violations{};
    std::chrono::milliseconds elapsed{ 0 };

    auto passed() const -> bool { return status != SuiteStatus::Fail; }
};

struct SuiteOptions
{
    int jobs = 1;
    /// Stop at the first violating graph (in corpus order).
    bool fail_fast = false;
    ConditionReading reading = ConditionReading::Symmetric;
};

/// Which hypotheses a theorem needs from the property.
struct Scope
{
    bool hereditary = false;
    bool induced_hereditary = false;
    bool closed_union_k1 = false;
    bool nondegenerate = false;
    /// Only plain domination.
    bool only_any = false;

    /// Empty when p qualifies, otherwise the reason.
    auto check(const PropertyDescriptor & p) const -> std::string;
};

struct SuiteInfo
{
    std::string id;
    /// Short statement of what is asserted.
    std::string statement;
    Scope scope;
};

/// Every registered suite, in run order.
auto suite_registry() -> const std::vector<SuiteInfo> &;

/// The suite ids the registry must cover, one per verified result.
auto required_suite_ids() -> std::vector<std::string>;

/// Throws std::logic_error unless the registry matches required_suite_ids() exactly.
auto validate_registry() -> void;

/// Throws std::invalid_argument for an unknown id.
auto find_suite(std::string_view id) -> const SuiteInfo &;

/// Parses "all" or a comma separated list of ids.
auto parse_suite_list(std::string_view text) -> std::vector<std::string>;

/**
 * Runs one suite over the corpus. Graphs are spread over options.jobs
 * workers; violations are merged in corpus order, so the report does not
 * depend on the worker count. A property outside the suite's scope gives a
 * Skipped report without touching the corpus.
 */
auto run_suite(std::string_view suite_id, const PropertyDescriptor & p, const std::vector<Graph> & corpus,
        const SuiteOptions & options = {}) -> SuiteReport;

/**
 * Runs f(index) for index in [0, count) on up to jobs threads. When f
 * returns true, indices above the smallest such index are abandoned.
 */
auto parallel_for(std::size_t count, int jobs, const std::function<bool (std::size_t)> & f) -> void;

}

#endif
