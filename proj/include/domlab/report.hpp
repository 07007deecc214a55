#ifndef DOMLAB_REPORT_HPP
#define DOMLAB_REPORT_HPP

#include <domlab/criticality.hpp>
#include <domlab/multisubdivision.hpp>
#include <domlab/solver.hpp>
#include <domlab/suites.hpp>

#include <json.hpp>

#include <ostream>

namespace domlab {

using json = nlohmann::json;

/// Extended naturals as JSON: a number, or null when undefined.
auto to_json(Gamma g) -> json;
/// A number, or a string ">cap" / "inf".
auto to_json(const MsdValue & v) -> json;
auto to_json(VertexSet s) -> json;
auto to_json(const Edge & e) -> json;

auto to_json(const GammaResult & r) -> json;
auto to_json(const EdgeClassification & c) -> json;
auto to_json(const MsdProfile & p) -> json;

/// with_timing = false drops elapsed_ms, for byte-comparable reports.
auto to_json(const SuiteReport & r, bool with_timing = true) -> json;

/**
 * Writes one JSON line for the report and flushes. Throws std::runtime_error
 * if the sink fails.
 */
auto emit_report(const SuiteReport & r, std::ostream & sink, bool with_timing = true) -> void;

/// 0 when every report passed or was skipped, 1 otherwise.
auto exit_code(const std::vector<SuiteReport> & reports) -> int;

}

#endif
