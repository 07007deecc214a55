#include <domlab/scan.hpp>
#include <domlab/criticality.hpp>
#include <domlab/io.hpp>
#include <domlab/multisubdivision.hpp>
#include <domlab/suites.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace domlab {

auto scan_assertion_ids() -> std::vector<std::string>
{
    return { "in-S1", "in-S2", "in-S3", "msd-gt-3", "s2-cut-vertex", "cs-minus", "cer-minus" };
}

namespace {
    auto has_cut_vertex(const Graph & g) -> bool
    {
        auto base = components(g).size();
        for (Vertex v = 0; v < g.order(); ++v)
            if (components(delete_vertex(g, v).graph).size() > base)
                return true;
        return false;
    }

    /// Details string when g matches, nullopt otherwise.
    auto evaluate(std::string_view id, const PropertyDescriptor & p, const Graph & g) -> std::optional<std::string>
    {
        if (g.size() == 0)
            return std::nullopt;

        if (id == "cs-minus" || id == "cer-minus") {
            auto m = class_membership(g, p);
            if (id == "cs-minus" ? m.cs_minus : m.cer_minus)
                return std::string{ "every edge critical" };
            return std::nullopt;
        }

        int cap = id == "msd-gt-3" ? default_msd_cap : 3;
        auto numbers = msd_graph(g, p, cap);
        if (! numbers.in_scope)
            return std::nullopt;
        auto text = "msd=" + numbers.msd.to_string();

        if (id == "msd-gt-3") {
            if (! numbers.msd.is_finite() || numbers.msd.value() > 3)
                return text;
            return std::nullopt;
        }
        int wanted = id == "in-S1" ? 1 : id == "in-S2" ? 2 : id == "in-S3" ? 3 : 2;
        if (numbers.msd != MsdValue::finite(wanted))
            return std::nullopt;
        if (id == "s2-cut-vertex" && ! has_cut_vertex(g))
            return std::nullopt;
        return text;
    }
}

auto scan_counterexamples(std::string_view assertion_id, const PropertyDescriptor & p, const std::vector<Graph> & corpus, int jobs) -> std::vector<ScanMatch>
{
    auto ids = scan_assertion_ids();
    if (std::find(ids.begin(), ids.end(), assertion_id) == ids.end())
        throw std::invalid_argument("unknown scan assertion '" + std::string{ assertion_id } + "'");

    std::vector<std::optional<std::string>> hits(corpus.size());
    parallel_for(corpus.size(), jobs, [&] (std::size_t i) {
        hits[i] = evaluate(assertion_id, p, corpus[i]);
        return false;
    });

    std::vector<ScanMatch> out;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (hits[i])
            out.push_back({ i, to_graph6(corpus[i]), corpus[i].label(), *hits[i] });
    return out;
}

}
