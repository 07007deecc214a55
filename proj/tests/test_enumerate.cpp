#include "helpers.hpp"

#include <domlab/corpus.hpp>
#include <domlab/generators.hpp>
#include <domlab/io.hpp>

#include <doctest.h>

#include <set>

using namespace domlab;

TEST_CASE("isomorphism class counts")
{
    // OEIS A000088 and A001349
    const int all[] = { 1, 2, 4, 11, 34, 156, 1044 };
    const int connected[] = { 1, 1, 2, 6, 21, 112, 853 };
    for (int n = 1; n <= 7; ++n) {
        CHECK(all_graphs(n).size() == static_cast<std::size_t>(all[n - 1]));
        CHECK(connected_graphs(n).size() == static_cast<std::size_t>(connected[n - 1]));
    }
}

TEST_CASE("representatives are canonical and distinct")
{
    std::set<std::string> seen;
    for (auto & g : all_graphs(6)) {
        CHECK(canonical_form(g) == g);
        CHECK(seen.insert(to_graph6(g)).second);
    }
    // relabeling does not change the canonical form
    auto relabeled = test::make(4, { { 3, 0 }, { 0, 2 }, { 2, 1 } });
    CHECK(canonical_form(relabeled) == canonical_form(path(4)));
}

TEST_CASE("shipped corpus files match the generator")
{
    for (auto & name : bundled_corpus_names()) {
        auto shipped = load_corpus("bundled:" + name);
        auto generated = generate_bundled(name);
        REQUIRE(shipped.size() == generated.size());
        for (std::size_t i = 0; i < shipped.size(); ++i)
            CHECK(shipped[i] == generated[i]);
    }
    CHECK(generate_bundled("n7c").size() == 996);
    CHECK(generate_bundled("n6").size() == 208);
}
