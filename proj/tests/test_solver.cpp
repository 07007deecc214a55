#include "helpers.hpp"

#include <domlab/generators.hpp>
#include <domlab/io.hpp>
#include <domlab/solver.hpp>

#include <doctest.h>

#include <algorithm>

using namespace domlab;

namespace {
    const auto I = PropertyDescriptor{ PropertyId::Any };
    const auto O = PropertyDescriptor{ PropertyId::Edgeless };
    const auto C = PropertyDescriptor{ PropertyId::Connected };
    const auto T = PropertyDescriptor{ PropertyId::NoIsolated };
    const auto F = PropertyDescriptor{ PropertyId::Forest };

    auto sets(std::initializer_list<std::initializer_list<Vertex>> xs) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for (auto x : xs)
            out.push_back(VertexSet::of(x));
        return out;
    }
}

TEST_CASE("Gamma semantics")
{
    auto u = Gamma::undefined();
    CHECK(! (u == u));
    CHECK(! (u < Gamma::of(1)));
    CHECK(! (u >= Gamma::of(1)));
    CHECK(u.same_as(u));
    CHECK(Gamma::of(2) < Gamma::of(3));
    CHECK(Gamma::of(2).plus(1) == Gamma::of(3));
    CHECK(! u.plus(1).defined());
    CHECK(u.to_string() == "undefined");
    CHECK_THROWS(u.value());
}

TEST_CASE("is_dominating")
{
    CHECK(is_dominating(path(3), VertexSet::of({ 1 })));
    CHECK(! is_dominating(path(3), VertexSet::of({ 0 })));
    for (auto & g : test::small_graphs(4))
        CHECK(is_dominating(g, g.vertices()));
    CHECK(is_dominating(Graph{}, {}));
}

TEST_CASE("gamma on the worked examples")
{
    auto k333 = complete_multipartite({ 3, 3, 3 });
    CHECK(gamma(k333, O).value == Gamma::of(3));

    for (int p = 2; p <= 6; ++p)
        for (auto & prop : { I, O, F })
            CHECK(gamma(star(p), prop).value == Gamma::of(1));

    CHECK(! gamma(disjoint_union(path(2), path(2)), C).value.defined());
    CHECK(! gamma(disjoint_union(path(2), path(2)), C).witness);

    for (int p = 2; p <= 4; ++p)
        CHECK(gamma(three_stars_triangle(p), F).value == Gamma::of(2 + p));
}

TEST_CASE("frozen small values")
{
    CHECK(gamma_oracle(path(4), I).value == Gamma::of(2));
    CHECK(gamma_oracle(Graph{ 1 }, F).value == Gamma::of(1));
    CHECK(gamma_oracle(cycle(5), T).value == Gamma::of(3));
    CHECK(gamma(cycle(5), T).value == Gamma::of(3));

    const int paths[] = { 2, 2, 2, 3, 3, 3, 4, 4 };
    for (int n = 4; n <= 11; ++n)
        CHECK(gamma(path(n), I).value == Gamma::of(paths[n - 4]));
}

TEST_CASE("empty graph")
{
    Graph empty;
    CHECK(gamma(empty, I).value == Gamma::of(0));
    CHECK(gamma(empty, O).value == Gamma::of(0));
    CHECK(! gamma(empty, C).value.defined());
    CHECK(! gamma(empty, T).value.defined());
    CHECK(gamma_oracle(empty, C).value.same_as(Gamma::undefined()));
}

TEST_CASE("witness is the lexicographically first minimum set")
{
    CHECK(gamma(path(4), I).witness == VertexSet::of({ 0, 2 }));
    CHECK(gamma(parse_graph6("D?{"), I).witness == VertexSet::of({ 4 }));
    CHECK(gamma(cycle(4), I).witness == VertexSet::of({ 0, 1 }));
}

TEST_CASE("all minimum sets")
{
    CHECK(all_minimum_sets(path(3), I) == sets({ { 1 } }));
    CHECK(all_minimum_sets(cycle(4), I) == sets({ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } }));
    CHECK(all_minimum_sets(path(2), O) == sets({ { 0 }, { 1 } }));
    CHECK(all_minimum_sets(path(4), I) == sets({ { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 } }));
    CHECK_THROWS_AS(all_minimum_sets(Graph{ 2 }, C), UndefinedGamma);
}

TEST_CASE("membership in some minimum set")
{
    CHECK(in_some_minimum_set(path(3), I, 1));
    CHECK(! in_some_minimum_set(path(3), I, 0));
    for (Vertex v = 0; v < 5; ++v)
        CHECK(in_some_minimum_set(complete(5), I, v));
    CHECK(in_some_minimum_set(path(4), I, 0));
    CHECK_THROWS_AS(in_some_minimum_set(Graph{ 2 }, T, 0), UndefinedGamma);
}

TEST_CASE("deletion-critical vertices")
{
    CHECK(v_minus_set(path(4), I) == VertexSet::of({ 0, 3 }));
    CHECK(v_minus_set(Graph{ 1 }, I) == VertexSet::of({ 0 }));
    CHECK(v_minus_set(cycle(4), I) == VertexSet::of({ 0, 1, 2, 3 }));
    // deleting a leaf of K2 leaves K1 whose total domination is undefined: not a decrease
    CHECK(v_minus_set(path(2), T).empty());
}

TEST_CASE("solver matches the brute-force oracle on every graph n <= 6 and every property")
{
    for (auto & p : standard_properties())
        for (auto & g : test::small_graphs(6)) {
            auto fast = gamma(g, p);
            auto slow = gamma_oracle(g, p);
            REQUIRE_MESSAGE(fast.value.same_as(slow.value), p.name() << " " << g.label());
            REQUIRE_MESSAGE(fast.witness == slow.witness, p.name() << " " << g.label());
            if (fast.value.defined()) {
                REQUIRE(all_minimum_sets(g, p) == all_minimum_sets_oracle(g, p));
                REQUIRE(is_dominating(g, *fast.witness));
                REQUIRE(holds_induced(p, g, *fast.witness));
            }
            REQUIRE(gamma_number(g, p).same_as(fast.value));
        }
}

TEST_CASE("solver matches the oracle on random graphs up to 12 vertices")
{
    std::mt19937 rng{ 2024 };
    for (int trial = 0; trial < 120; ++trial) {
        int n = 7 + trial % 6;
        auto g = test::random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.45);
        for (auto & p : standard_properties()) {
            auto fast = gamma(g, p);
            auto slow = gamma_oracle(g, p);
            REQUIRE_MESSAGE(fast.value.same_as(slow.value), p.name() << " " << to_graph6(g));
            REQUIRE(fast.witness == slow.witness);
        }
    }
}

TEST_CASE("monotonicity: gamma_I <= gamma_P for every property")
{
    for (auto & g : test::small_graphs(6))
        for (auto & p : standard_properties()) {
            auto gp = gamma_number(g, p);
            if (gp.defined())
                CHECK(gamma_number(g, I) <= gp);
        }
}

TEST_CASE("oracle refuses large graphs")
{
    CHECK_THROWS_AS(gamma_oracle(path(oracle_max_vertices + 1), I), std::invalid_argument);
}
