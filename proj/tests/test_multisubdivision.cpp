#include "helpers.hpp"

#include <domlab/generators.hpp>
#include <domlab/multisubdivision.hpp>

#include <doctest.h>

using namespace domlab;

namespace {
    const auto I = PropertyDescriptor{ PropertyId::Any };
    const auto O = PropertyDescriptor{ PropertyId::Edgeless };
    const auto C = PropertyDescriptor{ PropertyId::Connected };
    const auto F = PropertyDescriptor{ PropertyId::Forest };
    const auto UK = PropertyDescriptor{ PropertyId::UnionOfCliques };

    auto gammas(std::initializer_list<int> xs) -> std::vector<Gamma>
    {
        std::vector<Gamma> out;
        for (int x : xs)
            out.push_back(Gamma::of(x));
        return out;
    }

    auto same(const std::vector<Gamma> & a, const std::vector<Gamma> & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (! a[i].same_as(b[i]))
                return false;
        return true;
    }
}

TEST_CASE("MsdValue")
{
    CHECK(MsdValue::finite(3).to_string() == "3");
    CHECK(MsdValue::beyond_cap(6).to_string() == ">6");
    CHECK(MsdValue::proven_infinite().to_string() == "inf");
    CHECK(min(MsdValue::finite(4), MsdValue::finite(2)) == MsdValue::finite(2));
    CHECK(min(MsdValue::beyond_cap(6), MsdValue::finite(5)) == MsdValue::finite(5));
    CHECK(min(MsdValue::proven_infinite(), MsdValue::beyond_cap(6)) == MsdValue::beyond_cap(6));
}

TEST_CASE("profiles of short paths")
{
    auto p3 = profile(path(3), Edge{ 0, 1 }, I, 3);
    CHECK(same(p3.values, gammas({ 1, 2, 2, 2 })));
    CHECK(p3.msd == MsdValue::finite(1));
    CHECK(p3.msd_plus == MsdValue::finite(1));
    CHECK(p3.msd_minus == MsdValue::proven_infinite());

    for (auto e : path(4).edges()) {
        auto p = profile(path(4), e, I, 3);
        CHECK(same(p.values, gammas({ 2, 2, 2, 3 })));
        CHECK(p.msd == MsdValue::finite(3));
    }

    auto k2 = profile(path(2), Edge{ 0, 1 }, I, 3);
    CHECK(same(k2.values, gammas({ 1, 1, 2, 2 })));
    CHECK(k2.msd == MsdValue::finite(2));
}

TEST_CASE("K3,3,3 profile under the edgeless property")
{
    auto g = complete_multipartite({ 3, 3, 3 });
    for (auto e : g.edges()) {
        auto p = profile(g, e, O, 6);
        CHECK(same(p.values, gammas({ 3, 2, 2, 3, 3, 3, 4 })));
        CHECK(p.msd == MsdValue::finite(1));
        CHECK(p.msd_minus == MsdValue::finite(1));
        CHECK(p.msd_plus == MsdValue::finite(6));
        CHECK(chain_holds(p));
    }
    auto m = msd_graph(g, O);
    CHECK(m.msd == MsdValue::finite(1));
    CHECK(m.msd_minus == MsdValue::finite(1));
    CHECK(m.msd_plus == MsdValue::finite(6));
}

TEST_CASE("beyond-cap and out-of-scope profiles")
{
    auto p = profile(path(4), Edge{ 0, 1 }, I, 2);
    CHECK(p.msd == MsdValue::beyond_cap(2));
    CHECK(p.msd_plus == MsdValue::beyond_cap(2));

    auto k2 = profile(path(2), Edge{ 0, 1 }, O, 1);
    CHECK(k2.msd_minus == MsdValue::beyond_cap(1));

    CHECK(! profile(disjoint_union(path(2), path(2)), Edge{ 0, 1 }, C, 2).in_scope);
    CHECK(profile(path(2), Edge{ 0, 1 }, C, 2).in_scope);
    CHECK_THROWS_AS(profile(path(3), Edge{ 0, 1 }, I, 0), GraphError);
    CHECK_THROWS_AS(profile(path(3), Edge{ 0, 2 }, I, 2), GraphError);
}

TEST_CASE("profile invariants on every graph n <= 5")
{
    for (auto & p : standard_properties())
        for (auto & g : test::small_graphs(5))
            for (auto e : g.edges()) {
                auto prof = profile(g, e, p, 4);
                REQUIRE(prof.values.size() == 5);
                REQUIRE(prof.values[0].same_as(gamma_number(g, p)));
                if (! prof.in_scope)
                    continue;
                int first = 0;
                for (int t = 1; t <= 4 && ! first; ++t)
                    if (! (prof.values[t] == prof.values[0]))
                        first = t;
                if (first)
                    REQUIRE(prof.msd == MsdValue::finite(first));
                else
                    REQUIRE(prof.msd == MsdValue::beyond_cap(4));
                REQUIRE(prof.msd == min(prof.msd_plus, prof.msd_minus));
                if (p.id() == PropertyId::Any) {
                    REQUIRE(prof.msd_minus == MsdValue::proven_infinite());
                    for (auto v : prof.values)
                        REQUIRE(v >= prof.values[0]);
                }
            }
}

TEST_CASE("graph-level numbers on cycles")
{
    CHECK(msd_graph(cycle(6), I).msd == MsdValue::finite(1));
    CHECK(msd_graph(cycle(5), I).msd == MsdValue::finite(2));
    CHECK(msd_graph(cycle(4), I).msd == MsdValue::finite(3));
    CHECK_THROWS_AS(msd_graph(Graph{ 4 }, I), GraphError);
}

TEST_CASE("S classes")
{
    CHECK(s_class(path(6), O).sclass->class_index == 1);
    CHECK(s_class(path(5), O).sclass->class_index == 2);
    CHECK(s_class(path(7), O).sclass->class_index == 3);
    CHECK(s_class(star(3), I).sclass->class_index == 1);
    CHECK(s_class(cycle(7), I).sclass->class_index == 3);
    CHECK(s_class(path(2), I).sclass->class_index == 2);
    CHECK_THROWS_AS(s_class(path(3), UK), ScopeError);
    CHECK_THROWS_AS(s_class(Graph{ 2 }, I), GraphError);

    for (int n = 2; n <= 14; ++n) {
        int expected = n % 3 == 0 ? 1 : n % 3 == 2 ? 2 : 3;
        CHECK_MESSAGE(s_class(path(n), I).sclass->class_index == expected, "P" << n);
        if (n >= 3)
            CHECK_MESSAGE(s_class(cycle(n), O).sclass->class_index == expected, "C" << n);
    }
}

TEST_CASE("triple-subdivision checks")
{
    auto g = complete_multipartite({ 3, 3, 3 });
    // gamma(G-e) = 2 and gamma(G_{e,3}) = 3: the upper end of the sandwich
    auto m = check_multi1(g, Edge{ 0, 3 }, O);
    CHECK(m.gamma_deleted == Gamma::of(2));
    CHECK(m.gamma_three == Gamma::of(3));
    CHECK(m.sandwich);
    CHECK(! m.a1);
    CHECK(! m.a2);
    CHECK(m.a3 == false);

    // K2: G-e = 2K1 and G_{e,3} = P5 both have gamma 2
    auto k2 = check_multi1(path(2), Edge{ 0, 1 }, I);
    CHECK(k2.gamma_deleted == Gamma::of(2));
    CHECK(k2.gamma_three == Gamma::of(2));
    CHECK(k2.sandwich);
    CHECK(k2.a1);
    CHECK(k2.a2);
    CHECK(k2.a3 == true);

    for (auto e : path(3).edges()) {
        auto p = check_multi1(path(3), e, I);
        CHECK(p.gamma_deleted == Gamma::of(2));
        CHECK(p.gamma_three == Gamma::of(2));
        CHECK(p.a1 == p.a2);
        CHECK(p.a1);
    }

    auto uk = check_multi1(path(3), Edge{ 0, 1 }, UK);
    CHECK(! uk.a3.has_value());
    CHECK_THROWS_AS(check_multi1(path(3), Edge{ 0, 1 }, C), ScopeError);
}

TEST_CASE("the equivalence and chain checks")
{
    auto g = complete_multipartite({ 3, 3, 3 });
    auto k = check_multi4(g, Edge{ 0, 3 }, O);
    CHECK(k.iff_holds);
    CHECK(k.chain == true);
    CHECK(k.msd_le_3);
    CHECK(k.profile.msd == MsdValue::finite(1));

    for (auto e : cycle(4).edges()) {
        auto c = check_multi4(cycle(4), e, I);
        CHECK(c.iff_holds);
        CHECK(! c.chain.has_value());
        CHECK(c.profile.msd == MsdValue::finite(3));
        CHECK(c.msd_le_3);
    }

    auto p3 = check_multi4(path(3), Edge{ 0, 1 }, I);
    CHECK(p3.profile.msd == MsdValue::finite(1));
    CHECK(p3.msd_le_3);
    CHECK_THROWS_AS(check_multi4(path(3), Edge{ 0, 1 }, UK), ScopeError);
}

TEST_CASE("the chain check rejects profiles that break it")
{
    MsdProfile prof;
    prof.cap = 6;
    prof.values = gammas({ 3, 2, 2, 3, 3, 3, 3 });
    prof.msd = MsdValue::finite(1);
    prof.msd_minus = MsdValue::finite(1);
    prof.msd_plus = MsdValue::beyond_cap(6);
    CHECK(! chain_holds(prof));
    prof.values.erase(prof.values.begin() + 4, prof.values.end());
    CHECK(! chain_holds(prof));
}

TEST_CASE("forest property on three stars joined by a triangle")
{
    for (int p = 2; p <= 4; ++p) {
        auto g = three_stars_triangle(p);
        for (auto e : { Edge{ 0, 1 }, Edge{ 1, 2 }, Edge{ 0, 2 } })
            CHECK(profile(g, e, F, 1).values[1] == Gamma::of(3));
    }
}
