#include <catch2/catch_amalgamated.hpp>

#include "ver4/partition.hpp"
#include "ver4/text.hpp"
#include "ver4/weight.hpp"

using namespace ver4;

TEST_CASE("label degree") {
    CHECK(degree(GLPLabel(0, 0, false)) == 0);
    CHECK(degree(GLPLabel(1, 0, false)) == 4); // chi
    CHECK(degree(GLPLabel(0, 3, true)) == 3);  // xi T3
}

TEST_CASE("label invariants") {
    CHECK_THROWS_AS(GLPLabel(0, 2, true), std::invalid_argument);
    CHECK_THROWS_AS(GLPLabel(0, 4, false), std::invalid_argument);
}

TEST_CASE("is_polynomial_glp") {
    CHECK_FALSE(is_polynomial_glp(GLPLabel(0, 0, true)));  // xi
    CHECK(is_polynomial_glp(GLPLabel(0, 2, false)));       // T2
    CHECK(is_polynomial_glp(GLPLabel(0, 3, true)));        // xi T3
    CHECK_FALSE(is_polynomial_glp(GLPLabel(0, 1, true)));  // xi T1
    CHECK(is_polynomial_glp(GLPLabel(1, 1, true)));        // xi T5
    CHECK(is_polynomial_glp(GLPLabel(1, 0, true)));        // xi chi
    CHECK(is_polynomial_glp(GLPLabel(0, 0, false)));       // unit
    CHECK_FALSE(is_polynomial_glp(GLPLabel(-1, 0, false)));
}

TEST_CASE("reflect table examples") {
    auto [l1, t1] = reflect(1, GLPLabel());
    CHECK(l1 == 0);
    CHECK(t1 == GLPLabel(0, 1, false)); // R(1|1) = 0|T1

    auto [l2, t2] = reflect(0, GLPLabel(0, 0, true));
    CHECK(l2 == -1);
    CHECK(t2 == GLPLabel(0, 1, true)); // R(0|xi) = -1|xi T1

    auto [l3, t3] = reflect(3, GLPLabel(1, 0, true)); // shift rule from R(1|xi) = 1|xi
    CHECK(l3 == 3);
    CHECK(t3 == GLPLabel(1, 0, true));

    auto [l4, t4] = reflect(2, GLPLabel(0, 3, false)); // R(2|T3) = 0|chi xi T1
    CHECK(l4 == 0);
    CHECK(t4 == GLPLabel(1, 1, true));
}

TEST_CASE("reflect_weight examples") {
    Weight w1{{1}, {GLPLabel()}};
    CHECK(reflect_weight(w1, 1, 1) == Weight{{0}, {GLPLabel(0, 1, false)}});

    Weight w2{{0}, {GLPLabel()}};
    CHECK(reflect_weight(w2, 1, 1) == w2); // R(0|1) = 0|1

    Weight w3{{2, 1}, {GLPLabel(), GLPLabel(0, 2, false)}};
    Weight r3 = reflect_weight(w3, 2, 2); // R(1|T2) = 0|T3
    CHECK(r3 == Weight{{2, 0}, {GLPLabel(), GLPLabel(0, 3, false)}});

    CHECK_THROWS_AS(reflect_weight(w1, 2, 1), std::out_of_range);
}

TEST_CASE("borel_chain examples") {
    Weight col{{1, 1, 1}, {GLPLabel()}};
    CHECK(borel_chain(col) == Weight{{0, 0, 0}, {GLPLabel(0, 3, false)}});

    // zero integer parts with chi-power labels stay fixed
    Weight chis{{0, 0}, {GLPLabel(2, 0, false), GLPLabel(1, 0, false)}};
    CHECK(borel_chain(chis) == chis);

    Weight nolambda{{}, {GLPLabel(0, 2, false)}};
    CHECK(borel_chain(nolambda) == nolambda);
}

TEST_CASE("is_dominant") {
    CHECK(is_dominant(Weight{{2, 1}, {GLPLabel(1, 0, false), GLPLabel(0, 1, false)}}));
    CHECK_FALSE(is_dominant(Weight{{1, 2}, {}}));
    CHECK(is_dominant(Weight{{}, {}}));
}

TEST_CASE("degree preservation across the corrected table") {
    for (const auto& e : reflect_entries(ReflectTable::Corrected))
        CHECK(e.alpha + degree(e.in) == e.beta + degree(e.out));
}

TEST_CASE("raw table: exactly one entry violates degree preservation") {
    int bad = 0;
    for (const auto& e : reflect_entries(ReflectTable::Raw))
        if (e.alpha + degree(e.in) != e.beta + degree(e.out))
            ++bad;
    CHECK(bad == 1);
}

TEST_CASE("shift equivariance on a grid") {
    std::vector<GLPLabel> bases;
    for (int r = 0; r <= 3; ++r)
        for (int x = 0; x <= (r == 2 ? 0 : 1); ++x)
            bases.push_back(GLPLabel(0, r, x != 0));
    for (const auto& base : bases)
        for (int lam = -6; lam <= 6; ++lam)
            for (int q = -3; q <= 3; ++q) {
                GLPLabel t = chi_shift(base, q);
                auto [l0, t0] = reflect(lam, t);
                // degree preservation everywhere
                CHECK(lam + degree(t) == l0 + degree(t0));
                auto [l1, t1] = reflect(lam + 2, t);
                CHECK(l1 == l0 + 2);
                CHECK(t1 == t0);
                auto [l2, t2] = reflect(lam, chi_shift(t, 1));
                CHECK(l2 == l0);
                CHECK(t2 == chi_shift(t0, 1));
            }
}

TEST_CASE("borel_chain preserves total degree") {
    std::vector<Weight> samples = {
        {{3, 1}, {GLPLabel(0, 1, false), GLPLabel()}},
        {{2, 2, 1}, {GLPLabel(0, 2, false)}},
        {{5}, {GLPLabel(0, 3, true), GLPLabel(1, 0, false)}},
        {{1, 1, 1, 1}, {GLPLabel(), GLPLabel()}},
    };
    for (const auto& w : samples)
        CHECK(borel_chain(w).total_degree() == w.total_degree());
}

TEST_CASE("2-restricted columns reflect to zero integer part") {
    for (int s = 0; s <= 10; ++s)
        for (const auto& lam : enumerate_partitions(s)) {
            if (!is_two_restricted(lam))
                continue;
            Weight w;
            w.zpart = lam.parts;
            w.tpart.assign((lam.size() + 4) / 4, GLPLabel());
            Weight r = borel_chain(w);
            for (int z : r.zpart)
                CHECK(z == 0);
        }
}

TEST_CASE("weight and label text round trips") {
    CHECK(to_string(GLPLabel(2, 1, true)) == "x^2*xi*T1");
    CHECK(parse_glp_label("x^2*xi*T1") == GLPLabel(2, 1, true));
    CHECK(parse_glp_label("T3") == GLPLabel(0, 3, false));
    CHECK(parse_glp_label("1") == GLPLabel());
    CHECK(to_string(parse_weight("2,1|x^1*T1,T1")) == "2,1|x^1*T1,T1");
    Weight w = parse_weight("2,1|x^1*T1,T1");
    CHECK(w.zpart == std::vector<int>{2, 1});
    REQUIRE(w.tpart.size() == 2);
    CHECK(w.tpart[0] == GLPLabel(1, 1, false));
    CHECK(parse_weight("|T2").zpart.empty());
    CHECK(parse_weight("0|T1").zpart == std::vector<int>{0});
}
