#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ver4/functor.hpp"
#include "ver4/text.hpp"

using namespace ver4;

TEST_CASE("evaluate examples") {
    EvalResult r1 = evaluate({Partition{3, 2, 1}, Partition{}}, {0, 2});
    REQUIRE_FALSE(r1.zero());
    CHECK(r1.weight->zpart.empty());
    CHECK(r1.weight->tpart == MSequence{GLPLabel(1, 1, false), GLPLabel(0, 1, false)});

    CHECK(evaluate({Partition{2, 2}, Partition{}}, {1, 3}).zero()); // (2) not 2-restricted

    CHECK(evaluate({Partition{1, 1, 1, 1, 1}, Partition{}}, {0, 1}).zero()); // length 2 > 1

    EvalResult r4 = evaluate({Partition{}, Partition{1}}, {2, 1});
    REQUIRE_FALSE(r4.zero());
    CHECK(r4.weight->zpart == std::vector<int>{0, 0});
    CHECK(r4.weight->tpart == MSequence{GLPLabel(1, 0, false)});
}

TEST_CASE("enumerate_simple_functors") {
    CHECK(enumerate_simple_functors(4).size() == 6);
    auto one = enumerate_simple_functors(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lambda == Partition{1});
    CHECK(one[0].mu == Partition{});
    CHECK(enumerate_simple_functors(0).size() == 1);
    for (const auto& f : enumerate_simple_functors(7))
        CHECK(f.degree() == 7);
}

TEST_CASE("polynomial_simples_gl on P") {
    auto d2 = polynomial_simples_gl({0, 1}, 2);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].second.tpart == MSequence{GLPLabel(0, 2, false)});

    auto d4 = polynomial_simples_gl({0, 1}, 4);
    REQUIRE(d4.size() == 2);
    std::set<GLPLabel> got{d4[0].second.tpart[0], d4[1].second.tpart[0]};
    CHECK(got == std::set<GLPLabel>{GLPLabel(1, 0, false), GLPLabel(1, 0, true)});
}

TEST_CASE("polynomial_simples_gl on 1+P in degree 1") {
    // a single degree-1 label exists; its evaluation is L(1|1), whose
    // reflected description is (0|T1)
    auto d1 = polynomial_simples_gl({1, 1}, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].first.lambda == Partition{1});
    CHECK(d1[0].second.zpart == std::vector<int>{1});
    CHECK(d1[0].second.tpart == MSequence{GLPLabel()});
}

TEST_CASE("discerning examples") {
    CHECK(is_discerning({1, 1}, 3));
    CHECK_FALSE(is_discerning({1, 0}, 2));
    CHECK(is_discerning({2, 1}, 4));
}

TEST_CASE("faithful examples") {
    CHECK(is_faithful({1, 1}, 4));
    CHECK_FALSE(is_faithful({0, 1}, 4));
    CHECK(is_faithful({1, 0}, 1));
}

TEST_CASE("closed forms match brute force on a small grid") {
    for (int d = 1; d <= 6; ++d)
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
                Ver4Object x{m, n};
                CHECK(is_discerning(x, d) == is_discerning_bruteforce(x, d));
                CHECK(is_faithful(x, d) == is_faithful_bruteforce(x, d));
            }
}

TEST_CASE("stability: m > d never vanishes when mu fits") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& f : enumerate_simple_functors(d))
            for (int n = 0; n <= 3; ++n) {
                if (f.mu.length() > n)
                    continue;
                CHECK_FALSE(evaluate(f, {d + 1, n}).zero());
            }
}

TEST_CASE("monotonicity in n") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& f : enumerate_simple_functors(d))
            for (int m = 0; m <= 3; ++m)
                for (int n = 0; n <= 3; ++n)
                    if (!evaluate(f, {m, n}).zero())
                        CHECK_FALSE(evaluate(f, {m, n + 1}).zero());
}

TEST_CASE("weights are pairwise distinct and dominant") {
    for (int d = 1; d <= 8; ++d)
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                auto entries = polynomial_simples_gl({m, n}, d);
                std::set<std::string> seen;
                for (const auto& [f, w] : entries) {
                    CHECK(is_dominant(w));
                    CHECK(seen.insert(to_string(w)).second);
                }
            }
}

TEST_CASE("additive catalog") {
    auto c8 = additive_catalog(8);
    REQUIRE(c8.simples.size() == 2);
    CHECK(c8.simples[0] == FunctorLabel{Partition{8}, Partition{}});
    CHECK(c8.simples[1] == FunctorLabel{Partition{}, Partition{2}});
    REQUIRE(c8.indecomposables.size() == 5);
    // projective cover of D[8|0]: top D[8|0], socle D[0|2]
    const auto& p = c8.indecomposables[2];
    REQUIRE(p.layers.size() == 2);
    CHECK(p.layers[0] == std::vector<FunctorLabel>{c8.simples[0]});
    CHECK(p.layers[1] == std::vector<FunctorLabel>{c8.simples[1]});
    // injective hull of D[8|0]: top D[0|2], socle D[8|0]
    const auto& i = c8.indecomposables[3];
    REQUIRE(i.layers.size() == 2);
    CHECK(i.layers[0] == std::vector<FunctorLabel>{c8.simples[1]});
    CHECK(i.layers[1] == std::vector<FunctorLabel>{c8.simples[0]});
    // projective injective: D[0|2], D[8|0], D[0|2]
    const auto& pi = c8.indecomposables[4];
    REQUIRE(pi.layers.size() == 3);
    CHECK(pi.layers[0] == std::vector<FunctorLabel>{c8.simples[1]});
    CHECK(pi.layers[1] == std::vector<FunctorLabel>{c8.simples[0]});
    CHECK(pi.layers[2] == std::vector<FunctorLabel>{c8.simples[1]});

    CHECK(additive_catalog(3).simples.empty());
    CHECK(additive_catalog(3).indecomposables.empty());
    auto c2 = additive_catalog(2);
    REQUIRE(c2.simples.size() == 1);
    CHECK(c2.simples[0] == FunctorLabel{Partition{2}, Partition{}});
    CHECK(c2.indecomposables.size() == 1);
    auto c1 = additive_catalog(1);
    REQUIRE(c1.simples.size() == 1);
    CHECK(c1.simples[0] == FunctorLabel{Partition{1}, Partition{}});
}

TEST_CASE("exact catalog") {
    auto e4 = exact_catalog(4);
    REQUIRE(e4.size() == 1);
    REQUIRE(e4[0].layers.size() == 3);
    CHECK(e4[0].layers[0] == std::vector<FunctorLabel>{FunctorLabel{Partition{}, Partition{1}}});
    CHECK(e4[0].layers[1] == std::vector<FunctorLabel>{FunctorLabel{Partition{4}, Partition{}}});
    CHECK(e4[0].layers[2] == std::vector<FunctorLabel>{FunctorLabel{Partition{}, Partition{1}}});

    CHECK(exact_catalog(2).empty());
    auto e1 = exact_catalog(1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].layers == std::vector<std::vector<FunctorLabel>>{
                              {FunctorLabel{Partition{1}, Partition{}}}});
    CHECK(exact_catalog(3).empty());
    CHECK(exact_catalog(6).empty());
}

TEST_CASE("svec predicates") {
    // m = n + p, d = p(n+1): faithful but not discerning
    CHECK(svec_faithful(4, 1, 3, 6));
    CHECK_FALSE(svec_discerning(4, 1, 3, 6));

    CHECK(svec_faithful(1, 1, 3, 1));
    CHECK(svec_discerning(1, 1, 3, 1));

    CHECK(svec_faithful(10, 1, 5, 12));
    CHECK_FALSE(svec_discerning(10, 1, 5, 12));

    // invariance under m <-> n
    CHECK(svec_faithful(1, 4, 3, 6) == svec_faithful(4, 1, 3, 6));
    CHECK(svec_discerning(2, 5, 3, 7) == svec_discerning(5, 2, 3, 7));

    CHECK_THROWS_AS(svec_faithful(2, 1, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(svec_faithful(2, 1, 9, 3), std::invalid_argument);
    CHECK_THROWS_AS(svec_faithful(2, 0, 3, 3), std::invalid_argument);
}

TEST_CASE("svec middle case uses the exact ceiling") {
    // p = 5, n = 3, m = 4: c = 2, bound = ceil(4p - 1 - 4) = 15
    CHECK(svec_faithful(4, 3, 5, 15));
    CHECK_FALSE(svec_faithful(4, 3, 5, 16));
    // p = 5, n = 4, m = 4: 2c = 5, c = 5/2, c^2 = 25/4, bound = 24 - 6 = 18
    CHECK(svec_faithful(4, 4, 5, 18));
    CHECK_FALSE(svec_faithful(4, 4, 5, 19));
}
