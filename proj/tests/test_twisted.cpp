#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ver4/twisted.hpp"

using namespace ver4;

namespace {

// order y < x, matching the rewrite example below
VarTableRef yx_table() { return make_table({{"y", true}, {"x", true}}); }

TwistedElement random_element(const VarTableRef& t, std::mt19937& rng, int max_monos = 3,
                              int max_deg = 3) {
    std::uniform_int_distribution<int> nmono(0, max_monos);
    std::uniform_int_distribution<int> ndeg(0, max_deg);
    std::uniform_int_distribution<int> pick(0, 2 * static_cast<int>(t->gens.size()) - 1);
    TwistedElement out = TwistedElement::zero(t);
    const int k = nmono(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<Letter> word;
        const int d = ndeg(rng);
        for (int j = 0; j < d; ++j) {
            int v = pick(rng);
            word.push_back({v / 2, v % 2 == 1});
        }
        out += normalize(t, word);
    }
    return out;
}

}  // namespace

TEST_CASE("normalize examples") {
    auto t = yx_table();
    const int y = 0, x = 1;
    // x*y = y*x + x'*y'
    TwistedElement e = normalize(t, {{x, false}, {y, false}});
    CHECK(e.monomials().size() == 2);
    TwistedElement primes = TwistedElement::generator_prime(t, x) *
                            TwistedElement::generator_prime(t, y);
    CHECK(e == normalize(t, {{y, false}, {x, false}}) + primes);

    CHECK(normalize(t, {{x, true}, {x, true}}).is_zero());
    CHECK(normalize(t, {{x, false}}) == TwistedElement::generator(t, x));
}

TEST_CASE("ring operations") {
    auto t = yx_table();
    const int y = 0, x = 1;
    TwistedElement ex = TwistedElement::generator(t, x);
    TwistedElement ey = TwistedElement::generator(t, y);
    TwistedElement one = TwistedElement::one(t);

    CHECK(ex * one == ex);
    CHECK((ex + ex).is_zero());
    // (x+y)^2 = x^2 + y^2 + x'y'
    TwistedElement sq = (ex + ey) * (ex + ey);
    TwistedElement expect = ex * ex + ey * ey +
                            TwistedElement::generator_prime(t, x) *
                                TwistedElement::generator_prime(t, y);
    CHECK(sq == expect);
}

TEST_CASE("delta") {
    auto t = yx_table();
    const int y = 0, x = 1;
    TwistedElement ex = TwistedElement::generator(t, x);
    TwistedElement ey = TwistedElement::generator(t, y);
    CHECK(delta(ex * ex).is_zero());
    CHECK(delta(ex * ey) ==
          TwistedElement::generator_prime(t, x) * ey + ex * TwistedElement::generator_prime(t, y));
    CHECK(delta(TwistedElement::generator_prime(t, x)).is_zero());
}

TEST_CASE("in_delta_ideal") {
    auto t = yx_table();
    const int y = 0, x = 1;
    TwistedElement ex = TwistedElement::generator(t, x);
    TwistedElement eyp = TwistedElement::generator_prime(t, y);
    CHECK(in_delta_ideal(TwistedElement::generator_prime(t, x) *
                         TwistedElement::generator(t, y)));
    CHECK_FALSE(in_delta_ideal(ex + ex * eyp));
    CHECK(in_delta_ideal(TwistedElement::zero(t)));
}

TEST_CASE("rewriting confluence and idempotence on random words") {
    auto t = make_table({{"a", true}, {"b", true}, {"c", true}});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Letter> word;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int v = pick(rng);
            word.push_back({v / 2, v % 2 == 1});
        }
        std::uniform_int_distribution<int> cut(0, n);
        const int c = cut(rng);
        std::vector<Letter> u(word.begin(), word.begin() + c);
        std::vector<Letter> v(word.begin() + c, word.end());
        // normalize(u)*normalize(v) agrees with normalizing the whole word
        CHECK(normalize(t, u) * normalize(t, v) == normalize(t, word));
    }
}

TEST_CASE("braided commutativity and derivation laws on random elements") {
    auto t = make_table({{"a", true}, {"b", true}, {"c", true}});
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        TwistedElement u = random_element(t, rng);
        TwistedElement v = random_element(t, rng);
        CHECK(u * v + v * u == delta(u) * delta(v));
        CHECK(delta(delta(u)).is_zero());
        CHECK(delta(u * v) == delta(u) * v + u * delta(v));
        CHECK(delta(u * u).is_zero());
        if (delta(u).is_zero())
            CHECK(u * v == v * u); // ker delta is central
    }
}

TEST_CASE("truncated tables drop high monomials") {
    auto t = make_table({{"a", true}}, 2);
    TwistedElement a = TwistedElement::generator(t, 0);
    CHECK((a * a * a).is_zero());
    CHECK_FALSE((a * a).is_zero());
}

TEST_CASE("text round trip") {
    auto t = make_table({{"x", true}, {"y", true}});
    TwistedElement e = parse_element(t, "x^2*y + x'*y'");
    CHECK(to_string(e) == "x^2*y + x'*y'");
    CHECK(parse_element(t, to_string(e)) == e);
    CHECK(parse_element(t, "0").is_zero());
    CHECK(parse_element(t, "1") == TwistedElement::one(t));
    CHECK_THROWS_AS(parse_element(t, "z"), std::invalid_argument);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        TwistedElement r = random_element(t, rng);
        CHECK(parse_element(t, to_string(r)) == r);
    }
}
