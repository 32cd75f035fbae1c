#pragma once

// Simple polynomial functor labels, their evaluation on objects m + nP,
// discerning/faithful predicates (closed form and brute force), the
// additive and exact functor catalogs, and the sVec predicates in odd
// characteristic.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ver4/mullineux.hpp"
#include "ver4/partition.hpp"
#include "ver4/weight.hpp"

namespace ver4 {

// Label (lambda, mu) of the simple polynomial functor of degree
// |lambda| + 4|mu|.
struct FunctorLabel {
    Partition lambda;
    Partition mu;

    int degree() const { return lambda.size() + 4 * mu.size(); }

    bool operator==(const FunctorLabel& o) const { return lambda == o.lambda && mu == o.mu; }
    bool operator!=(const FunctorLabel& o) const { return !(*this == o); }
};

// An object m*1 + n*P.
struct Ver4Object {
    int m = 0;
    int n = 0;
};

// Either zero or a simple GL(m+nP)-representation given by its highest
// weight (zpart of length m, tpart of length n).
struct EvalResult {
    std::optional<Weight> weight;

    bool zero() const { return !weight.has_value(); }
    static EvalResult make_zero() { return {}; }
    static EvalResult simple(Weight w) { return {std::move(w)}; }
};

// D_{lambda|mu}(m + nP): nonzero iff lambda[m] is 2-restricted,
// M(lambda[m]) fits in n labels and mu fits in n labels; the value is then
// L(lambda_1..lambda_m | chi^mu * M(lambda[m])).
inline EvalResult evaluate(const FunctorLabel& f, const Ver4Object& x) {
    if (x.m < 0 || x.n < 0)
        throw std::invalid_argument("evaluate: negative object multiplicities");
    Partition tail = truncate(f.lambda, x.m);
    if (!is_two_restricted(tail))
        return EvalResult::make_zero();
    MSequence mtail = m_rim(tail);
    if (static_cast<int>(mtail.size()) > x.n || f.mu.length() > x.n)
        return EvalResult::make_zero();
    Weight w;
    w.zpart.assign(x.m, 0);
    for (int i = 1; i <= std::min(x.m, f.lambda.length()); ++i)
        w.zpart[i - 1] = f.lambda.part(i);
    w.tpart = chi_mul(mtail, f.mu, x.n);
    return EvalResult::simple(std::move(w));
}

inline std::vector<FunctorLabel> enumerate_simple_functors(int d) {
    std::vector<FunctorLabel> out;
    for (auto& [lam, mu] : enumerate_label_pairs(d))
        out.push_back({lam, mu});
    return out;
}

// All degree-d labels with nonzero evaluation on x, paired with their
// highest weights.
inline std::vector<std::pair<FunctorLabel, Weight>> polynomial_simples_gl(const Ver4Object& x,
                                                                          int d) {
    std::vector<std::pair<FunctorLabel, Weight>> out;
    for (const auto& f : enumerate_simple_functors(d)) {
        EvalResult r = evaluate(f, x);
        if (!r.zero())
            out.emplace_back(f, *r.weight);
    }
    return out;
}

// Relative d-discerning, closed form.
inline bool is_discerning(const Ver4Object& x, int d) {
    if (d < 1)
        throw std::invalid_argument("is_discerning: d must be positive");
    const int m = x.m, n = x.n;
    switch (d) {
        case 1: return m >= 1 || n >= 1;
        case 2: return m + n >= 2 && m >= 1;
        case 3: return m >= 3 || (n >= 1 && m >= 1);
        default: return m >= d / 2 && n >= d / 4;
    }
}

inline bool is_discerning_bruteforce(const Ver4Object& x, int d) {
    if (d < 1)
        throw std::invalid_argument("is_discerning_bruteforce: d must be positive");
    for (const auto& f : enumerate_simple_functors(d))
        if (evaluate(f, x).zero())
            return false;
    return true;
}

// d-faithful, closed form: m + 4n >= d and m + 2n >= 1 + floor(d/2).
inline bool is_faithful(const Ver4Object& x, int d) {
    if (d < 1)
        throw std::invalid_argument("is_faithful: d must be positive");
    return x.m + 4 * x.n >= d && x.m + 2 * x.n >= 1 + d / 2;
}

// Brute force: the 2-restricted lambda |- d label the Young-module
// functors whose joint nonvanishing is faithfulness.
inline bool is_faithful_bruteforce(const Ver4Object& x, int d) {
    if (d < 1)
        throw std::invalid_argument("is_faithful_bruteforce: d must be positive");
    for (const auto& lam : enumerate_partitions(d)) {
        if (!is_two_restricted(lam))
            continue;
        if (evaluate({lam, Partition{}}, x).zero())
            return false;
    }
    return true;
}

// An indecomposable with its Loewy layers, top to socle.
struct LoewySeries {
    std::string name;
    std::vector<std::vector<FunctorLabel>> layers;
};

struct AdditiveCatalog {
    int degree = 0;
    std::vector<FunctorLabel> simples;
    std::vector<LoewySeries> indecomposables;
};

namespace detail {
inline bool is_power_of_two(int d) { return d >= 1 && (d & (d - 1)) == 0; }

inline std::string label_name(const FunctorLabel& f) {
    return "D[" + to_string(f.lambda) + "|" + to_string(f.mu) + "]";
}
}  // namespace detail

// The additive polynomial functors of degree d: empty unless d is a power
// of 2; a single simple for d = 1, 2; for d = 2^l, l >= 2 two simples and
// five indecomposables, with the length-3 projective injective
// P(D[0|d/4]) = I(D[0|d/4]).
inline AdditiveCatalog additive_catalog(int d) {
    if (d < 1)
        throw std::invalid_argument("additive_catalog: d must be positive");
    AdditiveCatalog cat;
    cat.degree = d;
    if (!detail::is_power_of_two(d))
        return cat;
    const FunctorLabel even{Partition{d}, Partition{}};
    if (d <= 2) {
        cat.simples = {even};
        cat.indecomposables = {{detail::label_name(even), {{even}}}};
        return cat;
    }
    const FunctorLabel odd{Partition{}, Partition{d / 4}};
    cat.simples = {even, odd};
    cat.indecomposables = {
        {detail::label_name(even), {{even}}},
        {detail::label_name(odd), {{odd}}},
        {"P(" + detail::label_name(even) + ")", {{even}, {odd}}},
        {"I(" + detail::label_name(even) + ")", {{odd}, {even}}},
        {"PI(" + detail::label_name(odd) + ")", {{odd}, {even}, {odd}}},
    };
    return cat;
}

// Exact polynomial functors: the identity in degree 1, the projective
// injective in degrees 2^l for l >= 2, nothing else.
inline std::vector<LoewySeries> exact_catalog(int d) {
    if (d < 1)
        throw std::invalid_argument("exact_catalog: d must be positive");
    if (d == 1) {
        const FunctorLabel id{Partition{1}, Partition{}};
        return {{detail::label_name(id), {{id}}}};
    }
    if (d == 2 || !detail::is_power_of_two(d))
        return {};
    auto cat = additive_catalog(d);
    return {cat.indecomposables.back()};
}

namespace detail {
// Shared case split for the sVec predicates; c = (p + n - m)/2 tracked as
// 2c to stay in integers.
inline bool svec_bound(int m, int n, int p, int d, bool discerning) {
    if (m < n)
        std::swap(m, n);
    if (n < 1)
        throw std::invalid_argument("svec: requires min(m, n) >= 1");
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("svec: p must be an odd prime");
    for (int f = 3; f * f <= p; f += 2)
        if (p % f == 0)
            throw std::invalid_argument("svec: p must be an odd prime");
    if (d < 1)
        throw std::invalid_argument("svec: d must be positive");
    const int twoc = p + n - m;
    int bound;
    if (discerning && twoc <= 0)
        bound = (n + 1) * p - 1;
    else if (twoc < 4)
        bound = m + (p - 1) * n;
    else if (twoc <= 2 * n)
        bound = (n + 1) * p - 1 - (twoc * twoc) / 4; // = ceil((n+1)p - 1 - c^2)
    else
        bound = m + n + m * n;
    return d <= bound;
}
}  // namespace detail

inline bool svec_faithful(int m, int n, int p, int d) {
    return detail::svec_bound(m, n, p, d, false);
}

inline bool svec_discerning(int m, int n, int p, int d) {
    return detail::svec_bound(m, n, p, d, true);
}

}  // namespace ver4
