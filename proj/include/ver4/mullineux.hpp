#pragma once

// The characteristic-2 Mullineux-analogue M(lambda): the rim algorithm,
// the independent odd-reflection computation, and the chi^mu-twisted
// general form.

#include <stdexcept>
#include <vector>

#include "ver4/partition.hpp"
#include "ver4/weight.hpp"

namespace ver4 {

// M(lambda) as a sequence of GL(P)-labels, trailing trivial labels
// stripped.
using MSequence = std::vector<GLPLabel>;

inline void strip_trailing_trivial(MSequence& m) {
    while (!m.empty() && m.back().trivial())
        m.pop_back();
}

// M by iterated 4-segment removal. With |j(mu)| = 4q + r the next label is
// chi^q times: T2 (r=2); T1 / xi T1 (r=1, mu_1 odd / even); T3 / xi T3
// (r=3, mu_1 odd / even); 1 / xi (r=0, mu_1 even / odd).
inline MSequence m_rim(const Partition& lam) {
    require_two_restricted(lam, "m_rim");
    MSequence out;
    Partition mu = lam;
    while (!mu.empty()) {
        const int s = static_cast<int>(j_set(mu).size());
        const int q = s / 4, r = s % 4;
        const bool odd1 = mu.part(1) & 1;
        GLPLabel t;
        switch (r) {
            case 0: t = GLPLabel(q, 0, odd1); break;
            case 1: t = GLPLabel(q, 1, !odd1); break;
            case 2: t = GLPLabel(q, 2, false); break;
            default: t = GLPLabel(q, 3, !odd1); break;
        }
        out.push_back(t);
        mu = j_apply(mu);
    }
    strip_trailing_trivial(out);
    return out;
}

// Independent oracle: embeds lambda as the GL(m+nP) weight (lambda | 1^n)
// with n = ceil((|lambda|+1)/4) and runs the full reflection chain. A
// nonzero residual integer part signals a table or segment-rule fault and
// is reported as a hard error.
inline MSequence m_reflect(const Partition& lam,
                           ReflectTable table = ReflectTable::Corrected,
                           int width = -1) {
    require_two_restricted(lam, "m_reflect");
    const int m = lam.length();
    const int n = width >= 0 ? width : (lam.size() + 1 + 3) / 4;
    Weight w;
    w.zpart = lam.parts;
    w.tpart.assign(n, GLPLabel());
    w = borel_chain(w, table);
    for (int z : w.zpart)
        if (z != 0)
            throw std::logic_error("m_reflect: nonzero residual integer part");
    MSequence out = w.tpart;
    strip_trailing_trivial(out);
    return out;
}

// Componentwise chi^{mu_j} twist, padding both inputs to length n.
inline MSequence chi_mul(const MSequence& labels, const Partition& mu, int n) {
    if (static_cast<int>(labels.size()) > n)
        throw std::invalid_argument("chi_mul: label sequence longer than n");
    if (mu.length() > n)
        throw std::invalid_argument("chi_mul: mu longer than n");
    MSequence out(n);
    for (int j = 0; j < n; ++j) {
        GLPLabel t = j < static_cast<int>(labels.size()) ? labels[j] : GLPLabel();
        out[j] = chi_shift(t, mu.part(j + 1));
    }
    return out;
}

// For arbitrary lambda: the B(nP+m)-highest weight of L(lambda | chi^mu),
// namely (lambda^* | chi^mu * M(lambda-bar)). The integer part is
// lambda^* padded to the length of lambda.
inline Weight m_general(const Partition& lam, const Partition& mu, int n) {
    auto [bar, star] = restricted_even_decompose(lam);
    Weight w;
    w.zpart.assign(lam.length(), 0);
    for (int i = 1; i <= star.length(); ++i)
        w.zpart[i - 1] = star.part(i);
    w.tpart = chi_mul(m_rim(bar), mu, n);
    return w;
}

// Closed form on oddly regular partitions: per pair (lambda_{2i-1},
// lambda_{2i}) with sum 4q + r the label is chi^q times T1 (odd, even),
// T2 (both odd), xi T3 (even, odd), 1 (both even).
inline MSequence m_oddly_regular(const Partition& lam) {
    if (!is_oddly_regular(lam))
        throw std::invalid_argument("m_oddly_regular: partition is not oddly regular");
    MSequence out;
    for (int i = 1; i <= lam.length(); i += 2) {
        const int a = lam.part(i), b = lam.part(i + 1);
        const int q = (a + b) / 4;
        GLPLabel t;
        if ((a & 1) && !(b & 1))
            t = GLPLabel(q, 1, false);
        else if ((a & 1) && (b & 1))
            t = GLPLabel(q, 2, false);
        else if (!(a & 1) && (b & 1))
            t = GLPLabel(q, 3, true);
        else
            t = GLPLabel(q, 0, false);
        out.push_back(t);
    }
    strip_trailing_trivial(out);
    return out;
}

}  // namespace ver4
