#pragma once

// GL(m+nP) weights and odd reflections. A weight is an integer vector of
// length m together with a GL(P)-label vector of length n. The reflection
// R is a 14-entry table on (lam mod 2 | xi^eps T_r) extended by the shift
// rules R(2k+a | chi^l T) = 2k+b | chi^l T'.

#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ver4/glp_label.hpp"

namespace ver4 {

struct Weight {
    std::vector<int> zpart;
    std::vector<GLPLabel> tpart;

    int total_degree() const {
        int d = std::accumulate(zpart.begin(), zpart.end(), 0);
        for (const auto& t : tpart)
            d += degree(t);
        return d;
    }

    bool operator==(const Weight& o) const { return zpart == o.zpart && tpart == o.tpart; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
};

// The published table has one entry, R(0|T3), that breaks degree
// preservation; the corrected value chi*xi*T1 restores it and matches the
// shift-rule instance R(2q+2|T3) = 2q|chi*xi*T1 used elsewhere in the same
// source. Raw mode keeps the published value for audit runs.
enum class ReflectTable { Corrected, Raw };

struct ReflectEntry {
    int alpha;       // 0 or 1
    GLPLabel in;     // q = 0
    int beta;
    GLPLabel out;    // may carry chi
};

inline const std::array<ReflectEntry, 14>& reflect_entries(ReflectTable table) {
    static const std::array<ReflectEntry, 14> corrected = {{
        {0, {0, 0, false}, 0, {0, 0, false}},   // R(0|1)    = 0|1
        {1, {0, 0, false}, 0, {0, 1, false}},   // R(1|1)    = 0|T1
        {0, {0, 0, true}, -1, {0, 1, true}},    // R(0|xi)   = -1|xi T1
        {1, {0, 0, true}, 1, {0, 0, true}},     // R(1|xi)   = 1|xi
        {0, {0, 1, false}, -2, {0, 3, true}},   // R(0|T1)   = -2|xi T3
        {1, {0, 1, false}, 0, {0, 2, false}},   // R(1|T1)   = 0|T2
        {0, {0, 1, true}, -1, {0, 2, false}},   // R(0|xi T1)= -1|T2
        {1, {0, 1, true}, -1, {0, 3, false}},   // R(1|xi T1)= -1|T3
        {0, {0, 2, false}, -1, {0, 3, true}},   // R(0|T2)   = -1|xi T3
        {1, {0, 2, false}, 0, {0, 3, false}},   // R(1|T2)   = 0|T3
        {0, {0, 3, false}, -2, {1, 1, true}},   // R(0|T3)   = -2|chi xi T1 (corrected)
        {1, {0, 3, false}, 0, {1, 0, true}},    // R(1|T3)   = 0|chi xi
        {0, {0, 3, true}, -1, {1, 0, false}},   // R(0|xi T3)= -1|chi
        {1, {0, 3, true}, -1, {1, 1, false}},   // R(1|xi T3)= -1|chi T1
    }};
    static const std::array<ReflectEntry, 14> raw = [] {
        auto t = corrected;
        t[10].out = GLPLabel(0, 1, true);       // published: R(0|T3) = -2|xi T1
        return t;
    }();
    return table == ReflectTable::Raw ? raw : corrected;
}

// One odd reflection on a GL(1+P) weight (lam | label).
inline std::pair<int, GLPLabel> reflect(int lam, const GLPLabel& label,
                                        ReflectTable table = ReflectTable::Corrected) {
    const int alpha = ((lam % 2) + 2) % 2;
    const int twok = lam - alpha;
    const int ell = label.q;
    const GLPLabel base(0, label.r, label.xi);
    for (const auto& e : reflect_entries(table)) {
        if (e.alpha == alpha && e.in == base)
            return {twok + e.beta, chi_shift(e.out, ell)};
    }
    throw std::logic_error("reflect: label not covered by the table");
}

// R_{ij}: reflects component i of the integer part against component j of
// the label part (both 1-based).
inline Weight reflect_weight(const Weight& w, int i, int j,
                             ReflectTable table = ReflectTable::Corrected) {
    if (i < 1 || i > static_cast<int>(w.zpart.size()))
        throw std::out_of_range("reflect_weight: index i out of range");
    if (j < 1 || j > static_cast<int>(w.tpart.size()))
        throw std::out_of_range("reflect_weight: index j out of range");
    Weight out = w;
    auto [lam, t] = reflect(w.zpart[i - 1], w.tpart[j - 1], table);
    out.zpart[i - 1] = lam;
    out.tpart[j - 1] = t;
    return out;
}

// Full Borel change: R_{m,1},...,R_{1,1}, then R_{m,2},...,R_{1,2}, and so
// on through the last label column. Yields the B(nP+m)-highest weight.
inline Weight borel_chain(const Weight& w, ReflectTable table = ReflectTable::Corrected) {
    Weight cur = w;
    const int m = static_cast<int>(w.zpart.size());
    const int n = static_cast<int>(w.tpart.size());
    for (int j = 1; j <= n; ++j)
        for (int i = m; i >= 1; --i)
            cur = reflect_weight(cur, i, j, table);
    return cur;
}

inline bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.zpart.size(); ++i)
        if (w.zpart[i] < w.zpart[i + 1])
            return false;
    for (std::size_t j = 0; j + 1 < w.tpart.size(); ++j)
        if (degree(w.tpart[j]) < degree(w.tpart[j + 1]))
            return false;
    return true;
}

}  // namespace ver4
