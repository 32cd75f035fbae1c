#pragma once

// Labels of simple GL(P)-representations: chi^q * xi^eps * T_r, graded by
// degree 4q + r. T_0 is the trivial representation; the degree-2 block
// carries no xi factor.

#include <stdexcept>
#include <tuple>

namespace ver4 {

struct GLPLabel {
    int q = 0;       // exponent of chi; may be negative in intermediate weights
    int r = 0;       // index of T_r, 0 <= r <= 3
    bool xi = false; // presence of the xi factor

    GLPLabel() = default;
    GLPLabel(int q_, int r_, bool xi_) : q(q_), r(r_), xi(xi_) {
        if (r < 0 || r > 3)
            throw std::invalid_argument("GLPLabel: r out of range");
        if (r == 2 && xi)
            throw std::invalid_argument("GLPLabel: degree-2 labels carry no xi");
    }

    bool trivial() const { return q == 0 && r == 0 && !xi; }

    bool operator==(const GLPLabel& o) const { return q == o.q && r == o.r && xi == o.xi; }
    bool operator!=(const GLPLabel& o) const { return !(*this == o); }
    bool operator<(const GLPLabel& o) const {
        return std::tie(q, r, xi) < std::tie(o.q, o.r, o.xi);
    }
};

inline int degree(const GLPLabel& t) { return 4 * t.q + t.r; }

// Multiplication by chi^k.
inline GLPLabel chi_shift(const GLPLabel& t, int k) { return GLPLabel(t.q + k, t.r, t.xi); }

// The simple polynomial GL(P)-representations: T_i (i >= 1), chi^i
// (i >= 0), xi chi^i (i >= 1), xi T_{4i+1} (i >= 1), xi T_{4i+3} (i >= 0),
// together with the unit. In degrees 0 and 1 only the unit and T_1 qualify.
inline bool is_polynomial_glp(const GLPLabel& t) {
    if (t.q < 0)
        return false;
    if (!t.xi)
        return true;
    switch (t.r) {
        case 0: return t.q >= 1; // xi chi^q
        case 1: return t.q >= 1; // xi T_{4q+1}
        case 3: return true;     // xi T_{4q+3}
        default: return false;   // r == 2 never carries xi
    }
}

}  // namespace ver4
