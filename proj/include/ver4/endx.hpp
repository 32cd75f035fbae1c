#pragma once

// The coordinate bialgebra of End(m + nP): generator table, the
// multiplicative and additive coproducts, primitive subcoalgebras C_X^d by
// exact GF(2) linear algebra, the subcoalgebra membership check, and the
// degree-wise image of the squared divided power on Sym(P).

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ver4/gf2.hpp"
#include "ver4/twisted.hpp"

namespace ver4 {

// Element of the braided tensor square, kept as an F2 set of monomial
// pairs. Multiplication uses (a x b)(c x d) = ac x bd + a dc' x db' d via
// the R-matrix.
class Tensor2 {
public:
    explicit Tensor2(VarTableRef table) : table_(std::move(table)) {}

    static Tensor2 zero(VarTableRef t) { return Tensor2(std::move(t)); }
    static Tensor2 one(VarTableRef t) {
        Tensor2 out(t);
        Monomial u{std::vector<int>(t->gens.size(), 0), 0};
        out.toggle({u, u});
        return out;
    }
    static Tensor2 of(const TwistedElement& a, const TwistedElement& b) {
        Tensor2 out(a.table());
        for (const auto& p : a.monomials())
            for (const auto& q : b.monomials())
                out.toggle({p, q});
        return out;
    }

    const VarTableRef& table() const { return table_; }
    const std::set<std::pair<Monomial, Monomial>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Tensor2 operator+(const Tensor2& o) const {
        Tensor2 out = *this;
        for (const auto& t : o.terms_)
            out.toggle(t);
        return out;
    }
    Tensor2& operator+=(const Tensor2& o) { return *this = *this + o; }

    Tensor2 operator*(const Tensor2& o) const {
        Tensor2 out(table_);
        for (const auto& [a, b] : terms_)
            for (const auto& [c, d] : o.terms_) {
                TwistedElement ea = TwistedElement::from_monomial(table_, a);
                TwistedElement eb = TwistedElement::from_monomial(table_, b);
                TwistedElement ec = TwistedElement::from_monomial(table_, c);
                TwistedElement ed = TwistedElement::from_monomial(table_, d);
                out += of(ea * ec, eb * ed);
                out += of(ea * delta(ec), delta(eb) * ed);
            }
        return out;
    }
    Tensor2& operator*=(const Tensor2& o) { return *this = *this * o; }

    bool operator==(const Tensor2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    void toggle(const std::pair<Monomial, Monomial>& t) {
        auto it = terms_.find(t);
        if (it == terms_.end())
            terms_.insert(t);
        else
            terms_.erase(it);
    }

private:
    VarTableRef table_;
    std::set<std::pair<Monomial, Monomial>> terms_;
};

// delta x 1 + 1 x delta on the tensor square.
inline Tensor2 tensor_delta(const Tensor2& t) {
    Tensor2 out(t.table());
    for (const auto& [a, b] : t.terms()) {
        TwistedElement ea = TwistedElement::from_monomial(t.table(), a);
        TwistedElement eb = TwistedElement::from_monomial(t.table(), b);
        out += Tensor2::of(delta(ea), eb);
        out += Tensor2::of(ea, delta(eb));
    }
    return out;
}

// Generators F_{ij} (in ker delta), B, C, D, E with primed partners, and
// the coproducts on them.
class EndAlgebra {
public:
    EndAlgebra(int m, int n) : m_(m), n_(n) {
        if (m < 0 || n < 0 || (m == 0 && n == 0))
            throw std::invalid_argument("EndAlgebra: need m + n > 0");
        std::vector<VarTable::Gen> gens;
        auto add = [&](char fam, int i, int j, bool has_prime) {
            gens.push_back({std::string(1, fam) + std::to_string(i + 1) + std::to_string(j + 1),
                            has_prime});
        };
        f0_ = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                add('F', i, j, false);
        b0_ = static_cast<int>(gens.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                add('B', i, j, true);
        c0_ = static_cast<int>(gens.size());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                add('C', i, j, true);
        d0_ = static_cast<int>(gens.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                add('D', i, j, true);
        e0_ = static_cast<int>(gens.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                add('E', i, j, true);
        table_ = make_table(std::move(gens));
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const VarTableRef& table() const { return table_; }

    int fgen(int i, int j) const { return f0_ + i * m_ + j; }
    int bgen(int i, int j) const { return b0_ + i * m_ + j; }
    int cgen(int i, int j) const { return c0_ + i * n_ + j; }
    int dgen(int i, int j) const { return d0_ + i * n_ + j; }
    int egen(int i, int j) const { return e0_ + i * n_ + j; }

    TwistedElement gen(int idx) const { return TwistedElement::generator(table_, idx); }
    TwistedElement gen_prime(int idx) const { return TwistedElement::generator_prime(table_, idx); }

    // Multiplicative coproduct on a single generator or its prime.
    Tensor2 delta_times_letter(int idx, bool primed) const {
        auto key = std::make_pair(idx, primed);
        auto it = times_cache_.find(key);
        if (it != times_cache_.end())
            return it->second;
        Tensor2 t = primed ? tensor_delta(delta_times_letter(idx, false))
                           : delta_times_unprimed(idx);
        times_cache_.emplace(key, t);
        return t;
    }

    Tensor2 delta_plus_letter(int idx, bool primed) const {
        TwistedElement g = primed ? gen_prime(idx) : gen(idx);
        TwistedElement u = TwistedElement::one(table_);
        Tensor2 out = Tensor2::of(g, u);
        out += Tensor2::of(u, g);
        return out;
    }

    Tensor2 delta_times(const TwistedElement& a) const { return coproduct(a, true); }
    Tensor2 delta_plus(const TwistedElement& a) const { return coproduct(a, false); }

private:
    Tensor2 delta_times_unprimed(int idx) const {
        Tensor2 out = Tensor2::zero(table_);
        auto add = [&](const TwistedElement& l, const TwistedElement& r) {
            out += Tensor2::of(l, r);
        };
        const int rel = idx - (idx >= e0_   ? e0_
                               : idx >= d0_ ? d0_
                               : idx >= c0_ ? c0_
                               : idx >= b0_ ? b0_
                                            : 0);
        if (idx < b0_) { // F_ij
            const int i = rel / m_, j = rel % m_;
            for (int k = 0; k < m_; ++k)
                add(gen(fgen(i, k)), gen(fgen(k, j)));
            for (int k = 0; k < n_; ++k) {
                add(gen(cgen(i, k)), gen_prime(bgen(k, j)));
                add(gen_prime(cgen(i, k)), gen(bgen(k, j)));
            }
        } else if (idx < c0_) { // B_ij
            const int i = rel / m_, j = rel % m_;
            for (int k = 0; k < m_; ++k)
                add(gen(bgen(i, k)), gen(fgen(k, j)));
            for (int k = 0; k < n_; ++k) {
                add(gen(egen(i, k)), gen_prime(bgen(k, j)));
                add(gen(dgen(i, k)) + gen_prime(egen(i, k)), gen(bgen(k, j)));
            }
        } else if (idx < d0_) { // C_ij
            const int i = rel / n_, j = rel % n_;
            for (int k = 0; k < m_; ++k)
                add(gen(fgen(i, k)), gen(cgen(k, j)));
            for (int k = 0; k < n_; ++k) {
                add(gen(cgen(i, k)), gen(dgen(k, j)));
                add(gen_prime(cgen(i, k)), gen(egen(k, j)));
            }
        } else if (idx < e0_) { // D_ij
            const int i = rel / n_, j = rel % n_;
            for (int k = 0; k < m_; ++k)
                add(gen_prime(bgen(i, k)), gen(cgen(k, j)));
            for (int k = 0; k < n_; ++k) {
                add(gen(dgen(i, k)), gen(dgen(k, j)));
                add(gen_prime(dgen(i, k)), gen(egen(k, j)));
            }
        } else { // E_ij
            const int i = rel / n_, j = rel % n_;
            for (int k = 0; k < m_; ++k)
                add(gen(bgen(i, k)), gen(cgen(k, j)));
            for (int k = 0; k < n_; ++k) {
                add(gen(egen(i, k)), gen(dgen(k, j)));
                add(gen(dgen(i, k)) + gen_prime(egen(i, k)), gen(egen(k, j)));
            }
        }
        return out;
    }

    // Coproducts extend to monomials as algebra morphisms into the braided
    // tensor square; a normal-form monomial is the ordered product of its
    // letters.
    Tensor2 coproduct(const TwistedElement& a, bool times) const {
        if (a.table().get() != table_.get())
            throw std::invalid_argument("EndAlgebra: element from another table");
        Tensor2 out = Tensor2::zero(table_);
        for (const auto& mono : a.monomials()) {
            Tensor2 acc = Tensor2::one(table_);
            for (std::size_t i = 0; i < mono.exps.size(); ++i)
                for (int e = 0; e < mono.exps[i]; ++e)
                    acc *= times ? delta_times_letter(static_cast<int>(i), false)
                                 : delta_plus_letter(static_cast<int>(i), false);
            for (std::size_t i = 0; i < mono.exps.size(); ++i)
                if (mono.primes & (uint64_t(1) << i))
                    acc *= times ? delta_times_letter(static_cast<int>(i), true)
                                 : delta_plus_letter(static_cast<int>(i), true);
            out += acc;
        }
        return out;
    }

    int m_, n_;
    int f0_ = 0, b0_ = 0, c0_ = 0, d0_ = 0, e0_ = 0;
    VarTableRef table_;
    mutable std::map<std::pair<int, bool>, Tensor2> times_cache_;
};

// Basis of the degree-d piece of Sym(End(X)) (or of any twisted table).
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> basis;
    std::map<Monomial, int> index;
};

inline GradedPiece graded_piece(const VarTableRef& table, int d) {
    GradedPiece out;
    out.degree = d;
    const int ngen = static_cast<int>(table->gens.size());
    Monomial cur{std::vector<int>(ngen, 0), 0};
    // generator-by-generator choice of exponent and prime flag
    std::function<void(int, int)> rec = [&](int g, int left) {
        if (g == ngen) {
            if (left == 0) {
                out.index.emplace(cur, static_cast<int>(out.basis.size()));
                out.basis.push_back(cur);
            }
            return;
        }
        const bool hp = table->gens[g].has_prime;
        for (int p = 0; p <= (hp ? 1 : 0); ++p) {
            if (p)
                cur.primes |= uint64_t(1) << g;
            for (int e = 0; e + p <= left; ++e) {
                cur.exps[g] = e;
                rec(g + 1, left - e - p);
            }
            cur.exps[g] = 0;
            if (p)
                cur.primes &= ~(uint64_t(1) << g);
        }
    };
    rec(0, d);
    return out;
}

namespace detail {
inline BitMatrix gf2_combine(const BitMatrix& combos, const BitMatrix& rows) {
    BitMatrix out(combos.rows(), rows.cols());
    for (std::size_t s = 0; s < combos.rows(); ++s)
        for (std::size_t t = 0; t < combos.cols(); ++t)
            if (combos.get(s, t))
                for (std::size_t c = 0; c < rows.cols(); ++c)
                    if (rows.get(t, c))
                        out.flip(s, c);
    return out;
}
}  // namespace detail

// Basis of C_X^d: the kernel of v -> Delta_+(v) - v x 1 - 1 x v on the
// degree-d piece, computed bidegree by bidegree.
inline std::vector<TwistedElement> primitives(int m, int n, int d) {
    if (d < 1)
        throw std::invalid_argument("primitives: d must be positive");
    EndAlgebra alg(m, n);
    const VarTableRef& table = alg.table();
    GradedPiece piece = graded_piece(table, d);
    const int B = static_cast<int>(piece.basis.size());

    std::vector<GradedPiece> lower(d);
    for (int i = 1; i < d; ++i)
        lower[i] = graded_piece(table, i);

    // defect terms (bidegree, left index, right index) per basis monomial
    Monomial unit{std::vector<int>(table->gens.size(), 0), 0};
    std::vector<std::vector<std::tuple<int, int, int>>> defect(B);
    for (int a = 0; a < B; ++a) {
        Tensor2 t = alg.delta_plus(TwistedElement::from_monomial(table, piece.basis[a]));
        t.toggle({piece.basis[a], unit});
        t.toggle({unit, piece.basis[a]});
        for (const auto& [l, r] : t.terms()) {
            const int dl = l.degree();
            if (dl <= 0 || dl >= d)
                throw std::logic_error("primitives: defect term outside middle bidegrees");
            defect[a].push_back({dl, lower[dl].index.at(l), lower[d - dl].index.at(r)});
        }
    }

    BitMatrix kernel(B, B); // rows: current kernel basis over monomial coordinates
    for (int a = 0; a < B; ++a)
        kernel.set(a, a);
    for (int i = 1; i < d && kernel.rows() > 0; ++i) {
        // images of the current kernel basis in bidegree (i, d-i); the
        // sought combinations are the nullspace of the transposed matrix
        std::map<std::pair<int, int>, int> rowid;
        std::vector<std::vector<int>> images(kernel.rows());
        for (std::size_t k = 0; k < kernel.rows(); ++k)
            for (int a = 0; a < B; ++a) {
                if (!kernel.get(k, a))
                    continue;
                for (const auto& [dl, li, ri] : defect[a]) {
                    if (dl != i)
                        continue;
                    auto it = rowid.emplace(std::make_pair(li, ri),
                                            static_cast<int>(rowid.size())).first;
                    images[k].push_back(it->second);
                }
            }
        BitMatrix a(rowid.empty() ? 1 : rowid.size(), kernel.rows());
        for (std::size_t k = 0; k < images.size(); ++k)
            for (int r : images[k])
                a.flip(r, k);
        kernel = detail::gf2_combine(a.nullspace(), kernel);
    }

    std::vector<TwistedElement> out;
    for (std::size_t rrow = 0; rrow < kernel.rows(); ++rrow) {
        TwistedElement e = TwistedElement::zero(table);
        for (int a = 0; a < B; ++a)
            if (kernel.get(rrow, a))
                e += TwistedElement::from_monomial(table, piece.basis[a]);
        out.push_back(std::move(e));
    }
    return out;
}

// Delta_times(C_X^d) inside C_X^d x C_X^d?
inline bool subcoalgebra_check(int m, int n, int d) {
    EndAlgebra alg(m, n);
    const VarTableRef& table = alg.table();
    GradedPiece piece = graded_piece(table, d);
    std::vector<TwistedElement> prim = primitives(m, n, d);

    GF2Span span(piece.basis.size());
    for (const auto& p : prim) {
        auto v = GF2Span::zero_vec(piece.basis.size());
        for (const auto& mono : p.monomials())
            GF2Span::set_bit(v, piece.index.at(mono));
        span.insert(std::move(v));
    }
    auto in_span = [&](const std::map<Monomial, std::vector<uint64_t>>& grouped) {
        for (const auto& [key, vec] : grouped)
            if (!span.contains(vec))
                return false;
        return true;
    };
    for (const auto& p : prim) {
        Tensor2 t = alg.delta_times(p);
        std::map<Monomial, std::vector<uint64_t>> by_left, by_right;
        for (const auto& [l, r] : t.terms()) {
            auto [itl, newl] = by_left.emplace(l, GF2Span::zero_vec(piece.basis.size()));
            GF2Span::set_bit(itl->second, piece.index.at(r));
            auto [itr, newr] = by_right.emplace(r, GF2Span::zero_vec(piece.basis.size()));
            GF2Span::set_bit(itr->second, piece.index.at(l));
        }
        if (!in_span(by_left) || !in_span(by_right))
            return false;
    }
    return true;
}

// Delta_times on d-th powers of the five generator families against the
// displayed closed forms (d a power of 2, at least 4):
//   F^d -> sum F x F,  B^d -> sum B x F + D x B,  C^d -> sum F x C + C x D,
//   D^d -> sum D x D,  E^d -> sum B x C + E x D + D x E  (d-th powers).
inline bool power_coproduct_matches_display(int m, int n, int d) {
    EndAlgebra alg(m, n);
    auto pw = [&](int idx) { return pow(alg.gen(idx), d); };
    auto check = [&](int idx, const Tensor2& expect) {
        return alg.delta_times(pw(idx)) == expect;
    };
    const VarTableRef& t = alg.table();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Tensor2 e = Tensor2::zero(t);
            for (int k = 0; k < m; ++k)
                e += Tensor2::of(pw(alg.fgen(i, k)), pw(alg.fgen(k, j)));
            if (!check(alg.fgen(i, j), e))
                return false;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Tensor2 e = Tensor2::zero(t);
            for (int k = 0; k < m; ++k)
                e += Tensor2::of(pw(alg.bgen(i, k)), pw(alg.fgen(k, j)));
            for (int k = 0; k < n; ++k)
                e += Tensor2::of(pw(alg.dgen(i, k)), pw(alg.bgen(k, j)));
            if (!check(alg.bgen(i, j), e))
                return false;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Tensor2 e = Tensor2::zero(t);
            for (int k = 0; k < m; ++k)
                e += Tensor2::of(pw(alg.fgen(i, k)), pw(alg.cgen(k, j)));
            for (int k = 0; k < n; ++k)
                e += Tensor2::of(pw(alg.cgen(i, k)), pw(alg.dgen(k, j)));
            if (!check(alg.cgen(i, j), e))
                return false;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Tensor2 e = Tensor2::zero(t);
            for (int k = 0; k < n; ++k)
                e += Tensor2::of(pw(alg.dgen(i, k)), pw(alg.dgen(k, j)));
            if (!check(alg.dgen(i, j), e))
                return false;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Tensor2 e = Tensor2::zero(t);
            for (int k = 0; k < m; ++k)
                e += Tensor2::of(pw(alg.bgen(i, k)), pw(alg.cgen(k, j)));
            for (int k = 0; k < n; ++k) {
                e += Tensor2::of(pw(alg.egen(i, k)), pw(alg.dgen(k, j)));
                e += Tensor2::of(pw(alg.dgen(i, k)), pw(alg.egen(k, j)));
            }
            if (!check(alg.egen(i, j), e))
                return false;
        }
    return true;
}

// Image of Gamma^2 Sym(P) -> Sym(P) per degree up to max_degree: the
// braided-swap invariants of (R x R)_d multiplied into R_d, returned as a
// reduced spanning set.
inline std::vector<std::vector<TwistedElement>> gamma2_image(int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("gamma2_image: negative degree");
    VarTableRef table = make_table({{"x", true}});
    auto basis_of = [&](int k) {
        std::vector<Monomial> out;
        if (k == 0) {
            out.push_back(Monomial{{0}, 0});
        } else {
            out.push_back(Monomial{{k}, 0});
            out.push_back(Monomial{{k - 1}, 1});
        }
        return out;
    };
    std::vector<std::vector<TwistedElement>> result;
    for (int dd = 0; dd <= max_degree; ++dd) {
        std::vector<std::pair<Monomial, Monomial>> pairs;
        std::map<std::pair<Monomial, Monomial>, int> pidx;
        for (int du = 0; du <= dd; ++du)
            for (const auto& u : basis_of(du))
                for (const auto& v : basis_of(dd - du)) {
                    pidx.emplace(std::make_pair(u, v), static_cast<int>(pairs.size()));
                    pairs.emplace_back(u, v);
                }
        // columns of (c + id); invariant vectors are the nullspace
        BitMatrix mat(pairs.size(), pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& [u, v] = pairs[k];
            TwistedElement eu = TwistedElement::from_monomial(table, u);
            TwistedElement ev = TwistedElement::from_monomial(table, v);
            Tensor2 img = Tensor2::of(ev, eu) + Tensor2::of(delta(ev), delta(eu));
            for (const auto& t : img.terms())
                mat.flip(pidx.at(t), k);
            mat.flip(k, k);
        }
        BitMatrix inv = mat.nullspace();
        GF2Span span(basis_of(dd).size());
        std::map<Monomial, int> ridx;
        for (const auto& mono : basis_of(dd))
            ridx.emplace(mono, static_cast<int>(ridx.size()));
        std::vector<TwistedElement> span_elems;
        for (std::size_t r = 0; r < inv.rows(); ++r) {
            TwistedElement prod = TwistedElement::zero(table);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (inv.get(r, k))
                    prod += TwistedElement::from_monomial(table, pairs[k].first) *
                            TwistedElement::from_monomial(table, pairs[k].second);
            if (prod.is_zero())
                continue;
            auto vec = GF2Span::zero_vec(ridx.size());
            for (const auto& mono : prod.monomials())
                GF2Span::set_bit(vec, ridx.at(mono));
            if (span.insert(vec))
                span_elems.push_back(prod);
        }
        result.push_back(std::move(span_elems));
    }
    return result;
}

}  // namespace ver4
