#pragma once

// F2-exact symbolic kernel for commutative algebras in Ver4+: generators
// with square-zero primed partners, the rewrite ab = ba + a'b', the
// derivation delta, and optional truncation by total degree. Normal form:
// unprimed factors sorted by the fixed generator order times a squarefree
// set of primed factors; primed elements are central.

#include <bit>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ver4 {

struct VarTable {
    struct Gen {
        std::string name;
        bool has_prime = true; // false: the generator lies in ker delta
    };
    std::vector<Gen> gens;
    int trunc_degree = 0; // 0 = no truncation

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name)
                return static_cast<int>(i);
        return -1;
    }
};

using VarTableRef = std::shared_ptr<const VarTable>;

inline VarTableRef make_table(std::vector<VarTable::Gen> gens, int trunc = 0) {
    if (gens.size() > 64)
        throw std::invalid_argument("VarTable: at most 64 generators supported");
    auto t = std::make_shared<VarTable>();
    t->gens = std::move(gens);
    t->trunc_degree = trunc;
    return t;
}

// Normal-form monomial: exponents over the unprimed generators plus a
// squarefree subset of primed ones.
struct Monomial {
    std::vector<int> exps;
    uint64_t primes = 0;

    int degree() const {
        int d = std::popcount(primes);
        for (int e : exps)
            d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps && primes == o.primes; }
    bool operator<(const Monomial& o) const {
        if (exps != o.exps)
            return exps < o.exps;
        return primes < o.primes;
    }
};

// A generator occurrence inside an input word.
struct Letter {
    int gen = 0;
    bool primed = false;
};

class TwistedElement {
public:
    TwistedElement() = default;
    explicit TwistedElement(VarTableRef table) : table_(std::move(table)) {}

    static TwistedElement zero(VarTableRef table) { return TwistedElement(std::move(table)); }
    static TwistedElement one(VarTableRef table) {
        TwistedElement e(std::move(table));
        e.toggle(Monomial{std::vector<int>(e.table_->gens.size(), 0), 0});
        return e;
    }
    static TwistedElement generator(VarTableRef table, int i) {
        TwistedElement e(std::move(table));
        Monomial m{std::vector<int>(e.table_->gens.size(), 0), 0};
        m.exps.at(i) = 1;
        e.toggle(m);
        return e;
    }
    static TwistedElement generator_prime(VarTableRef table, int i) {
        TwistedElement e(std::move(table));
        if (!e.table_->gens.at(i).has_prime)
            return e; // delta of a ker-delta generator
        Monomial m{std::vector<int>(e.table_->gens.size(), 0), uint64_t(1) << i};
        e.toggle(m);
        return e;
    }
    static TwistedElement from_monomial(VarTableRef table, const Monomial& m) {
        TwistedElement e(std::move(table));
        e.toggle(m);
        return e;
    }

    const VarTableRef& table() const { return table_; }
    const std::set<Monomial>& monomials() const { return monos_; }
    bool is_zero() const { return monos_.empty(); }

    // char-2 addition: symmetric difference of monomial sets.
    TwistedElement operator+(const TwistedElement& o) const {
        check_same_table(o);
        TwistedElement out(table_);
        out.monos_ = monos_;
        for (const auto& m : o.monos_)
            out.toggle(m);
        return out;
    }
    TwistedElement& operator+=(const TwistedElement& o) { return *this = *this + o; }

    TwistedElement operator*(const TwistedElement& o) const {
        check_same_table(o);
        TwistedElement out(table_);
        for (const auto& a : monos_)
            for (const auto& b : o.monos_) {
                if (a.primes & b.primes)
                    continue; // a primed factor squares to zero
                std::vector<Letter> word;
                append_letters(a, word);
                append_letters(b, word);
                out.accumulate_word(word, a.primes | b.primes);
            }
        return out;
    }
    TwistedElement& operator*=(const TwistedElement& o) { return *this = *this * o; }

    bool operator==(const TwistedElement& o) const { return monos_ == o.monos_; }
    bool operator!=(const TwistedElement& o) const { return !(*this == o); }
    bool operator<(const TwistedElement& o) const { return monos_ < o.monos_; }

    friend TwistedElement normalize(const VarTableRef& table, const std::vector<Letter>& word);
    friend TwistedElement delta(const TwistedElement& a);

private:
    void check_same_table(const TwistedElement& o) const {
        if (table_.get() != o.table_.get())
            throw std::invalid_argument("TwistedElement: mixed variable tables");
    }

    void toggle(const Monomial& m) {
        auto it = monos_.find(m);
        if (it == monos_.end())
            monos_.insert(m);
        else
            monos_.erase(it);
    }

    static void append_letters(const Monomial& m, std::vector<Letter>& word) {
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e)
                word.push_back({static_cast<int>(i), false});
    }

    // Rewrites an unprimed word (with an already-collected prime mask) to
    // normal form and XORs the resulting monomials in. Each out-of-order
    // swap spawns a branch with the two letters turned into primes; the
    // unprimed length strictly drops on spawned branches, so this
    // terminates.
    void accumulate_word(std::vector<Letter> letters, uint64_t primes0) {
        const int ngen = static_cast<int>(table_->gens.size());
        struct Item {
            std::vector<int> word;
            uint64_t primes;
        };
        std::vector<Item> stack;
        {
            Item it;
            it.primes = primes0;
            bool dead = false;
            for (const Letter& l : letters) {
                if (l.gen < 0 || l.gen >= ngen)
                    throw std::invalid_argument("twisted: unknown generator index");
                if (l.primed) {
                    if (!table_->gens[l.gen].has_prime)
                        return; // whole word contains a zero factor
                    const uint64_t bit = uint64_t(1) << l.gen;
                    if (it.primes & bit) {
                        dead = true;
                        break;
                    }
                    it.primes |= bit;
                } else {
                    it.word.push_back(l.gen);
                }
            }
            if (dead)
                return;
            stack.push_back(std::move(it));
        }
        const int trunc = table_->trunc_degree;
        while (!stack.empty()) {
            Item cur = std::move(stack.back());
            stack.pop_back();
            if (trunc > 0 &&
                static_cast<int>(cur.word.size()) + std::popcount(cur.primes) > trunc)
                continue;
            bool sorted = false;
            while (!sorted) {
                sorted = true;
                for (std::size_t k = 0; k + 1 < cur.word.size(); ++k) {
                    if (cur.word[k] > cur.word[k + 1]) {
                        const int a = cur.word[k], b = cur.word[k + 1];
                        // branch: both letters become primes
                        if (table_->gens[a].has_prime && table_->gens[b].has_prime) {
                            const uint64_t mask = (uint64_t(1) << a) | (uint64_t(1) << b);
                            if (!(cur.primes & mask)) {
                                Item spawn;
                                spawn.primes = cur.primes | mask;
                                spawn.word.reserve(cur.word.size() - 2);
                                spawn.word.insert(spawn.word.end(), cur.word.begin(),
                                                  cur.word.begin() + k);
                                spawn.word.insert(spawn.word.end(), cur.word.begin() + k + 2,
                                                  cur.word.end());
                                stack.push_back(std::move(spawn));
                            }
                        }
                        std::swap(cur.word[k], cur.word[k + 1]);
                        sorted = false;
                    }
                }
            }
            Monomial m{std::vector<int>(ngen, 0), cur.primes};
            for (int g : cur.word)
                ++m.exps[g];
            toggle(m);
        }
    }

    VarTableRef table_;
    std::set<Monomial> monos_;
};

// Canonical form of a word of generator symbols.
inline TwistedElement normalize(const VarTableRef& table, const std::vector<Letter>& word) {
    TwistedElement out(table);
    out.accumulate_word(word, 0);
    return out;
}

// Leibniz extension of g -> g', g' -> 0.
inline TwistedElement delta(const TwistedElement& a) {
    TwistedElement out(a.table());
    for (const auto& m : a.monomials()) {
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (!(m.exps[i] & 1))
                continue; // even exponents die in char 2
            if (!a.table()->gens[i].has_prime)
                continue;
            const uint64_t bit = uint64_t(1) << i;
            if (m.primes & bit)
                continue; // the primed factor is already present
            Monomial d = m;
            --d.exps[i];
            d.primes |= bit;
            out.toggle(d);
        }
    }
    return out;
}

inline TwistedElement pow(const TwistedElement& a, int k) {
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    TwistedElement out = TwistedElement::one(a.table());
    for (int i = 0; i < k; ++i)
        out = out * a;
    return out;
}

// True iff every monomial contains a primed factor (equivalently, the
// element lies in the ideal generated by the image of delta).
inline bool in_delta_ideal(const TwistedElement& a) {
    for (const auto& m : a.monomials())
        if (m.primes == 0)
            return false;
    return true;
}

inline std::string to_string(const TwistedElement& a) {
    if (a.is_zero())
        return "0";
    std::string s;
    bool first_mono = true;
    for (const auto& m : a.monomials()) {
        if (!first_mono)
            s += " + ";
        first_mono = false;
        std::string ms;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (!m.exps[i])
                continue;
            if (!ms.empty())
                ms += '*';
            ms += a.table()->gens[i].name;
            if (m.exps[i] > 1)
                ms += "^" + std::to_string(m.exps[i]);
        }
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.primes & (uint64_t(1) << i)) {
                if (!ms.empty())
                    ms += '*';
                ms += a.table()->gens[i].name + "'";
            }
        s += ms.empty() ? "1" : ms;
    }
    return s;
}

// Parses the canonical text form, e.g. "x^2*y + x'*y'".
inline TwistedElement parse_element(const VarTableRef& table, const std::string& text) {
    auto trim = [](std::string s) {
        const char* ws = " \t";
        auto b = s.find_first_not_of(ws);
        if (b == std::string::npos)
            return std::string();
        auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    TwistedElement out = TwistedElement::zero(table);
    std::string body = trim(text);
    if (body.empty() || body == "0")
        return out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t next = body.find('+', pos);
        std::string mono = trim(body.substr(pos, next == std::string::npos ? next : next - pos));
        if (mono.empty())
            throw std::invalid_argument("parse_element: empty summand");
        std::vector<Letter> word;
        bool zero_mono = false;
        std::size_t tpos = 0;
        while (tpos <= mono.size()) {
            std::size_t tnext = mono.find('*', tpos);
            std::string tok =
                trim(mono.substr(tpos, tnext == std::string::npos ? tnext : tnext - tpos));
            if (tok.empty())
                throw std::invalid_argument("parse_element: empty factor");
            if (tok != "1") {
                int exp = 1;
                auto caret = tok.find('^');
                if (caret != std::string::npos) {
                    exp = std::stoi(tok.substr(caret + 1));
                    if (exp < 0)
                        throw std::invalid_argument("parse_element: negative exponent");
                    tok = trim(tok.substr(0, caret));
                }
                bool primed = false;
                if (!tok.empty() && tok.back() == '\'') {
                    primed = true;
                    tok.pop_back();
                }
                int idx = table->index_of(tok);
                if (idx < 0)
                    throw std::invalid_argument("parse_element: unknown generator '" + tok + "'");
                if (primed && exp > 1)
                    zero_mono = true; // (g')^2 = 0
                for (int e = 0; e < exp && !zero_mono; ++e)
                    word.push_back({idx, primed});
            }
            if (tnext == std::string::npos)
                break;
            tpos = tnext + 1;
        }
        if (!zero_mono)
            out += normalize(table, word);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

}  // namespace ver4
