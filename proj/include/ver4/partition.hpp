#pragma once

// Exact partition combinatorics: 2-restricted structure, rims, 4-segment
// removal and its iteration, enumeration of partitions and functor-label
// pairs.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ver4 {

// Weakly decreasing sequence of positive integers. Trailing zeros are
// trimmed on construction; the empty partition is allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    // part(i) is 1-based and 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts[i - 1] : 0;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// A (row, column) node of a Young diagram, 1-indexed.
using Node = std::pair<int, int>;
using NodeSet = std::set<Node>;

inline bool is_two_restricted(const Partition& lam) {
    for (int i = 1; i <= lam.length(); ++i)
        if (lam.part(i) - lam.part(i + 1) > 1)
            return false;
    return true;
}

inline void require_two_restricted(const Partition& lam, const char* who) {
    if (!is_two_restricted(lam))
        throw std::invalid_argument(std::string(who) + ": partition is not 2-restricted");
}

// Drops the first m parts: (lambda_{m+1}, lambda_{m+2}, ...).
inline Partition truncate(const Partition& lam, int m) {
    if (m < 0)
        throw std::invalid_argument("truncate: negative m");
    if (m >= lam.length())
        return Partition{};
    return Partition(std::vector<int>(lam.parts.begin() + m, lam.parts.end()));
}

// The unique componentwise split lambda = lbar + lstar with lbar
// 2-restricted and lstar an even partition. lbar is forced from the last
// row upward: consecutive candidates lbar[i+1], lbar[i+1]+1 have opposite
// parity, so the parity of lambda[i] picks exactly one.
inline std::pair<Partition, Partition> restricted_even_decompose(const Partition& lam) {
    const int n = lam.length();
    std::vector<int> bar(n, 0), star(n, 0);
    int below = 0;
    for (int i = n; i >= 1; --i) {
        int b = below + ((lam.part(i) - below) & 1);
        bar[i - 1] = b;
        star[i - 1] = lam.part(i) - b;
        below = b;
    }
    return {Partition(std::move(bar)), Partition(std::move(star))};
}

// Nodes (i,j) of lambda with (i+1, j+1) outside lambda.
inline NodeSet rim(const Partition& lam) {
    NodeSet out;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = std::max(1, lam.part(i + 1)); j <= lam.part(i); ++j)
            out.insert({i, j});
    return out;
}

namespace detail {
// Rim rows of each column, rows ascending; column c of a nonempty
// partition always has at least one rim node.
inline std::vector<std::vector<int>> rim_columns(const Partition& lam) {
    const int ncols = lam.part(1);
    std::vector<std::vector<int>> cols(ncols + 1);
    for (const auto& [i, j] : rim(lam))
        cols[j].push_back(i);
    return cols;
}

inline void take_bottom(const std::vector<int>& rows, int k, int col, NodeSet& out) {
    const int n = static_cast<int>(rows.size());
    for (int t = n - std::min(k, n); t < n; ++t)
        out.insert({rows[t], col});
}
}  // namespace detail

// Bottommost up-to-2 rim nodes of every column (the 2-rim).
inline NodeSet two_rim(const Partition& lam) {
    require_two_restricted(lam, "two_rim");
    NodeSet out;
    auto cols = detail::rim_columns(lam);
    for (int c = 1; c < static_cast<int>(cols.size()); ++c)
        detail::take_bottom(cols[c], 2, c, out);
    return out;
}

// The union of 4-segments. Columns are scanned left to right; a segment
// starting at column c takes
//   - the bottommost up-to-4 rim nodes of c when c is the last column,
//   - the bottommost 4 of c when its rim has >= 4 nodes (next segment at
//     c+1),
//   - otherwise the bottommost up-to-2 of c plus the bottommost up-to-2
//     of c+1 (next segment at c+2).
inline NodeSet j_set(const Partition& lam) {
    require_two_restricted(lam, "j_set");
    NodeSet out;
    if (lam.empty())
        return out;
    auto cols = detail::rim_columns(lam);
    const int ncols = lam.part(1);
    int c = 1;
    while (c <= ncols) {
        if (c == ncols) {
            detail::take_bottom(cols[c], 4, c, out);
            break;
        }
        if (static_cast<int>(cols[c].size()) >= 4) {
            detail::take_bottom(cols[c], 4, c, out);
            c += 1;
        } else {
            detail::take_bottom(cols[c], 2, c, out);
            detail::take_bottom(cols[c + 1], 2, c + 1, out);
            c += 2;
        }
    }
    return out;
}

// One removal step: lambda minus j_set(lambda), read as row lengths.
inline Partition j_apply(const Partition& lam) {
    NodeSet removed = j_set(lam);
    std::vector<int> counts(lam.length(), 0);
    for (const auto& [i, j] : removed)
        ++counts[i - 1];
    std::vector<int> rest(lam.length());
    for (int i = 0; i < lam.length(); ++i)
        rest[i] = lam.parts[i] - counts[i];
    // Removed nodes form a row suffix, so this is again a partition.
    for (std::size_t i = 0; i + 1 < rest.size(); ++i)
        if (rest[i] < rest[i + 1])
            throw std::logic_error("j_apply: removal did not leave a partition");
    return Partition(std::move(rest));
}

// [lambda, J(lambda), J^2(lambda), ..., ()].
inline std::vector<Partition> j_chain(const Partition& lam) {
    require_two_restricted(lam, "j_chain");
    std::vector<Partition> out{lam};
    while (!out.back().empty())
        out.push_back(j_apply(out.back()));
    return out;
}

// No index i with lambda_i = lambda_{i+1} = lambda_{i+2} all odd.
inline bool is_oddly_regular(const Partition& lam) {
    require_two_restricted(lam, "is_oddly_regular");
    for (int i = 1; i + 2 <= lam.length(); ++i)
        if ((lam.part(i) & 1) && lam.part(i) == lam.part(i + 1) && lam.part(i + 1) == lam.part(i + 2))
            return false;
    return true;
}

namespace detail {
inline void enum_rec(int d, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(d, cap); p >= 1; --p) {
        cur.push_back(p);
        enum_rec(d - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All partitions of d, largest-part-first lexicographically descending:
// (d), (d-1,1), ..., (1^d).
inline std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0)
        throw std::invalid_argument("enumerate_partitions: negative d");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::enum_rec(d, d, cur, out);
    return out;
}

// All pairs (lambda, mu) with |lambda| + 4|mu| = d, ordered by |mu|
// ascending and then by the partition order above.
inline std::vector<std::pair<Partition, Partition>> enumerate_label_pairs(int d) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int k = 0; 4 * k <= d; ++k)
        for (const auto& mu : enumerate_partitions(k))
            for (const auto& lam : enumerate_partitions(d - 4 * k))
                out.emplace_back(lam, mu);
    return out;
}

// Comma-separated parts; the empty partition prints as "0".
inline std::string to_string(const Partition& lam) {
    if (lam.empty())
        return "0";
    std::string s;
    for (int i = 0; i < lam.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(lam.parts[i]);
    }
    return s;
}

}  // namespace ver4
