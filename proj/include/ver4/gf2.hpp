#pragma once

// Dense GF(2) linear algebra on 64-bit packed rows: rank, reduced row
// echelon form, nullspace, and membership reduction against an echelon
// basis.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ver4 {

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        uint64_t& w = bits_[r * stride_ + c / 64];
        const uint64_t mask = uint64_t(1) << (c % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { bits_[r * stride_ + c / 64] ^= uint64_t(1) << (c % 64); }

    void xor_row(std::size_t dst, std::size_t src) {
        uint64_t* d = &bits_[dst * stride_];
        const uint64_t* s = &bits_[src * stride_];
        for (std::size_t k = 0; k < stride_; ++k)
            d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t k = 0; k < stride_; ++k)
            std::swap(bits_[a * stride_ + k], bits_[b * stride_ + k]);
    }
    bool row_empty(std::size_t r) const {
        for (std::size_t k = 0; k < stride_; ++k)
            if (bits_[r * stride_ + k])
                return false;
        return true;
    }

    // In-place reduced row echelon form; returns pivot columns in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && !get(p, col))
                ++p;
            if (p == rows_)
                continue;
            swap_rows(row, p);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != row && get(r, col))
                    xor_row(r, row);
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        BitMatrix tmp = *this;
        return tmp.rref().size();
    }

    // Basis of the right nullspace, one solution per row.
    BitMatrix nullspace() const {
        BitMatrix tmp = *this;
        std::vector<std::size_t> pivots = tmp.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (std::size_t c : pivots)
            is_pivot[c] = 1;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c])
                free_cols.push_back(c);
        BitMatrix out(free_cols.size(), cols_);
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
            const std::size_t fc = free_cols[k];
            out.set(k, fc, true);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (tmp.get(r, fc))
                    out.set(k, pivots[r], true);
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> bits_;
};

// Echelonized span for repeated membership queries.
class GF2Span {
public:
    explicit GF2Span(std::size_t cols) : cols_(cols) {}

    std::size_t dimension() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }

    // Reduces v against the basis in place; returns true if it reduced to
    // zero (i.e. v was in the span).
    bool reduce(std::vector<uint64_t>& v) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if ((v[pivots_[i] / 64] >> (pivots_[i] % 64)) & 1u)
                for (std::size_t k = 0; k < v.size(); ++k)
                    v[k] ^= basis_[i][k];
        for (uint64_t w : v)
            if (w)
                return false;
        return true;
    }

    // Adds v to the span unless dependent; returns true if it grew.
    bool insert(std::vector<uint64_t> v) {
        if (reduce(v))
            return false;
        std::size_t pivot = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if ((v[c / 64] >> (c % 64)) & 1u) {
                pivot = c;
                break;
            }
        basis_.push_back(std::move(v));
        pivots_.push_back(pivot);
        // Keep earlier vectors reduced at the new pivot.
        for (std::size_t i = 0; i + 1 < basis_.size(); ++i)
            if ((basis_[i][pivot / 64] >> (pivot % 64)) & 1u)
                for (std::size_t k = 0; k < basis_[i].size(); ++k)
                    basis_[i][k] ^= basis_.back()[k];
        return true;
    }

    bool contains(std::vector<uint64_t> v) const { return reduce(v); }

    static std::vector<uint64_t> zero_vec(std::size_t cols) {
        return std::vector<uint64_t>((cols + 63) / 64, 0);
    }
    static void set_bit(std::vector<uint64_t>& v, std::size_t c) { v[c / 64] ^= uint64_t(1) << (c % 64); }

private:
    std::size_t cols_;
    std::vector<std::vector<uint64_t>> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace ver4
