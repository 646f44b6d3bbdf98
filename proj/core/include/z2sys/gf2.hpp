#ifndef Z2SYS_GF2_HPP
#define Z2SYS_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2sys {

// Dense bit vector over GF(2), the coefficient storage for chains, cochains
// and matrix rows.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // parity of the intersection, i.e. the GF(2) inner product
    bool dot(const BitVector& o) const {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < w_.size(); ++j) acc ^= w_[j] & o.w_[j];
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    // true if the support of a precedes the support of b lexicographically
    // (compared as sorted index sequences); used for deterministic tie-breaks
    static bool support_less(const BitVector& a, const BitVector& b) {
        const auto sa = a.support(), sb = b.support();
        return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < w_.size(); ++j) {
            std::uint64_t w = w_[j];
            while (w) {
                out.push_back(j * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major matrix over GF(2) with Gaussian elimination utilities.  Pivots are
// always chosen at the lowest available index so every factorization, rank and
// basis below is deterministic.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { r_[i].set(j, v); }

    BitVector& row(std::size_t i) { return r_[i]; }
    const BitVector& row(std::size_t i) const { return r_[i]; }

    void append_row(const BitVector& v) {
        if (v.size() != cols_) throw std::invalid_argument("BinaryMatrix: row width mismatch");
        r_.push_back(v);
        ++rows_;
    }

    BinaryMatrix transposed() const {
        BinaryMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j : r_[i].support()) t.r_[j].set(i);
        return t;
    }

    // matrix product (this * o)
    BinaryMatrix multiplied(const BinaryMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("BinaryMatrix: product shape mismatch");
        BinaryMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j : r_[i].support()) p.r_[i] ^= o.r_[j];
        return p;
    }

    bool is_zero() const {
        for (const auto& row : r_) if (row.any()) return false;
        return true;
    }

    // y = this * x  (x indexed by columns)
    BitVector apply(const BitVector& x) const;

    std::size_t rank() const;

    // basis of { x : this * x = 0 }, each vector of length cols()
    std::vector<BitVector> nullspace() const;

    // y = A x solvable?  Returns a verified solution or nullopt.
    std::optional<BitVector> solve(const BitVector& y) const;

    // indices of a maximal independent subset of the rows
    std::vector<std::size_t> independent_rows() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> r_;
};

// Repeated-solve helper: eliminates a fixed generator set once, then answers
// membership queries "is v in the span" / "express v over the generators".
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const std::vector<BitVector>& generators, std::size_t width);

    std::size_t rank() const { return pivots_.size(); }

    // coefficients over the original generators, or nullopt if v is outside
    // the span
    std::optional<BitVector> express(const BitVector& v) const;

    bool contains(const BitVector& v) const { return express(v).has_value(); }

private:
    std::size_t width_ = 0;
    std::size_t ngen_ = 0;
    std::vector<BitVector> rows_;    // eliminated rows
    std::vector<BitVector> combo_;   // combo_[i]: expression of rows_[i] over generators
    std::vector<std::size_t> pivots_;
};

} // namespace z2sys

#endif
