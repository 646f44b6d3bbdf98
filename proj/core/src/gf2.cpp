#include "z2sys/gf2.hpp"

namespace z2sys {

BitVector BinaryMatrix::apply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BinaryMatrix::apply: size mismatch");
    BitVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (r_[i].dot(x)) y.set(i);
    return y;
}

namespace {

// Column-pivot elimination over row copies.  `track` optionally records the
// row operations (combo[i] = expression of work[i] over the original rows).
std::vector<std::size_t> eliminate(std::vector<BitVector>& work,
                                   std::size_t cols,
                                   std::vector<BitVector>* track) {
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < work.size(); ++col) {
        std::size_t p = next_row;
        while (p < work.size() && !work[p].get(col)) ++p;
        if (p == work.size()) continue;
        std::swap(work[p], work[next_row]);
        if (track) std::swap((*track)[p], (*track)[next_row]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != next_row && work[i].get(col)) {
                work[i] ^= work[next_row];
                if (track) (*track)[i] ^= (*track)[next_row];
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

} // namespace

std::size_t BinaryMatrix::rank() const {
    std::vector<BitVector> work = r_;
    return eliminate(work, cols_, nullptr).size();
}

std::vector<BitVector> BinaryMatrix::nullspace() const {
    std::vector<BitVector> work = r_;
    const auto pivot_cols = eliminate(work, cols_, nullptr);

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector v(cols_);
        v.set(free_col);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            if (work[i].get(free_col)) v.set(pivot_cols[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> BinaryMatrix::solve(const BitVector& y) const {
    if (y.size() != rows_) throw std::invalid_argument("BinaryMatrix::solve: rhs size mismatch");
    // eliminate the augmented system [A | y] row-wise
    std::vector<BitVector> work = r_;
    std::vector<bool> rhs(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rhs[i] = y.get(i);

    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols_ && next_row < rows_; ++col) {
        std::size_t p = next_row;
        while (p < rows_ && !work[p].get(col)) ++p;
        if (p == rows_) continue;
        std::swap(work[p], work[next_row]);
        std::swap(rhs[p], rhs[next_row]);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != next_row && work[i].get(col)) {
                work[i] ^= work[next_row];
                rhs[i] = rhs[i] ^ rhs[next_row];
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    for (std::size_t i = next_row; i < rows_; ++i)
        if (rhs[i]) return std::nullopt;

    BitVector x(cols_);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        if (rhs[i]) x.set(pivot_cols[i]);

    if (apply(x) != y) throw std::logic_error("BinaryMatrix::solve: verification failed");
    return x;
}

std::vector<std::size_t> BinaryMatrix::independent_rows() const {
    // incremental elimination: keep a row iff it grows the span
    std::vector<std::size_t> out;
    std::vector<BitVector> echelon;          // reduced rows kept so far
    std::vector<std::size_t> echelon_pivot;  // pivot column of each
    for (std::size_t i = 0; i < rows_; ++i) {
        BitVector v = r_[i];
        for (std::size_t j = 0; j < echelon.size(); ++j)
            if (v.get(echelon_pivot[j])) v ^= echelon[j];
        if (v.any()) {
            const auto sup = v.support();
            echelon.push_back(std::move(v));
            echelon_pivot.push_back(sup.front());
            out.push_back(i);
        }
    }
    return out;
}

LinearSolver::LinearSolver(const std::vector<BitVector>& generators, std::size_t width)
    : width_(width), ngen_(generators.size()) {
    rows_ = generators;
    combo_.reserve(ngen_);
    for (std::size_t i = 0; i < ngen_; ++i) {
        BitVector e(ngen_);
        e.set(i);
        combo_.push_back(std::move(e));
    }
    pivots_ = eliminate(rows_, width_, &combo_);
    rows_.resize(pivots_.size());
    combo_.resize(pivots_.size());
}

std::optional<BitVector> LinearSolver::express(const BitVector& v) const {
    if (v.size() != width_) throw std::invalid_argument("LinearSolver::express: size mismatch");
    BitVector residue = v;
    BitVector coeffs(ngen_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (residue.get(pivots_[i])) {
            residue ^= rows_[i];
            coeffs ^= combo_[i];
        }
    }
    if (residue.any()) return std::nullopt;
    return coeffs;
}

} // namespace z2sys
