#pragma once

#include <cstddef>
#include <vector>

#include "reebhom/rational.hpp"

namespace reebhom {

// Dense matrix over the rationals. The matrices in this project are small
// (towers are bidiagonal, assemblies are block sums of towers), so a dense
// representation with exact pivoted elimination is the simplest thing that
// is provably correct.
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(size_t n) {
        RationalMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    RationalMatrix operator*(const RationalMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            fail(errc::complex_invalid, "matrix product shape mismatch: " +
                                            std::to_string(cols_) + " vs " +
                                            std::to_string(rhs.rows_));
        RationalMatrix out(rows_, rhs.cols_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t k = 0; k < cols_; ++k) {
                const Rational& v = at(r, k);
                if (v == 0) continue;
                for (size_t c = 0; c < rhs.cols_; ++c)
                    out.at(r, c) += v * rhs.at(k, c);
            }
        return out;
    }

    // Elementary row operations, used to build random invertible matrices
    // together with their inverses in the property tests.
    void add_row_multiple(size_t dst, size_t src, const Rational& factor) {
        for (size_t c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
    }

    void scale_row(size_t r, const Rational& factor) {
        for (size_t c = 0; c < cols_; ++c) at(r, c) *= factor;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact rank over Q by Gaussian elimination with first-nonzero pivoting.
// Works on a scratch copy; entries stay exact rationals throughout.
inline size_t matrix_rank(const RationalMatrix& m) {
    RationalMatrix a = m;
    size_t rank = 0;
    size_t pivot_row = 0;
    for (size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        size_t found = pivot_row;
        while (found < a.rows() && a.at(found, col) == 0) ++found;
        if (found == a.rows()) continue;
        a.swap_rows(pivot_row, found);
        const Rational pivot = a.at(pivot_row, col);
        for (size_t r = pivot_row + 1; r < a.rows(); ++r) {
            if (a.at(r, col) == 0) continue;
            Rational factor = a.at(r, col) / pivot;
            for (size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

inline size_t kernel_dimension(const RationalMatrix& m) {
    return m.cols() - matrix_rank(m);
}

} // namespace reebhom
