#pragma once

#include <vector>

#include "knotcalc/numeric.hpp"

namespace knotcalc {

// Dense integer matrix, row-major. Used for the unimodular transforms of
// Smith/Hermite normal forms and for exact determinant work.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat transposed() const {
        IntMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    // row i += k * row j  /  col i += k * col j
    void add_row(int i, int j, const Int& k);
    void add_col(int i, int j, const Int& k);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination; empty matrix -> 1.
Int det(const IntMat& m);

// Inverse of a matrix with det = +-1; throws Error otherwise.
IntMat unimodular_inverse(const IntMat& u);

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v);

// Column-style Hermite normal form of the lattice spanned by the columns of m
// (m must be square and nonsingular here). Result H is lower triangular with
// h_ii > 0 and 0 <= h_ij < h_ii for j < i; it is the canonical basis of the
// column lattice.
IntMat column_hnf(const IntMat& m);

// Canonical representative of v modulo the column lattice of H (H as above).
std::vector<Int> reduce_mod_hnf(const IntMat& h, std::vector<Int> v);

} // namespace knotcalc
