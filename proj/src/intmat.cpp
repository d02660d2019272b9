#include "knotcalc/intmat.hpp"

#include <utility>

#include "knotcalc/errors.hpp"

namespace knotcalc {

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMat::add_row(int i, int j, const Int& k) {
    for (int c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMat::add_col(int i, int j, const Int& k) {
    for (int r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("det: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMat unimodular_inverse(const IntMat& u) {
    int n = u.rows();
    if (u.cols() != n) throw Error("unimodular_inverse: not square");
    Int d = det(u);
    if (d != 1 && d != -1) throw Error("unimodular_inverse: determinant not a unit");
    // Gauss-Jordan over Q would do, but the adjugate stays integral and exact.
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = u.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = d > 0 ? cof : -cof;
        }
    return inv;
}

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v) {
    std::vector<Int> r(m.rows(), Int(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

IntMat column_hnf(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("column_hnf: not square");
    int n = m.rows();
    IntMat h = m;
    for (int i = 0; i < n; ++i) {
        // clear row i to a single positive entry in column i using column ops
        for (int j = i + 1; j < n; ++j) {
            while (h.at(i, j) != 0) {
                Int q = floor_div(h.at(i, i), h.at(i, j));
                h.add_col(i, j, -q);
                h.swap_cols(i, j);
            }
        }
        if (h.at(i, i) == 0) throw Error("column_hnf: singular matrix");
        if (h.at(i, i) < 0) h.negate_col(i);
        // reduce the earlier columns in row i into [0, h_ii)
        for (int j = 0; j < i; ++j) {
            Int q = floor_div(h.at(i, j), h.at(i, i));
            if (q != 0) h.add_col(j, i, -q);
        }
    }
    return h;
}

std::vector<Int> reduce_mod_hnf(const IntMat& h, std::vector<Int> v) {
    int n = h.rows();
    for (int i = 0; i < n; ++i) {
        Int q = floor_div(v[i], h.at(i, i));
        if (q == 0) continue;
        for (int r = i; r < n; ++r) v[r] -= q * h.at(r, i);
    }
    return v;
}

} // namespace knotcalc
