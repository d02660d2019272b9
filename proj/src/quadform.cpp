#include "knotcalc/quadform.hpp"

#include <algorithm>
#include <cassert>

#include "knotcalc/errors.hpp"

namespace knotcalc {

Int determinant(const SymIntForm& q) {
    return det(q.as_mat());
}

bool is_negative_definite(const SymIntForm& q) {
    int n = q.rank();
    if (n == 0) return true;
    // Bareiss without pivoting on -Q: the pivot entering step k equals the
    // k-th leading principal minor, so a nonpositive pivot refutes
    // positive-definiteness of -Q (Sylvester).
    IntMat a = q.negated().as_mat();
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return true;
}

std::vector<int> parity_solution(const SymIntForm& q) {
    int n = q.rank();
    std::vector<std::vector<int>> m(n, std::vector<int>(n + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = int(q.at(i, j) % 2 != 0);
        m[i][n] = int(q.at(i, i) % 2 != 0);
    }
    // Gaussian elimination over GF(2); Q is invertible mod 2 iff det(Q) is odd
    int row = 0;
    std::vector<int> pivot_col(n, -1);
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col]) { p = i; break; }
        if (p < 0)
            throw EvenDeterminantError("parity solution: form has even determinant");
        std::swap(m[p], m[row]);
        for (int i = 0; i < n; ++i)
            if (i != row && m[i][col])
                for (int j = col; j <= n; ++j) m[i][j] ^= m[row][j];
        pivot_col[row] = col;
        ++row;
    }
    std::vector<int> w(n, 0);
    for (int i = 0; i < row; ++i) w[pivot_col[i]] = m[i][n];
    return w;
}

// --- exact LDL^T and lattice enumeration ---

namespace {

struct Ldlt {
    int n = 0;
    std::vector<Rat> d;                // pivots, all positive
    std::vector<std::vector<Rat>> l;   // unit lower triangular, l[i][j] for j < i
};

Ldlt ldlt(const SymIntForm& a) {
    int n = a.rank();
    Ldlt f;
    f.n = n;
    f.d.assign(n, Rat(0));
    f.l.assign(n, {});
    for (int i = 0; i < n; ++i) f.l[i].assign(i, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat dj = Rat(a.at(j, j));
        for (int k = 0; k < j; ++k) dj -= f.l[j][k] * f.l[j][k] * f.d[k];
        if (dj <= 0) throw Error("ldlt: form is not positive definite");
        f.d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            Rat v = Rat(a.at(i, j));
            for (int k = 0; k < j; ++k) v -= f.l[i][k] * f.l[j][k] * f.d[k];
            f.l[i][j] = v / dj;
        }
    }
    return f;
}

struct EnumState {
    const Ldlt* f = nullptr;
    const std::vector<Rat>* t = nullptr;
    std::vector<Int> x;
    std::vector<Rat> shift;  // x_i - t_i for levels already fixed
    bool has_bound = false;
    Rat bound;
    bool collect = false;
    std::vector<std::vector<Int>>* out = nullptr;
};

// level i: cost d_i * (x_i - c_i)^2 with c_i = t_i - sum_{j>i} l[j][i] (x_j - t_j)
void enum_level(EnumState& s, int i, const Rat& acc) {
    if (i < 0) {
        if (s.collect) {
            if (acc == s.bound) s.out->push_back(s.x);
        } else if (!s.has_bound || acc < s.bound) {
            s.bound = acc;
            s.has_bound = true;
        }
        return;
    }
    Rat ci = (*s.t)[i];
    for (int j = i + 1; j < s.f->n; ++j) {
        const Rat& lji = s.f->l[j][i];
        if (lji != 0) ci -= lji * s.shift[j];
    }
    const Rat& di = s.f->d[i];
    Int x0 = rat_round(ci);
    Int xu = x0;       // candidates >= x0
    Int xd = x0 - 1;   // candidates < x0
    bool up_open = true, down_open = true;
    while (up_open || down_open) {
        bool take_up;
        if (!up_open)
            take_up = false;
        else if (!down_open)
            take_up = true;
        else
            take_up = (Rat(xu) - ci) <= (ci - Rat(xd));
        Int& xi = take_up ? xu : xd;
        Rat y = Rat(xi) - ci;
        Rat cost = acc + di * y * y;
        bool prune = s.has_bound && (s.collect ? cost > s.bound : cost >= s.bound);
        if (prune) {
            // cost is monotone as we move away from the center on this side
            if (take_up) up_open = false; else down_open = false;
        } else {
            s.x[i] = xi;
            s.shift[i] = Rat(xi) - (*s.t)[i];
            enum_level(s, i - 1, cost);
            if (take_up) ++xu; else --xd;
        }
    }
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// sign-normalize so the first nonzero coordinate is positive
std::vector<Int> canonical_witness(std::vector<Int> w) {
    for (const Int& v : w) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& u : w) u = -u;
        break;
    }
    return w;
}

} // namespace

Rat cvp_min(const SymIntForm& a_posdef, const std::vector<Rat>& center) {
    int n = a_posdef.rank();
    if (n == 0) return Rat(0);
    Ldlt f = ldlt(a_posdef);
    EnumState s;
    s.f = &f;
    s.t = &center;
    s.x.assign(n, Int(0));
    s.shift.assign(n, Rat(0));
    enum_level(s, n - 1, Rat(0));
    return s.bound;
}

std::vector<std::vector<Int>> cvp_minimizers(const SymIntForm& a_posdef,
                                             const std::vector<Rat>& center,
                                             const Rat& value) {
    int n = a_posdef.rank();
    if (n == 0) return {std::vector<Int>{}};
    Ldlt f = ldlt(a_posdef);
    std::vector<std::vector<Int>> out;
    EnumState s;
    s.f = &f;
    s.t = &center;
    s.x.assign(n, Int(0));
    s.shift.assign(n, Rat(0));
    s.has_bound = true;
    s.bound = value;
    s.collect = true;
    s.out = &out;
    enum_level(s, n - 1, Rat(0));
    return out;
}

std::vector<Rat> solve_posdef(const SymIntForm& a_posdef, const std::vector<Rat>& rhs) {
    int n = a_posdef.rank();
    Ldlt f = ldlt(a_posdef);
    std::vector<Rat> z(rhs);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) z[i] -= f.l[i][j] * z[j];
    for (int i = 0; i < n; ++i) z[i] /= f.d[i];
    for (int i = n - 1; i >= 0; --i)
        for (int j = i + 1; j < n; ++j) z[i] -= f.l[j][i] * z[j];
    return z;
}

MaxCharSquare max_characteristic_square(const SymIntForm& q) {
    if (!is_negative_definite(q))
        throw NotNegativeDefiniteError("max_characteristic_square: form is not negative definite");
    std::vector<int> w0 = parity_solution(q);  // throws EvenDeterminant if det even
    int n = q.rank();
    if (n == 0) return {Int(0), {}};

    // w = w0 + 2v, so w^T Q w = -4 (v - t)^T (-Q) (v - t) with t = -w0/2
    SymIntForm a = q.negated();
    std::vector<Rat> t(n);
    for (int i = 0; i < n; ++i) t[i] = Rat(-w0[i], 2);
    Rat m = cvp_min(a, t);
    Rat max_rat = -4 * m;
    Int max = numerator(max_rat);
    if (denominator(max_rat) != 1)
        throw NonIntegralError("max_characteristic_square: non-integral maximum");

    std::vector<Int> best;
    for (const auto& v : cvp_minimizers(a, t, m)) {
        std::vector<Int> w(n);
        for (int i = 0; i < n; ++i) w[i] = Int(w0[i]) + 2 * v[i];
        w = canonical_witness(std::move(w));
        if (best.empty() || std::lexicographical_compare(w.begin(), w.end(), best.begin(), best.end()))
            best = std::move(w);
    }
    return {max, best};
}

Int delta_from_form(const SymIntForm& q) {
    MaxCharSquare m = max_characteristic_square(q);
    Int s = m.max + q.rank();
    if (s % 2 != 0)
        throw NonIntegralError("delta_from_form: max + rank is odd");
    return s / 2;
}

SNFDecomposition smith_normal_form(const SymIntForm& q) {
    int n = q.rank();
    IntMat a = q.as_mat();
    IntMat u = IntMat::identity(n);
    IntMat v = IntMat::identity(n);

    for (int t = 0; t < n; ++t) {
        // locate a nonzero pivot
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (a.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;  // remaining block is zero
        a.swap_rows(t, pi); u.swap_rows(t, pi);
        a.swap_cols(t, pj); v.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                while (a.at(i, t) != 0) {
                    Int k = a.at(i, t) / a.at(t, t);
                    a.add_row(i, t, -k); u.add_row(i, t, -k);
                    if (a.at(i, t) != 0) {
                        a.swap_rows(t, i); u.swap_rows(t, i);
                        clean = false;
                    }
                }
            }
            for (int j = t + 1; j < n; ++j) {
                while (a.at(t, j) != 0) {
                    Int k = a.at(t, j) / a.at(t, t);
                    a.add_col(j, t, -k); v.add_col(j, t, -k);
                    if (a.at(t, j) != 0) {
                        a.swap_cols(t, j); v.swap_cols(t, j);
                        clean = false;
                    }
                }
            }
            if (!clean) continue;
            // enforce the divisibility chain: pivot must divide the rest
            bool fixed = false;
            for (int i = t + 1; i < n && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row(t, i, 1); u.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(t, t) < 0) { a.negate_row(t); u.negate_row(t); }
    }
    return {u, a, v};
}

CorrectionTable correction_table(const SymIntForm& q) {
    if (!is_negative_definite(q))
        throw NotNegativeDefiniteError("correction_table: form is not negative definite");
    int n = q.rank();
    CorrectionTable table;
    table.rank = n;
    if (n == 0) {
        table.entries[{}] = Rat(0);
        return table;
    }
    Int dq = determinant(q);
    table.det = dq < 0 ? -dq : dq;

    SNFDecomposition snf = smith_normal_form(q);
    IntMat uinv = unimodular_inverse(snf.u);

    IntMat two_q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) two_q.at(i, j) = 2 * q.at(i, j);
    IntMat h = column_hnf(two_q);

    SymIntForm a = q.negated();
    std::vector<Int> diag = q.diagonal();

    // Characteristic covectors are diag(Q) + 2z; classes mod 2Q Z^n
    // correspond to z mod Q Z^n, enumerated through the Smith form of Q.
    std::vector<Int> y(n, Int(0));
    std::vector<Int> box(n);
    for (int i = 0; i < n; ++i) {
        Int di = snf.d.at(i, i);
        box[i] = di < 0 ? -di : di;
    }
    for (;;) {
        std::vector<Int> z = mat_vec(uinv, y);
        std::vector<Int> c0(n);
        for (int i = 0; i < n; ++i) c0[i] = diag[i] + 2 * z[i];

        // max over the class of (c^T Q^{-1} c + n)/4, a closest-vector
        // problem for -Q with rational center (-Q)^{-1} c0 / 2
        std::vector<Rat> t = solve_posdef(a, to_rat(c0));
        for (Rat& ti : t) ti /= 2;
        Rat e = 4 * cvp_min(a, t);
        Rat d = (Rat(n) - e) / 4;

        std::vector<Int> label = reduce_mod_hnf(h, c0);
        auto it = table.entries.find(label);
        if (it == table.entries.end())
            table.entries[label] = d;
        else
            assert(it->second == d);

        int k = 0;
        while (k < n) {
            ++y[k];
            if (y[k] < box[k]) break;
            y[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    assert(Int(table.entries.size()) == table.det);
    return table;
}

std::vector<Rat> CorrectionTable::sorted_values() const {
    std::vector<Rat> v;
    v.reserve(entries.size());
    for (const auto& kv : entries) v.push_back(kv.second);
    std::sort(v.begin(), v.end());
    return v;
}

Rat spin_class_d(const SymIntForm& q) {
    MaxCharSquare m = max_characteristic_square(q);
    Rat d = Rat(m.max + q.rank()) / 4;
    int n = q.rank();
    if (n == 0) return d;

    CorrectionTable table = correction_table(q);
    std::vector<int> w0 = parity_solution(q);
    std::vector<Int> w(n);
    for (int i = 0; i < n; ++i) w[i] = w0[i];
    std::vector<Int> c = q.apply(w);

    IntMat two_q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) two_q.at(i, j) = 2 * q.at(i, j);
    std::vector<Int> label = reduce_mod_hnf(column_hnf(two_q), c);
    auto it = table.entries.find(label);
    if (it == table.entries.end() || it->second != d)
        throw Error("spin_class_d: vector maximum disagrees with the covector table");
    return d;
}

MaxCharSquare brute_force_max(const SymIntForm& q, const Int& radius) {
    if (!is_negative_definite(q))
        throw NotNegativeDefiniteError("brute_force_max: form is not negative definite");
    std::vector<int> w0 = parity_solution(q);
    int n = q.rank();
    if (n == 0) return {Int(0), {}};
    if (radius <= 0) throw Error("brute_force_max: radius must be positive");

    // per-coordinate candidate lists with the parity of w0
    std::vector<std::vector<Int>> cand(n);
    for (int i = 0; i < n; ++i) {
        Int start = w0[i] == 0 ? Int(0) : Int(1);
        for (Int v = start; v <= radius; v += 2) {
            cand[i].push_back(v);
            if (v != 0) cand[i].push_back(-v);
        }
    }
    std::vector<size_t> idx(n, 0);
    std::vector<Int> w(n);
    bool first = true;
    Int best = 0;
    std::vector<Int> witness;
    for (;;) {
        for (int i = 0; i < n; ++i) w[i] = cand[i][idx[i]];
        Int val = q.eval(w);
        if (first || val > best) {
            first = false;
            best = val;
            witness = canonical_witness(w);
        } else if (val == best) {
            std::vector<Int> cw = canonical_witness(w);
            if (std::lexicographical_compare(cw.begin(), cw.end(), witness.begin(), witness.end()))
                witness = std::move(cw);
        }
        int k = 0;
        while (k < n) {
            ++idx[k];
            if (idx[k] < cand[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return {best, witness};
}

Int enumeration_radius(const SymIntForm& q) {
    if (!is_negative_definite(q))
        throw NotNegativeDefiniteError("enumeration_radius: form is not negative definite");
    std::vector<int> w0 = parity_solution(q);
    int n = q.rank();
    if (n == 0) return 1;

    SymIntForm a = q.negated();
    std::vector<Int> w(n);
    for (int i = 0; i < n; ++i) w[i] = w0[i];
    Int b = a.eval(w);  // every maximizer has a-norm <= this

    Int r = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        Rat inv_ii = solve_posdef(a, e)[i];
        Int c = rat_ceil(Rat(b) * inv_ii);
        Int s = boost::multiprecision::sqrt(c);
        if (s * s < c) ++s;
        r = std::max(r, s);
    }
    return r;
}

} // namespace knotcalc
