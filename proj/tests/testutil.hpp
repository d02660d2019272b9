#pragma once

#include <random>
#include <vector>

#include "knotcalc/quadform.hpp"
#include "knotcalc/symform.hpp"

namespace testutil {

using knotcalc::Int;
using knotcalc::Rat;
using knotcalc::SymIntForm;

inline SymIntForm form(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Int>> m;
    for (const auto& r : rows) {
        std::vector<Int> row;
        for (long long v : r) row.emplace_back(v);
        m.push_back(std::move(row));
    }
    return SymIntForm::from_rows(m);
}

// the negative-definite E8 form: all -2 star with legs of lengths 1, 2, 4
inline SymIntForm neg_e8() {
    SymIntForm q(8);
    for (int i = 0; i < 8; ++i) q.at(i, i) = -2;
    // center 0; legs 1 | 2-3 | 4-5-6-7
    q.set(0, 1, 1);
    q.set(0, 2, 1);
    q.set(2, 3, 1);
    q.set(0, 4, 1);
    q.set(4, 5, 1);
    q.set(5, 6, 1);
    q.set(6, 7, 1);
    return q;
}

// Random negative-definite form with odd determinant: Q = -L^T D L with
// D odd positive diagonal and L unit lower triangular.
inline SymIntForm random_negdef_odd(std::mt19937& rng, int max_rank = 6) {
    std::uniform_int_distribution<int> rank_dist(1, max_rank);
    int n = rank_dist(rng);
    std::uniform_int_distribution<int> ldist(-2, 2);
    std::uniform_int_distribution<int> ddist(0, 3);
    std::vector<std::vector<long long>> l(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    std::vector<long long> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        l[size_t(i)][size_t(i)] = 1;
        for (int j = 0; j < i; ++j) l[size_t(i)][size_t(j)] = ldist(rng);
        d[size_t(i)] = 2 * ddist(rng) + 1;  // odd, 1..7
    }
    SymIntForm q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k)
                s += Int(l[size_t(k)][size_t(i)]) * d[size_t(k)] * l[size_t(k)][size_t(j)];
            q.at(i, j) = -s;
        }
    return q;
}

// random unimodular matrix as a short product of elementary operations
inline knotcalc::IntMat random_unimodular(std::mt19937& rng, int n, int ops = 6) {
    knotcalc::IntMat p = knotcalc::IntMat::identity(n);
    if (n < 2) return p;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < ops; ++t) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        p.add_row(i, j, Int(coef(rng)));
    }
    return p;
}

// determinant by cofactor expansion: the independent oracle
inline Int det_cofactor_rows(const std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int s = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Int sub = det_cofactor_rows(minor);
        s += (j % 2 == 0 ? m[0][j] : -m[0][j]) * sub;
    }
    return s;
}

inline Int det_cofactor(const SymIntForm& q) {
    std::vector<std::vector<Int>> m;
    for (int i = 0; i < q.rank(); ++i) {
        std::vector<Int> row;
        for (int j = 0; j < q.rank(); ++j) row.push_back(q.at(i, j));
        m.push_back(std::move(row));
    }
    return det_cofactor_rows(m);
}

} // namespace testutil
