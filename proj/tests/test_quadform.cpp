#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "knotcalc/errors.hpp"
#include "knotcalc/intmat.hpp"
#include "knotcalc/quadform.hpp"
#include "testutil.hpp"

using namespace knotcalc;
using testutil::form;
using testutil::neg_e8;

namespace {

// brute-force correction table: bucket covectors in a box by their Hermite
// class and take the max of (c^T Q^{-1} c + n)/4 per bucket
std::map<std::vector<Int>, Rat> brute_table(const SymIntForm& q, int box) {
    int n = q.rank();
    IntMat two_q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) two_q.at(i, j) = 2 * q.at(i, j);
    IntMat h = column_hnf(two_q);
    SymIntForm a = q.negated();

    std::map<std::vector<Int>, Rat> best;
    std::vector<Int> c(static_cast<size_t>(n));
    std::vector<int> idx(static_cast<size_t>(n), 0);
    int width = 2 * box + 1;
    for (;;) {
        for (int i = 0; i < n; ++i) c[size_t(i)] = q.at(i, i) + 2 * Int(idx[size_t(i)] - box);
        std::vector<Rat> cr(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) cr[size_t(i)] = Rat(c[size_t(i)]);
        // c^T Q^{-1} c = -(c^T A^{-1} c)
        std::vector<Rat> x = solve_posdef(a, cr);
        Rat quad = 0;
        for (int i = 0; i < n; ++i) quad += cr[size_t(i)] * x[size_t(i)];
        Rat d = (Rat(n) - quad) / 4;
        std::vector<Int> label = reduce_mod_hnf(h, c);
        auto it = best.find(label);
        if (it == best.end() || d > it->second) best[label] = d;

        int k = 0;
        while (k < n) {
            ++idx[size_t(k)];
            if (idx[size_t(k)] < width) break;
            idx[size_t(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return best;
}

} // namespace

TEST_CASE("determinant examples") {
    CHECK(determinant(form({{-3}})) == -3);
    CHECK(determinant(form({{-2, 1}, {1, -2}})) == 3);
    CHECK(determinant(SymIntForm(0)) == 1);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        SymIntForm q = testutil::random_negdef_odd(rng, 5);
        CHECK(determinant(q) == testutil::det_cofactor(q));
    }
}

TEST_CASE("negative definiteness") {
    CHECK(is_negative_definite(form({{-2, 1}, {1, -2}})));
    CHECK_FALSE(is_negative_definite(form({{-1, 0}, {0, 1}})));
    CHECK_FALSE(is_negative_definite(form({{-2, 2}, {2, -2}})));
    CHECK(is_negative_definite(SymIntForm(0)));
    CHECK(is_negative_definite(neg_e8()));
    // zero leading minor but nonsingular overall
    CHECK_FALSE(is_negative_definite(form({{0, 1}, {1, 0}})));
}

TEST_CASE("parity solution") {
    CHECK(parity_solution(form({{-3}})) == std::vector<int>{1});
    CHECK(parity_solution(form({{-2, 1}, {1, -2}})) == std::vector<int>{0, 0});
    CHECK_THROWS_AS(parity_solution(form({{-2, 0}, {0, -4}})), EvenDeterminantError);
    // the parity vector really is characteristic
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        SymIntForm q = testutil::random_negdef_odd(rng);
        std::vector<int> w0 = parity_solution(q);
        std::vector<Int> w(w0.begin(), w0.end());
        std::vector<Int> qw = q.apply(w);
        for (int i = 0; i < q.rank(); ++i)
            CHECK((qw[size_t(i)] - q.at(i, i)) % 2 == 0);
    }
}

TEST_CASE("max characteristic square examples") {
    MaxCharSquare a = max_characteristic_square(form({{-2, 1}, {1, -2}}));
    CHECK(a.max == 0);
    CHECK(a.witness == std::vector<Int>{0, 0});

    MaxCharSquare b = max_characteristic_square(form({{-3}}));
    CHECK(b.max == -3);
    CHECK(b.witness == std::vector<Int>{1});

    MaxCharSquare c = max_characteristic_square(neg_e8());
    CHECK(c.max == 0);
    CHECK(c.witness == std::vector<Int>(8, Int(0)));

    CHECK_THROWS_AS(max_characteristic_square(form({{1}})), NotNegativeDefiniteError);
    CHECK_THROWS_AS(max_characteristic_square(form({{-2, 0}, {0, -2}})), EvenDeterminantError);
}

TEST_CASE("delta_from_form examples") {
    CHECK(delta_from_form(form({{-2, 1}, {1, -2}})) == 1);
    CHECK(delta_from_form(form({{-3}})) == -1);
    CHECK(delta_from_form(neg_e8()) == 4);
    CHECK(delta_from_form(SymIntForm(0)) == 0);
}

TEST_CASE("max characteristic square invariants") {
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        SymIntForm q = testutil::random_negdef_odd(rng);
        MaxCharSquare m = max_characteristic_square(q);
        CHECK(m.max <= 0);
        CHECK((m.max - q.rank()) % 2 == 0);
        Int diag_sum = 0;
        for (int i = 0; i < q.rank(); ++i) {
            Int d = q.at(i, i);
            diag_sum += d < 0 ? -d : d;
        }
        CHECK(m.max >= -diag_sum);
        // the witness is characteristic and attains the max
        std::vector<Int> qw = q.apply(m.witness);
        for (int i = 0; i < q.rank(); ++i)
            CHECK((qw[size_t(i)] - q.at(i, i)) % 2 == 0);
        CHECK(q.eval(m.witness) == m.max);
    }
}

TEST_CASE("brute force oracle equivalence") {
    CHECK(brute_force_max(form({{-3}}), 5).max == -3);
    CHECK(brute_force_max(form({{-3}}), 5).witness == std::vector<Int>{1});
    CHECK(brute_force_max(form({{-2, 1}, {1, -2}}), 3).max == 0);

    std::mt19937 rng(17);
    for (int t = 0; t < 60; ++t) {
        SymIntForm q = testutil::random_negdef_odd(rng);
        MaxCharSquare fast = max_characteristic_square(q);
        MaxCharSquare slow = brute_force_max(q, enumeration_radius(q));
        CHECK(fast.max == slow.max);
        CHECK(fast.witness == slow.witness);
    }
}

TEST_CASE("block sum") {
    SymIntForm s = block_sum(form({{-3}}), form({{-3}}));
    CHECK(s == form({{-3, 0}, {0, -3}}));
    CHECK(block_sum(form({{-3}}), SymIntForm(0)) == form({{-3}}));

    std::mt19937 rng(19);
    for (int t = 0; t < 30; ++t) {
        SymIntForm a = testutil::random_negdef_odd(rng, 4);
        SymIntForm b = testutil::random_negdef_odd(rng, 4);
        CHECK(delta_from_form(block_sum(a, b)) == delta_from_form(a) + delta_from_form(b));
    }
}

TEST_CASE("delta is a lattice invariant") {
    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
        SymIntForm q = testutil::random_negdef_odd(rng, 5);
        IntMat p = testutil::random_unimodular(rng, q.rank());
        IntMat conj = p.transposed() * q.as_mat() * p;
        SymIntForm q2 = SymIntForm::from_mat(conj);
        CHECK(delta_from_form(q2) == delta_from_form(q));
    }
}

TEST_CASE("smith normal form") {
    SNFDecomposition s = smith_normal_form(form({{-2, 1}, {1, -2}}));
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 3);

    SNFDecomposition t = smith_normal_form(form({{-3}}));
    CHECK(t.d.at(0, 0) == 3);

    SNFDecomposition e = smith_normal_form(SymIntForm(0));
    CHECK(e.d.rows() == 0);

    std::mt19937 rng(29);
    for (int tcase = 0; tcase < 40; ++tcase) {
        SymIntForm q = testutil::random_negdef_odd(rng, 5);
        SNFDecomposition f = smith_normal_form(q);
        CHECK(f.u * q.as_mat() * f.v == f.d);
        Int du = det(f.u), dv = det(f.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int i = 0; i + 1 < q.rank(); ++i) {
            CHECK(f.d.at(i, i) >= 0);
            if (f.d.at(i, i) != 0) CHECK(f.d.at(i + 1, i + 1) % f.d.at(i, i) == 0);
            for (int j = 0; j < q.rank(); ++j)
                if (i != j) CHECK(f.d.at(i, j) == 0);
        }
    }
}

TEST_CASE("correction table of [[-3]]") {
    CorrectionTable t = correction_table(form({{-3}}));
    CHECK(t.det == 3);
    CHECK(t.entries.size() == 3);
    CHECK(t.entries.at({Int(1)}) == Rat(1, 6));
    CHECK(t.entries.at({Int(3)}) == Rat(-1, 2));
    CHECK(t.entries.at({Int(5)}) == Rat(1, 6));
}

TEST_CASE("correction table of -E8 and the empty form") {
    CorrectionTable t = correction_table(neg_e8());
    CHECK(t.det == 1);
    CHECK(t.entries.size() == 1);
    CHECK(t.entries.begin()->second == Rat(2));

    CorrectionTable e = correction_table(SymIntForm(0));
    CHECK(e.det == 1);
    CHECK(e.entries.size() == 1);
    CHECK(e.entries.begin()->second == Rat(0));
}

TEST_CASE("correction table structure on random forms") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 15) {
        SymIntForm q = testutil::random_negdef_odd(rng, 3);
        Int d = determinant(q);
        if (d < 0) d = -d;
        if (d > 40) continue;  // keep the brute-force boxes small
        ++done;
        CorrectionTable t = correction_table(q);
        CHECK(Int(t.entries.size()) == d);
        IntMat two_q(q.rank(), q.rank());
        for (int i = 0; i < q.rank(); ++i)
            for (int j = 0; j < q.rank(); ++j) two_q.at(i, j) = 2 * q.at(i, j);
        IntMat h = column_hnf(two_q);
        for (const auto& [label, val] : t.entries) {
            // denominators divide 4|det|
            CHECK(4 * d % denominator(val) == 0);
            // conjugation symmetry
            std::vector<Int> neg(label.size());
            for (size_t i = 0; i < label.size(); ++i) neg[i] = -label[i];
            CHECK(t.entries.at(reduce_mod_hnf(h, neg)) == val);
        }
        // against the independent brute-force table
        auto oracle = brute_table(q, 6);
        CHECK(oracle.size() == t.entries.size());
        for (const auto& [label, val] : oracle) CHECK(t.entries.at(label) == val);
    }
}

TEST_CASE("spin class d") {
    CHECK(spin_class_d(form({{-2, 1}, {1, -2}})) == Rat(1, 2));
    CHECK(spin_class_d(form({{-3}})) == Rat(-1, 2));
    CHECK(spin_class_d(SymIntForm(0)) == Rat(0));

    std::mt19937 rng(37);
    int done = 0;
    while (done < 10) {
        SymIntForm q = testutil::random_negdef_odd(rng, 3);
        Int d = determinant(q);
        if (d < -60 || d > 60) continue;
        ++done;
        Rat s = spin_class_d(q);  // the internal table cross-check must pass
        CHECK(4 * s == Rat(max_characteristic_square(q).max + q.rank()));
    }
}

TEST_CASE("matrix text format round trip") {
    SymIntForm q = form({{-2, 1}, {1, -2}});
    CHECK(SymIntForm::parse(q.to_text()) == q);
    CHECK(SymIntForm::parse("0\n").rank() == 0);
    CHECK_THROWS_AS(SymIntForm::parse("2\n1 2\n3 4\n"), NotSymmetricError);
    CHECK_THROWS_AS(SymIntForm::parse("2\n1 2\n"), SyntaxError);
}
