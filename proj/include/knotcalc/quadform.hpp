#pragma once

#include <map>
#include <vector>

#include "knotcalc/intmat.hpp"
#include "knotcalc/symform.hpp"

namespace knotcalc {

// exact determinant via fraction-free elimination; rank-0 form -> 1
Int determinant(const SymIntForm& q);

// all leading principal minors of -Q positive (exact); rank-0 -> true
bool is_negative_definite(const SymIntForm& q);

// The unique w0 over GF(2) with Q w0 = diag(Q) (mod 2). Every characteristic
// vector of Q is congruent to w0 mod 2. Requires odd determinant.
std::vector<int> parity_solution(const SymIntForm& q);

struct MaxCharSquare {
    Int max;                   // max { w^T Q w : w characteristic for Q }
    std::vector<Int> witness;  // deterministic: sign-normalized, lexicographically least
};

MaxCharSquare max_characteristic_square(const SymIntForm& q);

// (max_characteristic_square + rank) / 2, always an integer for odd det
Int delta_from_form(const SymIntForm& q);

// U * Q * V = D, U and V unimodular, D diagonal with d_i | d_{i+1}, d_i >= 0
struct SNFDecomposition {
    IntMat u, d, v;
};

SNFDecomposition smith_normal_form(const SymIntForm& q);

// Finite map from spin^c classes (characteristic covectors mod 2Q Z^n) to the
// exact correction term d = max (c^T Q^{-1} c + n) / 4 over the class. Class
// labels are the canonical representatives under Hermite reduction mod 2Q.
struct CorrectionTable {
    int rank = 0;
    Int det = 1;  // |det Q| = number of entries
    std::map<std::vector<Int>, Rat> entries;

    std::vector<Rat> sorted_values() const;
};

CorrectionTable correction_table(const SymIntForm& q);

// d-value of the coset swept by {Q w : w characteristic}; equals
// (max_characteristic_square + rank)/4 and the matching correction_table
// entry (checked internally).
Rat spin_class_d(const SymIntForm& q);

// Exhaustive scan over characteristic w with |w_i| <= radius. Agrees with
// max_characteristic_square whenever radius >= enumeration_radius(q).
MaxCharSquare brute_force_max(const SymIntForm& q, const Int& radius);

// Coordinate bound: any characteristic maximizer w satisfies
// w_i^2 <= (w0^T (-Q) w0) * ((-Q)^{-1})_ii with w0 the 0/1 parity solution.
Int enumeration_radius(const SymIntForm& q);

// --- exact closest-vector machinery (positive-definite forms) ---

// minimize (x - t)^T A (x - t) over integer x
Rat cvp_min(const SymIntForm& a_posdef, const std::vector<Rat>& center);

// all integer minimizers attaining exactly `value`
std::vector<std::vector<Int>> cvp_minimizers(const SymIntForm& a_posdef,
                                             const std::vector<Rat>& center,
                                             const Rat& value);

// solve A x = rhs for positive-definite A, exact rationals
std::vector<Rat> solve_posdef(const SymIntForm& a_posdef, const std::vector<Rat>& rhs);

} // namespace knotcalc
