#pragma once

#include <string>
#include <vector>

#include "knotcalc/intmat.hpp"
#include "knotcalc/numeric.hpp"

namespace knotcalc {

// Symmetric integer matrix: a quadratic form / intersection pairing.
// Plays the Goeritz matrix G, the plumbing form Q and the bordered form G_r.
class SymIntForm {
public:
    SymIntForm() = default;
    explicit SymIntForm(int n) : n_(n), a_(size_t(n) * n, 0) {}

    // checks symmetry; throws NotSymmetricError
    static SymIntForm from_rows(const std::vector<std::vector<Int>>& rows);

    int rank() const { return n_; }

    Int& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    // symmetric write
    void set(int i, int j, const Int& v) {
        at(i, j) = v;
        at(j, i) = v;
    }

    bool operator==(const SymIntForm& o) const { return n_ == o.n_ && a_ == o.a_; }

    std::vector<Int> diagonal() const;
    std::vector<Int> apply(const std::vector<Int>& w) const;  // Q w
    Int eval(const std::vector<Int>& w) const;                // w^T Q w
    Rat eval_rat(const std::vector<Rat>& w) const;

    SymIntForm negated() const;
    // top-left k x k block
    SymIntForm leading_block(int k) const;
    // delete one row/column
    SymIntForm without_index(int k) const;

    IntMat as_mat() const;
    static SymIntForm from_mat(const IntMat& m);

    // "first line n, then n lines of n space-separated integers"
    static SymIntForm parse(const std::string& text);
    std::string to_text() const;

private:
    int n_ = 0;
    std::vector<Int> a_;
};

// block-diagonal sum; realizes connected sums at the form level
SymIntForm block_sum(const SymIntForm& a, const SymIntForm& b);

} // namespace knotcalc
