#include "knotcalc/symform.hpp"

#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

SymIntForm SymIntForm::from_rows(const std::vector<std::vector<Int>>& rows) {
    int n = int(rows.size());
    SymIntForm q(n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n)
            throw NotSymmetricError("matrix is not square");
        for (int j = 0; j < n; ++j) q.at(i, j) = rows[i][j];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (q.at(i, j) != q.at(j, i))
                throw NotSymmetricError("matrix is not symmetric");
    return q;
}

std::vector<Int> SymIntForm::diagonal() const {
    std::vector<Int> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = at(i, i);
    return d;
}

std::vector<Int> SymIntForm::apply(const std::vector<Int>& w) const {
    std::vector<Int> r(n_, Int(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += at(i, j) * w[j];
    return r;
}

Int SymIntForm::eval(const std::vector<Int>& w) const {
    Int s = 0;
    for (int i = 0; i < n_; ++i) {
        if (w[i] == 0) continue;
        for (int j = 0; j < n_; ++j) s += at(i, j) * w[i] * w[j];
    }
    return s;
}

Rat SymIntForm::eval_rat(const std::vector<Rat>& w) const {
    Rat s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += Rat(at(i, j)) * w[i] * w[j];
    return s;
}

SymIntForm SymIntForm::negated() const {
    SymIntForm q(n_);
    for (size_t k = 0; k < a_.size(); ++k) q.a_[k] = -a_[k];
    return q;
}

SymIntForm SymIntForm::leading_block(int k) const {
    SymIntForm q(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) q.at(i, j) = at(i, j);
    return q;
}

SymIntForm SymIntForm::without_index(int k) const {
    SymIntForm q(n_ - 1);
    for (int i = 0, ii = 0; i < n_; ++i) {
        if (i == k) continue;
        for (int j = 0, jj = 0; j < n_; ++j) {
            if (j == k) continue;
            q.at(ii, jj) = at(i, j);
            ++jj;
        }
        ++ii;
    }
    return q;
}

IntMat SymIntForm::as_mat() const {
    IntMat m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    return m;
}

SymIntForm SymIntForm::from_mat(const IntMat& m) {
    std::vector<std::vector<Int>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    }
    return from_rows(rows);
}

SymIntForm SymIntForm::parse(const std::string& text) {
    std::istringstream in(text);
    long long n = -1;
    if (!(in >> n) || n < 0) throw SyntaxError("matrix format: expected rank on the first line");
    std::vector<std::vector<Int>> rows(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw SyntaxError("matrix format: too few entries");
            try {
                rows[size_t(i)][size_t(j)] = Int(tok);
            } catch (const std::exception&) {
                throw SyntaxError("matrix format: bad integer '" + tok + "'");
            }
        }
    std::string extra;
    if (in >> extra) throw SyntaxError("matrix format: trailing data '" + extra + "'");
    return from_rows(rows);
}

std::string SymIntForm::to_text() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out << ' ';
            out << at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

SymIntForm block_sum(const SymIntForm& a, const SymIntForm& b) {
    SymIntForm q(a.rank() + b.rank());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) q.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) q.at(a.rank() + i, a.rank() + j) = b.at(i, j);
    return q;
}

} // namespace knotcalc
