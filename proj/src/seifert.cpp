#include "knotcalc/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "knotcalc/errors.hpp"
#include "knotcalc/quadform.hpp"

namespace knotcalc {

namespace {

void validate_pair(const Int& alpha, const Int& beta) {
    if (!(alpha > beta && beta >= 1))
        throw InvalidPairError("need alpha > beta >= 1");
    if (gcd(alpha, beta) != 1)
        throw InvalidPairError("alpha and beta must be coprime");
}

Int mod_inverse(Int a, const Int& m) {
    // extended Euclid; gcd(a, m) must be 1
    Int old_r = ((a % m) + m) % m, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw Error("mod_inverse: arguments not coprime");
    return ((old_s % m) + m) % m;
}

} // namespace

std::string MontesinosCode::to_string() const {
    std::ostringstream out;
    out << "M(" << e << ";";
    for (int i = 0; i < r(); ++i) {
        if (i) out << ",";
        out << "(" << pairs[size_t(i)].first << "," << pairs[size_t(i)].second << ")";
    }
    out << ")";
    return out.str();
}

MontesinosCode parse_montesinos(const std::string& text) {
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(unsigned(text[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw SyntaxError(std::string("Montesinos code: expected '") + c + "'");
        ++i;
    };
    auto integer = [&]() -> Int {
        skip();
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(unsigned(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(unsigned(text[start]))))
            throw SyntaxError("Montesinos code: expected integer");
        return Int(text.substr(start, i - start));
    };
    skip();
    if (i >= text.size() || (text[i] != 'M' && text[i] != 'm'))
        throw SyntaxError("Montesinos code: expected 'M('");
    ++i;
    expect('(');
    MontesinosCode code;
    code.e = integer();
    expect(';');
    for (;;) {
        expect('(');
        Int a = integer();
        expect(',');
        Int b = integer();
        expect(')');
        validate_pair(a, b);
        code.pairs.emplace_back(a, b);
        skip();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        break;
    }
    expect(')');
    skip();
    if (i != text.size()) throw SyntaxError("Montesinos code: trailing input");
    if (code.pairs.empty()) throw SyntaxError("Montesinos code: need at least one tangle");
    return code;
}

bool is_knot(const MontesinosCode& code) {
    int evens = 0;
    Int parity = code.e;
    for (const auto& [a, b] : code.pairs) {
        if (a % 2 == 0) ++evens;
        parity += b;
    }
    if (evens == 1) return true;
    return evens == 0 && parity % 2 != 0;
}

bool is_alternating_code(const MontesinosCode& code) {
    return code.e <= 0 || code.e >= code.r();
}

MontesinosCode reflect(const MontesinosCode& code) {
    MontesinosCode m;
    m.e = Int(code.r()) - code.e;
    for (const auto& [a, b] : code.pairs) m.pairs.emplace_back(a, a - b);
    return m;
}

std::vector<Int> neg_cont_frac(const Int& alpha, const Int& beta) {
    validate_pair(alpha, beta);
    std::vector<Int> out;
    Int x = alpha, y = beta;
    while (y != 0) {
        Int a = -floor_div(-x, y);  // ceil(x/y)
        out.push_back(a);
        Int rem = a * y - x;
        x = y;
        y = rem;
    }
    return out;
}

SymIntForm linear_plumbing(const std::vector<Int>& neg_cf) {
    int n = int(neg_cf.size());
    SymIntForm q(n);
    for (int i = 0; i < n; ++i) {
        q.at(i, i) = -neg_cf[size_t(i)];
        if (i + 1 < n) q.set(i, i + 1, 1);
    }
    return q;
}

SymIntForm star_plumbing(const Int& central_weight,
                         const std::vector<std::vector<Int>>& arm_cfs) {
    int n = 1;
    for (const auto& arm : arm_cfs) n += int(arm.size());
    SymIntForm q(n);
    q.at(0, 0) = central_weight;
    int idx = 1;
    for (const auto& arm : arm_cfs) {
        for (size_t j = 0; j < arm.size(); ++j) {
            q.at(idx, idx) = -arm[j];
            q.set(j == 0 ? 0 : idx - 1, idx, 1);
            ++idx;
        }
    }
    return q;
}

SymIntForm PlumbingGraph::form() const {
    int n = 1;
    for (const auto& arm : arms) n += int(arm.size());
    SymIntForm q(n);
    q.at(0, 0) = central;
    int idx = 1;
    for (const auto& arm : arms) {
        for (size_t j = 0; j < arm.size(); ++j) {
            q.at(idx, idx) = arm[j];
            q.set(j == 0 ? 0 : idx - 1, idx, 1);
            ++idx;
        }
    }
    return q;
}

namespace {

// Star with central weight -e and arms from alpha_i/beta_i; its boundary is
// the double cover of the mirror of the code's knot (calibrated once against
// the printed delta of M(1;(3,1),(3,1),(4,1))).
PlumbingGraph base_graph(const MontesinosCode& code) {
    PlumbingGraph g;
    g.central = -code.e;
    for (const auto& [a, b] : code.pairs) {
        std::vector<Int> cf = neg_cont_frac(a, b);
        for (Int& w : cf) w = -w;
        g.arms.push_back(std::move(cf));
    }
    return g;
}

} // namespace

Int montesinos_determinant(const MontesinosCode& code) {
    Rat s = Rat(code.e);
    Int prod = 1;
    for (const auto& [a, b] : code.pairs) {
        s -= Rat(b, a);
        prod *= a;
    }
    Rat d = Rat(prod) * s;
    if (d < 0) d = -d;
    if (denominator(d) != 1) throw Error("montesinos_determinant: not integral");
    return numerator(d);
}

PlumbingResult plumbing_form(const MontesinosCode& code) {
    if (!is_knot(code)) throw NotAKnotError("Montesinos code describes a link");

    PlumbingGraph direct = base_graph(reflect(code));
    SymIntForm q = direct.form();
    bool reflected = false;
    if (!is_negative_definite(q)) {
        direct = base_graph(code);
        q = direct.form();
        reflected = true;
        if (!is_negative_definite(q))
            throw NoDefiniteRepresentativeError(
                "no orientation of the plumbing is negative definite");
    }
    Int dq = determinant(q);
    if (dq < 0) dq = -dq;
    if (dq != montesinos_determinant(code))
        throw Error("plumbing determinant does not match the Seifert-data formula");
    direct.reflected = reflected;
    return {q, direct, reflected};
}

Int delta_montesinos(const MontesinosCode& code) {
    PlumbingResult p = plumbing_form(code);
    Int d = delta_from_form(p.q);
    return p.reflected ? -d : d;
}

TorusKnotCode parse_torus(const std::string& text) {
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(unsigned(text[i]))) ++i; };
    skip();
    if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
        ++i;
        skip();
        if (i >= text.size() || text[i] != '(') throw SyntaxError("torus code: expected 'T(p,q)'");
        ++i;
    }
    std::string rest = text.substr(i);
    for (char& c : rest)
        if (c == ')' || c == ',') c = ' ';
    std::istringstream in(rest);
    long long p = 0, q = 0;
    if (!(in >> p >> q)) throw SyntaxError("torus code: expected two integers");
    std::string extra;
    if (in >> extra) throw SyntaxError("torus code: trailing input");
    return {Int(p), Int(q)};
}

namespace {

void validate_torus(Int& p, Int& q) {
    if (p > q) std::swap(p, q);
    if (p < 2) throw InvalidPairError("torus knot needs p, q >= 2");
    if (gcd(p, q) != 1) throw InvalidPairError("torus knot needs gcd(p, q) = 1");
}

} // namespace

PlumbingResult brieskorn_form(const Int& p_in, const Int& q_in) {
    Int p = p_in, q = q_in;
    validate_torus(p, q);

    PlumbingGraph g;
    if (p == 2) {
        // lens-space case: the chain of -2's
        g.central = -2;
        if (q > 2) g.arms.push_back(std::vector<Int>(size_t(q - 2), Int(-2)));
        g.reflected = false;
    } else if (p % 2 != 0 && q % 2 != 0) {
        // Seifert data of the Brieskorn sphere: fibers of orders 2, p, q and
        // e0 + b1/2 + b2/p + b3/q = -1/(2pq)
        Int b1 = 1;
        Int b2 = (p - mod_inverse(2 * q % p, p)) % p;
        Int b3 = (q - mod_inverse(2 * p % q, q)) % q;
        Int e0 = (Int(-1) - p * q * b1 - 2 * q * b2 - 2 * p * b3) / (2 * p * q);
        g.central = e0;
        const std::pair<Int, Int> fibers[3] = {{2, b1}, {p, b2}, {q, b3}};
        for (const auto& [a, b] : fibers) {
            std::vector<Int> cf = neg_cont_frac(a, b);
            for (Int& w : cf) w = -w;
            g.arms.push_back(std::move(cf));
        }
        g.reflected = true;
    } else {
        // one of p, q even: the double cover fibers over S^2(m, odd, odd)
        Int even = p % 2 == 0 ? p : q;
        Int odd = p % 2 == 0 ? q : p;
        Int m = even / 2;
        Int beta = (odd - mod_inverse(2 * m % odd, odd)) % odd;
        Int beta1 = (m - mod_inverse(odd % m, m)) % m;
        Int e0 = (Int(-1) - odd * beta1 - 2 * m * beta) / (m * odd);
        g.central = e0;
        if (m >= 2) {
            std::vector<Int> cf = neg_cont_frac(m, beta1);
            for (Int& w : cf) w = -w;
            g.arms.push_back(std::move(cf));
        }
        for (int copy = 0; copy < 2; ++copy) {
            std::vector<Int> cf = neg_cont_frac(odd, beta);
            for (Int& w : cf) w = -w;
            g.arms.push_back(cf);
        }
        g.reflected = true;
    }
    SymIntForm q_form = g.form();
    if (!is_negative_definite(q_form))
        throw Error("brieskorn_form: resolution plumbing is not negative definite");
    return {q_form, g, g.reflected};
}

Int delta_torus(const Int& p, const Int& q) {
    PlumbingResult b = brieskorn_form(p, q);
    Int d = delta_from_form(b.q);
    return b.reflected ? -d : d;
}

Int torus_signature(const Int& p_in, const Int& q_in) {
    Int p = p_in, q = q_in;
    validate_torus(p, q);
    // count pairs by whether |a/p - b/q| exceeds 1/2; exact integer compare
    Int sigma = 0;
    for (Int a = 1; a < p; ++a)
        for (Int b = 1; b < q; ++b) {
            Int t = 2 * (a * q - b * p);
            if (t < 0) t = -t;
            if (t == p * q) throw Error("torus_signature: unexpected tie");
            sigma += (t > p * q) ? 1 : -1;
        }
    return sigma;
}

} // namespace knotcalc
