#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcalc/symform.hpp"

namespace knotcalc {

// M(e; (a1,b1), ..., (ar,br)) with a_i > b_i >= 1 coprime
struct MontesinosCode {
    Int e;
    std::vector<std::pair<Int, Int>> pairs;

    int r() const { return int(pairs.size()); }
    std::string to_string() const;
};

MontesinosCode parse_montesinos(const std::string& text);

// a knot iff exactly one alpha is even, or all alpha and e + sum(beta) odd
bool is_knot(const MontesinosCode& code);

// alternating iff e is outside {1, ..., r-1}
bool is_alternating_code(const MontesinosCode& code);

// the mirror: e -> r - e, beta -> alpha - beta; an involution
MontesinosCode reflect(const MontesinosCode& code);

// alpha/beta = a1 - 1/(a2 - ... - 1/ak), all a_j >= 2
std::vector<Int> neg_cont_frac(const Int& alpha, const Int& beta);

// weighted linear chain with vertex weights -a_j
SymIntForm linear_plumbing(const std::vector<Int>& neg_cf);

// weighted star: central vertex first, then each arm root-to-tip
SymIntForm star_plumbing(const Int& central_weight, const std::vector<std::vector<Int>>& arm_cfs);

struct PlumbingGraph {
    Int central = 0;
    std::vector<std::vector<Int>> arms;  // stored as plumbing weights <= -2
    bool reflected = false;

    SymIntForm form() const;
};

struct PlumbingResult {
    SymIntForm q;
    PlumbingGraph graph;
    bool reflected = false;
};

// Negative-definite star plumbing bounded by the double branched cover;
// reflected records that the mirror code's plumbing was used.
PlumbingResult plumbing_form(const MontesinosCode& code);

Int delta_montesinos(const MontesinosCode& code);

// prod(alpha_i) * |e - sum beta_i/alpha_i|, the knot determinant
Int montesinos_determinant(const MontesinosCode& code);

struct TorusKnotCode {
    Int p, q;
};

TorusKnotCode parse_torus(const std::string& text);

// Negative-definite star plumbing with boundary +-Sigma(2,p,q), from the
// Seifert data of the Brieskorn sphere.
PlumbingResult brieskorn_form(const Int& p, const Int& q);

Int delta_torus(const Int& p, const Int& q);

// signature of the right-handed T(p,q) by the exact lattice-point count,
// normalized so sigma(T(2,3)) = -2
Int torus_signature(const Int& p, const Int& q);

} // namespace knotcalc
