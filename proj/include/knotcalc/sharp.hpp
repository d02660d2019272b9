#pragma once

#include <string>

#include "knotcalc/quadform.hpp"
#include "knotcalc/symform.hpp"

namespace knotcalc {

// Border G with one extra basis vector: a single off-diagonal 1 against the
// last basis vector of G and r on the new diagonal entry.
SymIntForm extend_form(const SymIntForm& g, const Int& r);

// Correction table of the lens space L(p, q), via the negative-definite
// linear plumbing of the negative continued fraction of p/q; p entries.
CorrectionTable lens_correction_table(const Int& p, const Int& q);

// G_{-1} negative definite and its correction values matching the lens
// space's (as multisets, either orientation).
bool check_sharp_candidate(const SymIntForm& g, const Int& p, const Int& q);

// Goeritz form of the alternating link K'' with the twist-end region last,
// the twist length k >= 2, and Sigma(K') = L(p, q).
struct TwistInput {
    SymIntForm goeritz;
    Int k = 2;
    Int lens_p = 1, lens_q = 1;
};

// JSON: {"goeritz": [[...]], "k": int, "lens": [p, q]}
TwistInput twist_input_from_json(const std::string& text);

// delta = delta_from_form(G_{-k}) once the sharpness candidate check passes
Int delta_via_twist(const TwistInput& input);

} // namespace knotcalc
