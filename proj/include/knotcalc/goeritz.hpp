#pragma once

#include "knotcalc/diagram.hpp"
#include "knotcalc/symform.hpp"

namespace knotcalc {

// Goeritz form of an alternating diagram: g_ij = e_ij off the diagonal,
// g_ii = -sum_k e_ik, with v0 deleted. Negative definite with odd
// determinant for reduced alternating knot diagrams.
struct GoeritzForm {
    SymIntForm form;  // m x m
    int m = 0;        // number of white regions minus one
    int mu = 0;       // negative crossings
};

GoeritzForm goeritz_matrix(const WhiteGraph& w);

struct GlSignature {
    int sigma = 0;
    bool has_sigma_prime = false;
    int sigma_prime = 0;  // -sigma/2 when sigma is even
};

// sigma = -m + mu for alternating diagrams under the white-left convention
GlSignature gl_signature(const GoeritzForm& g);

// delta for an alternating knot, computed twice: plugging w_i = eta(v_i)
// into the Goeritz form, and through the generic characteristic maximizer.
// Both must agree, and delta must equal sigma' = -sigma/2.
Int delta_alternating(const GoeritzForm& g, const EtaColoring& eta);

// |det(form)|, asserted odd
Int knot_determinant(const GoeritzForm& g);

} // namespace knotcalc
