#include "knotcalc/goeritz.hpp"

#include "knotcalc/errors.hpp"
#include "knotcalc/quadform.hpp"

namespace knotcalc {

GoeritzForm goeritz_matrix(const WhiteGraph& w) {
    int m = w.vertices - 1;
    SymIntForm full(w.vertices);
    for (const auto& e : w.edges) {
        Int mult = e.pos + e.neg;
        full.set(e.u, e.v, full.at(e.u, e.v) + mult);
        full.at(e.u, e.u) -= mult;
        full.at(e.v, e.v) -= mult;
    }
    GoeritzForm g;
    g.form = full.without_index(0);
    g.m = m;
    g.mu = w.mu;
    if (!is_negative_definite(g.form))
        throw NotNegativeDefiniteError(
            "Goeritz form is not negative definite (non-alternating or miscolored source)");
    return g;
}

GlSignature gl_signature(const GoeritzForm& g) {
    GlSignature s;
    s.sigma = -g.m + g.mu;
    if (s.sigma % 2 == 0) {
        s.has_sigma_prime = true;
        s.sigma_prime = -s.sigma / 2;
    }
    return s;
}

Int delta_alternating(const GoeritzForm& g, const EtaColoring& eta) {
    if (int(eta.eta.size()) != g.m + 1)
        throw Error("delta_alternating: eta coloring does not match the white graph");
    // fast path: w_i = eta(v_i) on the non-v0 vertices
    std::vector<Int> w(static_cast<size_t>(g.m));
    for (int i = 0; i < g.m; ++i) w[size_t(i)] = eta.eta[size_t(i) + 1];
    Int fast = g.form.eval(w);

    MaxCharSquare mc = max_characteristic_square(g.form);
    if (mc.max != fast)
        throw FastPathMismatchError("eta fast path disagrees with the lattice maximum");

    Int two_delta = Int(g.m) + mc.max;
    if (two_delta % 2 != 0)
        throw NonIntegralError("delta_alternating: m + max is odd");
    Int delta = two_delta / 2;

    GlSignature s = gl_signature(g);
    if (!s.has_sigma_prime || Int(s.sigma_prime) != delta)
        throw FastPathMismatchError("delta does not equal sigma'");
    return delta;
}

Int knot_determinant(const GoeritzForm& g) {
    Int d = determinant(g.form);
    if (d < 0) d = -d;
    if (d % 2 == 0)
        throw EvenDeterminantError("determinant is even: diagram is a link, not a knot");
    return d;
}

} // namespace knotcalc
