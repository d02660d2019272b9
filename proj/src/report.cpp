#include "knotcalc/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "knotcalc/diagram.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/goeritz.hpp"
#include "knotcalc/quadform.hpp"
#include "knotcalc/seifert.hpp"
#include "knotcalc/sharp.hpp"

namespace knotcalc {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_ll(const Int& v) {
    return v.convert_to<long long>();
}

void run_oracle(const SymIntForm& q, const Int& claimed_max) {
    MaxCharSquare bf = brute_force_max(q, enumeration_radius(q));
    if (bf.max != claimed_max)
        throw Error("oracle: brute-force maximum disagrees with the enumeration");
}

void attach_congruence(InvariantReport& r, const ComputeOptions& opt) {
    if (opt.sigma_prime_hint && !r.sigma_prime) r.sigma_prime = *opt.sigma_prime_hint;
    if (r.delta && r.sigma_prime)
        r.congruence_ok = congruence_check(*r.delta, *r.sigma_prime);
}

} // namespace

bool congruence_check(const Int& delta, const Int& sigma_prime) {
    return (delta - sigma_prime) % 4 == 0;
}

Int wh_delta(const Int& tau) {
    return tau > 0 ? Int(-4) * tau : Int(0);
}

Int mirror_delta(const Int& delta) {
    return -delta;
}

std::string InvariantReport::to_json() const {
    ordered_json j;
    j["input"] = input;
    j["method"] = method;
    if (!ok) {
        j["error"] = error;
        return j.dump();
    }
    if (delta) j["delta"] = to_ll(*delta);
    if (sigma) j["sigma"] = to_ll(*sigma);
    if (sigma_prime) j["sigma_prime"] = to_ll(*sigma_prime);
    if (det) j["det"] = to_ll(*det);
    if (congruence_ok) j["congruence_ok"] = *congruence_ok;
    if (reflected) j["reflected"] = *reflected;
    if (sharp_checked) j["sharp_checked"] = *sharp_checked;
    if (witness) {
        ordered_json w = ordered_json::array();
        for (const Int& v : *witness) w.push_back(to_ll(v));
        j["witness"] = w;
    }
    return j.dump();
}

InvariantReport compute_pd(const std::string& pd_text, const ComputeOptions& opt) {
    InvariantReport r;
    r.input = pd_text;
    r.method = "alternating";
    PlanarDiagram d = parse_pd(pd_text);
    if (!is_alternating(d))
        throw NotAlternatingError(
            "non-alternating PD; use a Montesinos, torus or twist description");
    WhiteGraph w = white_graph(d);
    GoeritzForm g = goeritz_matrix(w);
    EtaColoring eta = eta_coloring(w);
    r.delta = delta_alternating(g, eta);
    GlSignature s = gl_signature(g);
    r.sigma = s.sigma;
    if (s.has_sigma_prime) r.sigma_prime = s.sigma_prime;
    r.det = knot_determinant(g);
    MaxCharSquare mc = max_characteristic_square(g.form);
    r.witness = mc.witness;
    if (opt.oracle) run_oracle(g.form, mc.max);
    attach_congruence(r, opt);
    return r;
}

InvariantReport compute_montesinos(const std::string& code_text, const ComputeOptions& opt) {
    InvariantReport r;
    r.input = code_text;
    r.method = "montesinos";
    MontesinosCode code = parse_montesinos(code_text);
    PlumbingResult p = plumbing_form(code);
    Int d = delta_from_form(p.q);
    r.delta = p.reflected ? -d : d;
    r.det = montesinos_determinant(code);
    r.reflected = p.reflected;
    MaxCharSquare mc = max_characteristic_square(p.q);
    r.witness = mc.witness;
    if (opt.oracle) run_oracle(p.q, mc.max);
    attach_congruence(r, opt);
    return r;
}

InvariantReport compute_torus(const std::string& torus_text, const ComputeOptions& opt) {
    InvariantReport r;
    r.input = torus_text;
    r.method = "torus";
    TorusKnotCode t = parse_torus(torus_text);
    PlumbingResult b = brieskorn_form(t.p, t.q);
    Int d = delta_from_form(b.q);
    r.delta = b.reflected ? -d : d;
    Int det_q = determinant(b.q);
    r.det = det_q < 0 ? -det_q : det_q;
    r.reflected = b.reflected;
    // sigma is reported only for the alternating (p = 2) family, where the
    // right-handed convention and the plumbing orientation agree
    if ((t.p < t.q ? t.p : t.q) == 2) {
        Int s = torus_signature(t.p, t.q);
        r.sigma = s;
        if (s % 2 == 0) r.sigma_prime = -s / 2;
    }
    MaxCharSquare mc = max_characteristic_square(b.q);
    r.witness = mc.witness;
    if (opt.oracle) run_oracle(b.q, mc.max);
    attach_congruence(r, opt);
    return r;
}

InvariantReport compute_form(const SymIntForm& q, const std::string& label,
                             const ComputeOptions& opt) {
    InvariantReport r;
    r.input = label;
    r.method = "raw-form";
    MaxCharSquare mc = max_characteristic_square(q);
    r.delta = delta_from_form(q);
    Int d = determinant(q);
    r.det = d < 0 ? -d : d;
    r.witness = mc.witness;
    if (opt.oracle) run_oracle(q, mc.max);
    attach_congruence(r, opt);
    return r;
}

InvariantReport compute_twist(const std::string& json_text, const ComputeOptions& opt) {
    InvariantReport r;
    r.input = json_text;
    r.method = "sharp";
    TwistInput in = twist_input_from_json(json_text);
    r.delta = delta_via_twist(in);
    SymIntForm q = extend_form(in.goeritz, -in.k);
    Int d = determinant(q);
    r.det = d < 0 ? -d : d;
    r.sharp_checked = true;
    if (opt.oracle) run_oracle(q, max_characteristic_square(q).max);
    attach_congruence(r, opt);
    return r;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

InvariantReport compute(const std::string& descriptor, const ComputeOptions& opt) {
    std::string s = strip(descriptor);
    InvariantReport r;
    r.input = s;
    try {
        if (s.empty()) throw UnrecognizedInputError("empty descriptor");
        if (s[0] == 'X' || s[0] == 'x' || s.rfind("PD[", 0) == 0 || s[0] == '[')
            return compute_pd(s, opt);
        if (s[0] == 'M' || s[0] == 'm') return compute_montesinos(s, opt);
        if (s[0] == 'T' || s[0] == 't') return compute_torus(s, opt);
        if (s[0] == '{') return compute_twist(s, opt);
        if (s.rfind("form", 0) == 0) {
            // inline matrix: "form [[a,b],[c,d]]" (JSON rows)
            std::string body = strip(s.substr(4));
            nlohmann::json rows = nlohmann::json::parse(body);
            std::vector<std::vector<Int>> m;
            for (const auto& row : rows) {
                std::vector<Int> v;
                for (const auto& x : row) v.push_back(Int(x.get<long long>()));
                m.push_back(std::move(v));
            }
            return compute_form(SymIntForm::from_rows(m), s, opt);
        }
        throw UnrecognizedInputError("unrecognized input descriptor: " + s);
    } catch (const std::exception& e) {
        r.ok = false;
        r.method = r.method.empty() ? "error" : r.method;
        r.error = e.what();
        return r;
    }
}

std::vector<InvariantReport> batch(const std::string& text, const ComputeOptions& opt) {
    std::vector<InvariantReport> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        out.push_back(compute(s, opt));
    }
    return out;
}

} // namespace knotcalc
