#include "knotcalc/sharp.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "knotcalc/errors.hpp"
#include "knotcalc/seifert.hpp"

namespace knotcalc {

SymIntForm extend_form(const SymIntForm& g, const Int& r) {
    int n = g.rank();
    SymIntForm out(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = g.at(i, j);
    if (n > 0) out.set(n - 1, n, 1);
    out.at(n, n) = r;
    return out;
}

CorrectionTable lens_correction_table(const Int& p, const Int& q) {
    if (p == 1) {
        if (q != 1) throw InvalidPairError("lens space: expected (1,1) for S^3");
        return correction_table(SymIntForm(0));
    }
    if (!(p > q && q >= 1) || gcd(p, q) != 1)
        throw InvalidPairError("lens space needs p > q >= 1 coprime");
    CorrectionTable t = correction_table(linear_plumbing(neg_cont_frac(p, q)));
    if (t.det != p) throw Error("lens_correction_table: chain determinant is not p");
    return t;
}

bool check_sharp_candidate(const SymIntForm& g, const Int& p, const Int& q) {
    SymIntForm g1 = extend_form(g, -1);
    if (!is_negative_definite(g1)) return false;
    Int d = determinant(g1);
    if (d < 0) d = -d;
    if (d != p) return false;

    std::vector<Rat> mine = correction_table(g1).sorted_values();
    std::vector<Rat> lens = lens_correction_table(p, q).sorted_values();
    if (mine == lens) return true;
    // the orientation of Sigma(K') is not pinned by the inputs; try -Y
    std::vector<Rat> flipped(lens.size());
    for (size_t i = 0; i < lens.size(); ++i) flipped[i] = -lens[lens.size() - 1 - i];
    return mine == flipped;
}

TwistInput twist_input_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("twist input JSON: ") + e.what());
    }
    TwistInput in;
    const auto& rows = j.at("goeritz");
    std::vector<std::vector<Int>> m;
    for (const auto& row : rows) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(Int(v.get<long long>()));
        m.push_back(std::move(r));
    }
    in.goeritz = SymIntForm::from_rows(m);
    in.k = Int(j.at("k").get<long long>());
    in.lens_p = Int(j.at("lens").at(0).get<long long>());
    in.lens_q = Int(j.at("lens").at(1).get<long long>());
    return in;
}

Int delta_via_twist(const TwistInput& input) {
    if (input.k < 2) throw NotSharpCandidateError("twist length k must be >= 2");
    if (!is_negative_definite(input.goeritz))
        throw NotSharpCandidateError("Goeritz form of K'' is not negative definite");
    if (!check_sharp_candidate(input.goeritz, input.lens_p, input.lens_q))
        throw NotSharpCandidateError(
            "G_{-1} is not a sharp filling of the stated lens space");
    return delta_from_form(extend_form(input.goeritz, -input.k));
}

} // namespace knotcalc
