#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/numeric.hpp"
#include "knotcalc/symform.hpp"

namespace knotcalc {

struct ComputeOptions {
    bool oracle = false;                    // re-verify lattice maxima by brute force
    std::optional<Int> sigma_prime_hint;    // external annotation
};

struct InvariantReport {
    std::string input;
    std::string method;  // alternating | montesinos | torus | sharp | raw-form
    bool ok = true;
    std::string error;   // set when ok == false

    std::optional<Int> delta;
    std::optional<Int> sigma;
    std::optional<Int> sigma_prime;
    std::optional<Int> det;
    std::optional<bool> congruence_ok;
    std::optional<std::vector<Int>> witness;
    std::optional<bool> reflected;
    std::optional<bool> sharp_checked;

    std::string to_json() const;
};

// delta == sigma' (mod 4)
bool congruence_check(const Int& delta, const Int& sigma_prime);

// delta of the untwisted positive-clasp double: -4 max(tau, 0); exact for
// alternating companions, an upper-bound certificate otherwise
Int wh_delta(const Int& tau);

Int mirror_delta(const Int& delta);

InvariantReport compute_pd(const std::string& pd_text, const ComputeOptions& opt = {});
InvariantReport compute_montesinos(const std::string& code_text, const ComputeOptions& opt = {});
InvariantReport compute_torus(const std::string& torus_text, const ComputeOptions& opt = {});
InvariantReport compute_form(const SymIntForm& q, const std::string& label,
                             const ComputeOptions& opt = {});
InvariantReport compute_twist(const std::string& json_text, const ComputeOptions& opt = {});

// dispatch on the descriptor syntax: X[..]/PD[..]/JSON array -> pd,
// M(..) -> montesinos, T(p,q) -> torus, "form" + matrix rows -> raw form,
// {..} -> twist JSON
InvariantReport compute(const std::string& descriptor, const ComputeOptions& opt = {});

// one descriptor per line; '#' comments and blank lines skipped; per-line
// errors become error records, not failures
std::vector<InvariantReport> batch(const std::string& text, const ComputeOptions& opt = {});

} // namespace knotcalc
