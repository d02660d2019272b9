#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knotcalc/diagram.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/report.hpp"
#include "knotcalc/symform.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw knotcalc::Error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// literal text, or the contents of a file if the argument names one
std::string literal_or_file(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the branched double-cover concordance invariant delta"};
    app.require_subcommand(1);

    auto* delta_cmd = app.add_subcommand("delta", "compute delta and friends for one input");
    std::string pd, montesinos, torus, form_path, twist_path, batch_path;
    bool oracle = false, json_flag = false;
    long long sigma_prime_annotation = 0;
    bool has_sp = false;
    delta_cmd->add_option("--pd", pd, "PD code (literal or file)");
    delta_cmd->add_option("--montesinos", montesinos, "Montesinos code M(e;(a1,b1),...)");
    delta_cmd->add_option("--torus", torus, "torus knot p,q");
    delta_cmd->add_option("--form", form_path, "matrix file (first line n, then n rows)");
    delta_cmd->add_option("--twist", twist_path, "twist input JSON file");
    delta_cmd->add_option("--batch", batch_path, "file of input descriptors, one per line");
    delta_cmd->add_flag("--oracle", oracle, "re-verify lattice maxima by brute force");
    delta_cmd->add_flag("--json", json_flag, "JSON-lines output (always on)");
    delta_cmd
        ->add_option("--sigma-prime", sigma_prime_annotation,
                     "externally supplied sigma' annotation")
        ->each([&](const std::string&) { has_sp = true; });

    auto* wh_cmd = app.add_subcommand("wh", "delta of the untwisted positive-clasp double");
    long long tau = 0;
    wh_cmd->add_option("--tau", tau, "tau of the companion knot")->required();

    auto* wg_cmd = app.add_subcommand("whitegraph", "white graph of an alternating PD as JSON");
    std::string wg_pd;
    wg_cmd->add_option("--pd", wg_pd, "PD code (literal or file)")->required();

    CLI11_PARSE(app, argc, argv);

    using namespace knotcalc;
    try {
        if (wh_cmd->parsed()) {
            std::cout << wh_delta(Int(tau)) << "\n";
            return 0;
        }
        if (wg_cmd->parsed()) {
            std::cout << white_graph_to_json(white_graph(parse_pd(literal_or_file(wg_pd))))
                      << "\n";
            return 0;
        }

        ComputeOptions opt;
        opt.oracle = oracle;
        (void)json_flag;
        if (has_sp) opt.sigma_prime_hint = Int(sigma_prime_annotation);

        std::vector<InvariantReport> reports;
        if (!batch_path.empty()) {
            reports = batch(read_file(batch_path), opt);
        } else if (!pd.empty()) {
            reports.push_back(compute(literal_or_file(pd), opt));
        } else if (!montesinos.empty()) {
            reports.push_back(compute(montesinos, opt));
        } else if (!torus.empty()) {
            std::string t = torus;
            if (t[0] != 'T' && t[0] != 't') t = "T(" + t + ")";
            reports.push_back(compute(t, opt));
        } else if (!form_path.empty()) {
            SymIntForm q = SymIntForm::parse(read_file(form_path));
            InvariantReport r;
            try {
                r = compute_form(q, form_path, opt);
            } catch (const std::exception& e) {
                r.input = form_path;
                r.method = "raw-form";
                r.ok = false;
                r.error = e.what();
            }
            reports.push_back(r);
        } else if (!twist_path.empty()) {
            reports.push_back(compute(read_file(twist_path), opt));
        } else {
            std::cerr << "delta: provide one of --pd/--montesinos/--torus/--form/--twist/--batch\n";
            return 2;
        }

        bool any_error = false;
        for (const auto& r : reports) {
            std::cout << r.to_json() << "\n";
            if (!r.ok) any_error = true;
        }
        return any_error ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
