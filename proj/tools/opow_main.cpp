// opow: compute with generalized operator powers and run the randomized
// theorem suites from the command line.
//
// Exit codes: 0 success / witness found; 1 internal numerical failure or a
// failing gating theorem; 2 input parse error; 3 precondition violation;
// 4 unknown theorem id; 5 hunt exhausted without a witness.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opow/opow.hpp"

namespace {

using nlohmann::json;
using namespace opow;

CMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix(in);
}

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t parse_seed(const std::string& s) {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos, 0);  // accepts 0x... as well
    if (pos != s.size()) throw std::invalid_argument("invalid seed '" + s + "'");
    return v;
}

std::string check_seed(const std::string& s) {
    try {
        std::size_t pos = 0;
        (void)std::stoull(s, &pos, 0);
        if (pos != s.size()) return "invalid seed '" + s + "'";
    } catch (const std::exception&) {
        return "invalid seed '" + s + "'";
    }
    return {};
}

void add_tolerance_flags(CLI::App* cmd, Tolerances& tol) {
    cmd->add_option("--tol-herm", tol.herm, "Hermiticity residual bound")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-psd", tol.psd, "eigenvalue negativity allowance")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-commute", tol.commute, "relative commutator bound")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-recon", tol.recon, "eigendecomposition reconstruction bound")->check(CLI::PositiveNumber);
    cmd->add_option("--tol-series", tol.series, "series truncation threshold")->check(CLI::PositiveNumber);
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void print_matrix_result(const std::string& op, const CMatrix& m, const std::string& format) {
    if (format == "json") {
        json out{{"op", op}, {"n", m.dim()}, {"value", matrix_json(m)}};
        std::cout << out.dump(2) << '\n';
    } else {
        render_matrix(std::cout, m);
    }
}

json report_json(const TheoremReport& r) {
    json o{{"theorem_id", r.theorem_id}, {"trials", r.trials},   {"passes", r.passes},
           {"skips", r.skips},           {"failures", r.failures}, {"worst_residual", r.worst_residual}};
    if (r.failing_seed) o["failing_seed"] = *r.failing_seed;
    return o;
}

void print_report_text(const TheoremReport& r, bool gating) {
    std::printf("%-14s trials=%-5ld passes=%-5ld skips=%-4ld failures=%-4ld worst_residual=%.3e",
                r.theorem_id.c_str(), r.trials, r.passes, r.skips, r.failures, r.worst_residual);
    if (r.failing_seed) std::printf(" failing_seed=0x%llx", static_cast<unsigned long long>(*r.failing_seed));
    if (!gating) std::printf(" (informational)");
    std::printf("\n");
}

int run_verify(const std::vector<std::string>& ids, const VerifyOptions& opt,
               const std::string& format) {
    std::vector<const TheoremEntry*> selected;
    for (const auto& id : ids) {
        if (id == "all") {
            for (const auto& e : theorem_registry()) selected.push_back(&e);
        } else if (const TheoremEntry* e = find_theorem(id)) {
            selected.push_back(e);
        } else {
            std::cerr << "error: unknown theorem id '" << id << "'\n";
            return 4;
        }
    }

    bool ok = true;
    json reports = json::array();
    for (const TheoremEntry* e : selected) {
        const TheoremReport r = e->fn(opt);
        if (e->gating && r.failures > 0) ok = false;
        if (format == "json")
            reports.push_back(report_json(r));
        else
            print_report_text(r, e->gating);
    }
    if (format == "json") {
        std::cout << reports.dump(2) << '\n';
    } else {
        std::printf("RESULT: %s\n", ok ? "PASS" : "FAIL");
    }
    return ok ? 0 : 1;
}

int run_hunt(long trials, std::uint64_t seed, bool commuting_only, const Tolerances& tol,
             const std::string& out_a, const std::string& out_b, const std::string& format) {
    const HuntResult r = hunt_exp_monotonicity_failure(trials, seed, tol, commuting_only);
    if (!out_a.empty()) {
        std::ofstream f(out_a);
        render_matrix(f, r.a);
    }
    if (!out_b.empty()) {
        std::ofstream f(out_b);
        render_matrix(f, r.b);
    }
    if (format == "json") {
        json o{{"target", "exp-monotonicity"},
               {"found", r.found},
               {"trials_used", r.trials_used},
               {"witness_eigenvalue", r.witness_eigenvalue},
               {"a", matrix_json(r.a)},
               {"b", matrix_json(r.b)}};
        std::cout << o.dump(2) << '\n';
    } else if (r.found) {
        std::cout << "found = true\n"
                  << "trials_used = " << r.trials_used << "\n"
                  << "witness_eigenvalue = " << render_real(r.witness_eigenvalue) << "\n"
                  << "A =\n";
        render_matrix(std::cout, r.a);
        std::cout << "B =\n";
        render_matrix(std::cout, r.b);
    } else {
        std::cout << "found = false\n"
                  << "trials_used = " << r.trials_used << "\n"
                  << "closest_eigenvalue = " << render_real(r.witness_eigenvalue) << "\n";
    }
    return r.found ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized operator powers: compute, verify, hunt"};
    app.require_subcommand(1);

    Tolerances tol;
    std::string format = "text";

    // compute subcommands
    std::string file_a, file_b, file_t;
    bool use_spectral = false, use_series = false;

    CLI::App* exp_cmd = app.add_subcommand("exp", "matrix exponential of FILE");
    exp_cmd->add_option("file", file_a, "matrix file")->required();
    exp_cmd->add_flag("--spectral", use_spectral, "use the spectral route (Hermitian input only)");
    add_tolerance_flags(exp_cmd, tol);
    add_format_flag(exp_cmd, format);

    CLI::App* log_cmd = app.add_subcommand("log", "matrix logarithm of FILE (positive definite)");
    log_cmd->add_option("file", file_a, "matrix file")->required();
    log_cmd->add_flag("--series", use_series, "use the Mercator series route (needs ||A-I|| <= 0.95)");
    add_tolerance_flags(log_cmd, tol);
    add_format_flag(log_cmd, format);

    CLI::App* gpow_cmd = app.add_subcommand("gpow", "generalized power A^B = e^{B log A}");
    gpow_cmd->add_option("a", file_a, "base matrix file (positive definite)")->required();
    gpow_cmd->add_option("b", file_b, "exponent matrix file")->required();
    add_tolerance_flags(gpow_cmd, tol);
    add_format_flag(gpow_cmd, format);

    CLI::App* norm_cmd = app.add_subcommand("norm", "operator norm (largest singular value)");
    norm_cmd->add_option("file", file_a, "matrix file")->required();
    add_tolerance_flags(norm_cmd, tol);
    add_format_flag(norm_cmd, format);

    CLI::App* root_cmd = app.add_subcommand("root-check", "is A a root of order B of T, i.e. A^B = T");
    root_cmd->add_option("a", file_a, "candidate root file (positive definite)")->required();
    root_cmd->add_option("b", file_b, "order matrix file")->required();
    root_cmd->add_option("t", file_t, "target matrix file")->required();
    add_tolerance_flags(root_cmd, tol);
    add_format_flag(root_cmd, format);

    // verify
    std::vector<std::string> theorem_ids;
    std::string seed_str = "0xC0FFEE";
    long trials = 200;
    std::vector<int> dims = {2, 3, 4, 5, 6};

    CLI::App* verify_cmd = app.add_subcommand("verify", "run randomized theorem suites");
    verify_cmd->add_option("ids", theorem_ids,
                           "theorem ids (wermuth log-product norm-equality identities adjoint "
                           "two-pi heinz heinz-probe) or 'all'");
    verify_cmd->add_option("--trials", trials, "trials per theorem")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed_str, "master seed (decimal or 0x hex)")->check(check_seed);
    verify_cmd->add_option("--dims", dims, "matrix dimensions to sample")
        ->delimiter(',')
        ->check(CLI::Range(2, 8));
    add_tolerance_flags(verify_cmd, tol);
    add_format_flag(verify_cmd, format);

    // hunt
    std::string hunt_target;
    std::string hunt_seed_str = "1";
    long hunt_trials = 10000;
    bool commuting_only = false;
    std::string out_a, out_b;

    CLI::App* hunt_cmd = app.add_subcommand("hunt", "search for a counterexample");
    hunt_cmd->add_option("target", hunt_target, "what to hunt")
        ->required()
        ->check(CLI::IsMember({"exp-monotonicity"}));
    hunt_cmd->add_option("--trials", hunt_trials, "search budget")->check(CLI::PositiveNumber);
    hunt_cmd->add_option("--seed", hunt_seed_str, "master seed (decimal or 0x hex)")->check(check_seed);
    hunt_cmd->add_flag("--commuting-only", commuting_only,
                       "negative control: restrict the search to commuting pairs");
    hunt_cmd->add_option("--out-a", out_a, "write witness A to this file");
    hunt_cmd->add_option("--out-b", out_b, "write witness B to this file");
    add_tolerance_flags(hunt_cmd, tol);
    add_format_flag(hunt_cmd, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        tol.validate();
        if (*exp_cmd) {
            const CMatrix a = load_matrix(file_a);
            print_matrix_result("exp", use_spectral ? exp_spectral(a, tol) : exp_general(a, tol), format);
            return 0;
        }
        if (*log_cmd) {
            const CMatrix a = load_matrix(file_a);
            print_matrix_result("log", use_series ? log_series(a, tol) : log_spectral(a, tol), format);
            return 0;
        }
        if (*gpow_cmd) {
            const GPowResult g = gpow(load_matrix(file_a), load_matrix(file_b), tol);
            const double nrm = operator_norm(g.value, tol);
            if (format == "json") {
                json o{{"op", "gpow"},          {"n", g.value.dim()},
                       {"value", matrix_json(g.value)}, {"norm", nrm},
                       {"norm_bound", g.norm_bound},    {"commuting", g.commuting}};
                std::cout << o.dump(2) << '\n';
            } else {
                render_matrix(std::cout, g.value);
                std::cout << "norm = " << render_real(nrm) << '\n'
                          << "norm_bound = " << render_real(g.norm_bound) << '\n'
                          << "commuting = " << (g.commuting ? "true" : "false") << '\n';
            }
            return 0;
        }
        if (*norm_cmd) {
            const double nrm = operator_norm(load_matrix(file_a), tol);
            if (format == "json")
                std::cout << json{{"op", "norm"}, {"value", nrm}}.dump(2) << '\n';
            else
                std::cout << render_real(nrm) << '\n';
            return 0;
        }
        if (*root_cmd) {
            const bool ok = is_root(load_matrix(file_a), load_matrix(file_b), load_matrix(file_t), tol);
            if (format == "json")
                std::cout << json{{"op", "root-check"}, {"is_root", ok}}.dump(2) << '\n';
            else
                std::cout << (ok ? "true" : "false") << '\n';
            return 0;
        }
        if (*verify_cmd) {
            if (theorem_ids.empty()) theorem_ids = {"all"};
            VerifyOptions opt;
            opt.trials = trials;
            opt.dims = dims;
            opt.seed = parse_seed(seed_str);
            opt.tol = tol;
            return run_verify(theorem_ids, opt, format);
        }
        if (*hunt_cmd) {
            return run_hunt(hunt_trials, parse_seed(hunt_seed_str), commuting_only, tol, out_a,
                            out_b, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
