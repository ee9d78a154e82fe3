#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qclone/bhclone.hpp"
#include "qclone/channel.hpp"
#include "qclone/classical.hpp"
#include "qclone/errors.hpp"
#include "qclone/family.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/interference.hpp"
#include "qclone/matrix_json.hpp"
#include "qclone/random.hpp"
#include "qclone/sdpopt.hpp"

namespace {

using nlohmann::json;
using namespace qclone;

// All reported numbers are rounded to 12 significant digits before
// serialization so outputs are byte-deterministic; matrix files keep
// full precision separately.
double sig12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print(const json& j) { std::cout << j.dump(1) << '\n'; }

DynamicalMatrix load_channel(const std::string& path) {
    ComplexMatrix m = read_matrix(path);
    if (m.dim != 16) throw DimensionMismatch("expected a 16x16 dynamical matrix");
    return DynamicalMatrix{std::move(m)};
}

int run_validate(const std::string& path) {
    const ValidationReport rep = validate(load_channel(path));
    json out = {
        {"hermiticity_residual", sig12(rep.hermiticity_residual)},
        {"trace_residuals",
         {sig12(rep.trace_residuals[0]), sig12(rep.trace_residuals[1]),
          sig12(rep.trace_residuals[2]), sig12(rep.trace_residuals[3])}},
        {"min_eigenvalue", sig12(rep.min_eigenvalue)},
        {"interference", sig12(rep.interference)},
        {"is_valid_channel", rep.is_valid_channel},
    };
    if (!rep.is_valid_channel) {
        std::string why;
        if (rep.hermiticity_residual > 1e-10) why = "hermiticity";
        else if (*std::max_element(rep.trace_residuals.begin(), rep.trace_residuals.end()) > 1e-9)
            why = "trace_preservation";
        else why = "positivity";
        out["failure"] = why;
    }
    print(out);
    return rep.is_valid_channel ? 0 : 1;
}

int run_interference(const std::string& path) {
    const InterferenceValue v = interference_of_dynamical(load_channel(path));
    print({{"interference", sig12(v.value)}, {"hilbert_dim", v.hilbert_dim}});
    return 0;
}

int run_fidelity(const std::string& path) {
    const DynamicalMatrix d = load_channel(path);
    const auto [fa, fb] = average_fidelities(d);
    const auto [sa, sb] = universality_spread(d, 20);
    print({{"f_a", sig12(fa)},
           {"f_b", sig12(fb)},
           {"spread_a", sig12(sa)},
           {"spread_b", sig12(sb)}});
    return 0;
}

int run_optimize(const std::string& mode, const std::string& out_path) {
    SdpSolution sol;
    if (mode == "symmetric") {
        sol = symmetric_optimum();
    } else {
        SdpProblem prob;
        prob.objective = fidelity_functionals().first;
        prob.sense = mode == "max-a" ? Sense::maximize : Sense::minimize;
        prob.constraints = standard_constraints(true);
        sol = solve(prob);
    }
    const auto [fa, fb] = average_fidelities(sol.d);
    print({{"mode", mode},
           {"value", sig12(sol.value)},
           {"f_a", sig12(fa)},
           {"f_b", sig12(fb)},
           {"interference", sig12(interference_of_dynamical(sol.d).value)},
           {"iterations", sol.iterations},
           {"converged", sol.converged},
           {"primal_residual", sig12(sol.primal_residual)},
           {"constraint_residual", sig12(sol.constraint_residual)}});
    if (!out_path.empty()) write_matrix(out_path, sol.d.d);
    return sol.converged ? 0 : 2;
}

std::vector<double> make_grid(double step) {
    const long k0 = static_cast<long>(std::ceil((1.0 / 3.0) / step - 1e-9));
    const long k1 = static_cast<long>(std::floor(1.0 / step + 1e-9));
    std::vector<double> grid;
    for (long k = k0; k <= k1; ++k) grid.push_back(static_cast<double>(k) * step);
    return grid;
}

int run_sweep(double step, const std::string& out_path) {
    const std::vector<SweepRecord> records = sweep_boundary(make_grid(step));
    std::string csv = "f_a,f_b_min,f_b_max,converged\n";
    bool all_ok = true;
    for (const SweepRecord& r : records) {
        const bool ok = r.converged_min && r.converged_max;
        all_ok = all_ok && ok;
        csv += fmt12(r.fa);
        csv += ',';
        csv += fmt12(r.fb_min);
        csv += ',';
        csv += fmt12(r.fb_max);
        csv += ',';
        csv += ok ? "true" : "false";
        csv += '\n';
    }
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
        f << csv;
    }
    return all_ok ? 0 : 2;
}

json stochastic_json(const StochasticMap& m) {
    const auto [fa, fb] = classical_average_fidelities(m);
    json rows = json::array();
    for (int i = 0; i < 4; ++i)
        rows.push_back({sig12(m.t[i][0]), sig12(m.t[i][1]), sig12(m.t[i][2]), sig12(m.t[i][3])});
    return {{"t", std::move(rows)}, {"f_a", sig12(fa)}, {"f_b", sig12(fb)}};
}

int run_classical() {
    const ClassicalExtrema ex = enumerate_deterministic_extrema();
    print({{"max_f_a", sig12(ex.max_fa)},
           {"min_f_a", sig12(ex.min_fa)},
           {"max_f_b", sig12(ex.max_fb)},
           {"min_f_b", sig12(ex.min_fb)},
           {"max_symmetric", sig12(ex.max_symmetric)},
           {"witness_max", stochastic_json(ex.witness_max)},
           {"witness_min", stochastic_json(ex.witness_min)}});
    return 0;
}

int run_family(int samples, double epsilon, std::uint64_t seed, const std::string& prefix) {
    const PerturbationBasis& pb = admissible_perturbation_basis();
    json members = json::array();
    bool all = true;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        const DynamicalMatrix d = sample_member(s, epsilon);
        const MemberReport rep = verify_member(d);
        all = all && rep.all_pass;
        members.push_back({{"seed", s},
                           {"valid_channel", rep.valid_channel},
                           {"min_eigenvalue", sig12(rep.min_eigenvalue)},
                           {"interference", sig12(rep.interference)},
                           {"f_a", sig12(rep.fidelity_a)},
                           {"f_b", sig12(rep.fidelity_b)},
                           {"spread_a", sig12(rep.spread_a)},
                           {"spread_b", sig12(rep.spread_b)},
                           {"membership_residual", sig12(rep.membership_residual)},
                           {"all_pass", rep.all_pass}});
        if (!prefix.empty()) write_matrix(prefix + std::to_string(s) + ".json", d.d);
    }
    print({{"dimension", pb.dimension},
           {"claimed_dimension", pb.claimed_dimension},
           {"samples", samples},
           {"epsilon", epsilon},
           {"seed", seed},
           {"all_pass", all},
           {"members", std::move(members)}});
    return all ? 0 : 1;
}

int run_bh() {
    const BhIsometry iso = bh_isometry();
    double iso_res2 = 0.0;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            cdouble dot = 0.0;
            for (int r = 0; r < 8; ++r) dot += std::conj(iso.v[r][p]) * iso.v[r][q];
            if (p == q) dot -= 1.0;
            iso_res2 += std::norm(dot);
        }
    }
    const double iso_res = std::sqrt(iso_res2);

    const DynamicalMatrix ref = d_opt();
    GaussianSampler rng(424242);
    double reduced_dev = 0.0, sym_dev = 0.0, fid_dev = 0.0;
    for (int n = 0; n < 50; ++n) {
        cdouble a = rng.complex_gaussian(), b = rng.complex_gaussian();
        const double inv = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
        a *= inv;
        b *= inv;
        const TwoQubitState out = bh_output(a, b);
        const ComplexMatrix ra = partial_trace(out, Keep::A);
        const ComplexMatrix rb = partial_trace(out, Keep::B);
        const auto [qa, qb] = reduced_outputs(ref, a, b);
        reduced_dev = std::max({reduced_dev, max_abs(ra - qa), max_abs(rb - qb)});
        sym_dev = std::max(sym_dev, max_abs(ra - rb));
        const cdouble psi[2] = {a, b};
        for (const ComplexMatrix* r : {&ra, &rb}) {
            cdouble f = 0.0;
            for (int m = 0; m < 2; ++m)
                for (int k = 0; k < 2; ++k) f += std::conj(psi[m]) * (*r)(m, k) * psi[k];
            fid_dev = std::max(fid_dev, std::abs(f.real() - 5.0 / 6.0));
        }
    }

    const BhExtendedChannel ext = bh_extended_channel();
    const ValidationReport val = validate(ext.d);
    const auto [efa, efb] = average_fidelities(ext.d);
    double ext_dev = 0.0;
    for (int n = 0; n < 20; ++n) {
        cdouble a = rng.complex_gaussian(), b = rng.complex_gaussian();
        const double inv = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
        a *= inv;
        b *= inv;
        const cdouble psi[2] = {a, b};
        TwoQubitState in{ComplexMatrix(4)};
        for (int m = 0; m < 2; ++m)
            for (int k = 0; k < 2; ++k) in.rho(2 * m, 2 * k) = psi[m] * std::conj(psi[k]);
        ext_dev = std::max(ext_dev, max_abs(apply(ext.d, in).rho - bh_output(a, b).rho));
    }

    const bool pass = iso_res <= 1e-12 && reduced_dev <= 1e-10 && sym_dev <= 1e-12 &&
                      fid_dev <= 1e-10 && val.is_valid_channel && ext_dev <= 1e-12 &&
                      std::abs(efa - 5.0 / 6.0) <= 1e-10 && std::abs(efb - 5.0 / 6.0) <= 1e-10;
    print({{"isometry_residual", sig12(iso_res)},
           {"reduced_match_residual", sig12(reduced_dev)},
           {"clone_symmetry_residual", sig12(sym_dev)},
           {"point_fidelity_deviation", sig12(fid_dev)},
           {"extension",
            {{"valid_channel", val.is_valid_channel},
             {"agrees_with_isometry", sig12(ext_dev)},
             {"interference", sig12(ext.interference)},
             {"f_a", sig12(efa)},
             {"f_b", sig12(efb)}}},
           {"all_pass", pass}});
    return pass ? 0 : 1;
}

int report_error(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-to-2 qubit cloning machines as 16x16 dynamical matrices"};
    app.require_subcommand(1);

    std::string in_path, out_path, prefix, mode = "symmetric";
    double step = 0.01, epsilon = 0.1;
    int samples = 100;
    std::uint64_t seed = 0;
    bool check = false;

    CLI::App* validate_cmd = app.add_subcommand("validate", "Validate a dynamical-matrix file");
    validate_cmd->add_option("file", in_path, "matrix JSON file")->required();

    CLI::App* interference_cmd =
        app.add_subcommand("interference", "Interference value of a dynamical matrix");
    interference_cmd->add_option("file", in_path, "matrix JSON file")->required();

    CLI::App* fidelity_cmd =
        app.add_subcommand("fidelity", "Average fidelities and universality spread");
    fidelity_cmd->add_option("file", in_path, "matrix JSON file")->required();

    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "Solve for an optimal interference-free cloner");
    optimize_cmd->add_option("--mode", mode, "symmetric, max-a or min-a")
        ->check(CLI::IsMember({"symmetric", "max-a", "min-a"}));
    optimize_cmd->add_option("--out", out_path, "write the optimizer matrix JSON here");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Boundary of the reachable (f_a, f_b) region as CSV");
    sweep_cmd->add_option("--step", step, "f_a grid step")->check(CLI::Range(1e-12, 0.5));
    sweep_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

    app.add_subcommand("classical", "Extremal fidelities of diagonal (classical) channels");

    CLI::App* family_cmd =
        app.add_subcommand("family", "Sample and verify optimal-cloner family members");
    family_cmd->add_option("--samples", samples, "number of members")->check(CLI::PositiveNumber);
    family_cmd->add_option("--epsilon", epsilon, "perturbation size")
        ->check(CLI::Range(0.0, 0.2));
    family_cmd->add_option("--seed", seed, "first member seed");
    family_cmd->add_option("--out", prefix, "write each member to <prefix><seed>.json");

    CLI::App* bh_cmd = app.add_subcommand("bh", "Reference-cloner report");
    bh_cmd->add_flag("--check", check, "run all reference checks");

    try {
        app.parse(argc, argv);
        if (validate_cmd->parsed()) return run_validate(in_path);
        if (interference_cmd->parsed()) return run_interference(in_path);
        if (fidelity_cmd->parsed()) return run_fidelity(in_path);
        if (optimize_cmd->parsed()) return run_optimize(mode, out_path);
        if (sweep_cmd->parsed()) return run_sweep(step, out_path);
        if (family_cmd->parsed()) return run_family(samples, epsilon, seed, prefix);
        if (bh_cmd->parsed()) return run_bh();
        return run_classical();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const InfeasibleDetected& e) {
        return report_error(e, 2);
    } catch (const NoConvergence& e) {
        return report_error(e, 2);
    } catch (const DimensionMismatch& e) {
        return report_error(e, 3);
    } catch (const NotHermitian& e) {
        return report_error(e, 1);
    } catch (const NotTracePreserving& e) {
        return report_error(e, 1);
    } catch (const NotUnitary& e) {
        return report_error(e, 1);
    } catch (const NotNormalized& e) {
        return report_error(e, 1);
    } catch (const InvalidStochastic& e) {
        return report_error(e, 1);
    } catch (const InvalidChannel& e) {
        return report_error(e, 1);
    } catch (const EpsilonTooLarge& e) {
        return report_error(e, 1);
    } catch (const NotAdmissible& e) {
        return report_error(e, 1);
    } catch (const std::exception& e) {
        return report_error(e, 3);
    }
}
