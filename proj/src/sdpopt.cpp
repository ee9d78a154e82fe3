#include "qclone/sdpopt.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "qclone/errors.hpp"
#include "qclone/interference.hpp"
#include "qclone/numkernel.hpp"

namespace qclone {

namespace {

constexpr int kN = 16;
constexpr int kPairs = kN * (kN - 1) / 2; // 120
constexpr int kCoords = kN + 2 * kPairs;  // 256
constexpr int kMaxIterations = 200000;
constexpr int kCheckEvery = 100;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;

struct PairTable {
    int first[kPairs];
    int second[kPairs];
};

const PairTable& pair_table() {
    static const PairTable table = [] {
        PairTable t{};
        int q = 0;
        for (int i = 0; i < kN; ++i)
            for (int k = i + 1; k < kN; ++k) {
                t.first[q] = i;
                t.second[q] = k;
                ++q;
            }
        return t;
    }();
    return table;
}

using Coords = std::vector<double>;

// Hermitian matrix <-> real coordinates (16 diagonal entries, then
// re/im of the 120 upper-triangle entries scaled by √2 so the Euclidean
// norm equals the Frobenius norm).
Coords mat_to_coords(const ComplexMatrix& m) {
    const PairTable& t = pair_table();
    Coords x(kCoords);
    for (int i = 0; i < kN; ++i) x[i] = m(i, i).real();
    for (int q = 0; q < kPairs; ++q) {
        const cdouble v = m(t.first[q], t.second[q]);
        x[kN + 2 * q] = kSqrt2 * v.real();
        x[kN + 2 * q + 1] = kSqrt2 * v.imag();
    }
    return x;
}

ComplexMatrix coords_to_mat(const Coords& x) {
    const PairTable& t = pair_table();
    ComplexMatrix m(kN);
    for (int i = 0; i < kN; ++i) m(i, i) = x[i];
    for (int q = 0; q < kPairs; ++q) {
        const cdouble v = cdouble(x[kN + 2 * q], x[kN + 2 * q + 1]) / kSqrt2;
        m(t.first[q], t.second[q]) = v;
        m(t.second[q], t.first[q]) = std::conj(v);
    }
    return m;
}

// Row such that row·coords(D) = Σ_IK F_IK·D_IK for Hermitian F and D.
Coords functional_to_row(const LinearFunctional& f) {
    const PairTable& t = pair_table();
    Coords r(kCoords);
    for (int i = 0; i < kN; ++i) r[i] = f.coeffs(i, i).real();
    for (int q = 0; q < kPairs; ++q) {
        const cdouble v = f.coeffs(t.first[q], t.second[q]);
        r[kN + 2 * q] = kSqrt2 * v.real();
        r[kN + 2 * q + 1] = -kSqrt2 * v.imag();
    }
    return r;
}

double dot(const Coords& a, const Coords& b) {
    double s = 0.0;
    for (int i = 0; i < kCoords; ++i) s += a[i] * b[i];
    return s;
}

double norm(const Coords& a) { return std::sqrt(dot(a, a)); }

struct AffineProjector {
    std::vector<Coords> rows; // orthonormal
    std::vector<double> targets;

    // Modified Gram-Schmidt with one re-orthogonalization pass; drops
    // dependent rows, rejecting them as inconsistent if their adjusted
    // target is not zero.
    AffineProjector(const std::vector<Coords>& raw_rows, const std::vector<double>& raw_targets) {
        for (std::size_t r = 0; r < raw_rows.size(); ++r) {
            Coords v = raw_rows[r];
            double s = raw_targets[r];
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t q = 0; q < rows.size(); ++q) {
                    const double c = dot(v, rows[q]);
                    for (int i = 0; i < kCoords; ++i) v[i] -= c * rows[q][i];
                    s -= c * targets[q];
                }
            }
            const double nv = norm(v);
            if (nv <= 1e-10 * std::max(1.0, norm(raw_rows[r]))) {
                if (std::abs(s) > 1e-9)
                    throw InfeasibleDetected("solve: inconsistent equality constraints");
                continue;
            }
            for (int i = 0; i < kCoords; ++i) v[i] /= nv;
            rows.push_back(std::move(v));
            targets.push_back(s / nv);
        }
    }

    void project(Coords& y) const {
        for (std::size_t q = 0; q < rows.size(); ++q) {
            const double c = targets[q] - dot(y, rows[q]);
            for (int i = 0; i < kCoords; ++i) y[i] += c * rows[q][i];
        }
    }
};

Coords project_psd_coords(const Coords& x) {
    return mat_to_coords(project_psd(coords_to_mat(x)));
}

} // namespace

std::vector<EqualityConstraint> standard_constraints(bool zero_interference) {
    std::vector<EqualityConstraint> out;
    for (int j = 0; j < 4; ++j) {
        LinearFunctional f{ComplexMatrix(16)};
        for (int i = 0; i < 4; ++i) f.coeffs(4 * i + j, 4 * i + j) = 1.0;
        out.push_back({f, 1.0});
    }
    if (!zero_interference) return out;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int l = k + 1; l < 4; ++l) {
                LinearFunctional re{ComplexMatrix(16)};
                re.coeffs(4 * i + k, 4 * i + l) = 0.5;
                re.coeffs(4 * i + l, 4 * i + k) = 0.5;
                out.push_back({re, 0.0});
                LinearFunctional im{ComplexMatrix(16)};
                im.coeffs(4 * i + k, 4 * i + l) = cdouble(0.0, -0.5);
                im.coeffs(4 * i + l, 4 * i + k) = cdouble(0.0, 0.5);
                out.push_back({im, 0.0});
            }
    return out;
}

SdpSolution solve(const SdpProblem& problem, std::optional<DynamicalMatrix> initial) {
    std::vector<Coords> raw_rows;
    std::vector<double> raw_targets;
    for (const EqualityConstraint& c : problem.constraints) {
        raw_rows.push_back(functional_to_row(c.functional));
        raw_targets.push_back(c.target);
    }
    const AffineProjector aff(raw_rows, raw_targets);

    Coords c = functional_to_row(problem.objective);
    if (problem.sense == Sense::minimize)
        for (double& v : c) v = -v;
    const double cn = norm(c);
    if (cn > 0.0)
        for (double& v : c) v /= cn;

    Coords z(kCoords, 0.0);
    if (initial) {
        z = mat_to_coords(hermitized(initial->d));
    } else {
        aff.project(z);
    }
    Coords u(kCoords, 0.0), x(kCoords, 0.0), xr(kCoords, 0.0);

    constexpr double kAlpha = 1.6;
    double prev_obj = 0.0;
    bool have_prev_obj = false;
    // Constraint-residual history for the stall detector, one entry per
    // check window.
    std::vector<double> cr_history;

    auto constraint_residual = [&raw_rows, &raw_targets](const Coords& y) {
        double worst = 0.0;
        for (std::size_t r = 0; r < raw_rows.size(); ++r)
            worst = std::max(worst, std::abs(dot(raw_rows[r], y) - raw_targets[r]));
        return worst;
    };

    SdpSolution out;
    int it = 0;
    while (it < kMaxIterations) {
        for (int step = 0; step < kCheckEvery; ++step) {
            for (int i = 0; i < kCoords; ++i) x[i] = z[i] - u[i] + c[i];
            aff.project(x);
            for (int i = 0; i < kCoords; ++i) {
                xr[i] = kAlpha * x[i] + (1.0 - kAlpha) * z[i];
                u[i] += xr[i];
            }
            z = project_psd_coords(u);
            for (int i = 0; i < kCoords; ++i) u[i] -= z[i];
            ++it;
        }
        double pr = 0.0;
        for (int i = 0; i < kCoords; ++i) pr = std::max(pr, std::abs(x[i] - z[i]));
        const double cr = constraint_residual(z);
        const double obj = dot(c, z);
        cr_history.push_back(cr);

        if (pr <= 1e-8 && cr <= 1e-8 && have_prev_obj &&
            std::abs(obj - prev_obj) <= 1e-10 * std::max(1.0, std::abs(obj))) {
            out.converged = true;
            out.primal_residual = pr;
            out.constraint_residual = cr;
            break;
        }
        prev_obj = obj;
        have_prev_obj = true;
        out.primal_residual = pr;
        out.constraint_residual = cr;

        // Infeasible problems lock the constraint residual at the
        // cone-to-affine-set distance; feasible ones keep improving by
        // percents per window even in degenerate geometry.
        const std::size_t window = 10000 / kCheckEvery;
        if (it >= 15000 && cr > 1e-4 && cr_history.size() > window) {
            const double old = cr_history[cr_history.size() - 1 - window];
            if (old - cr <= 1e-3 * old)
                throw InfeasibleDetected("solve: constraint residual stalled above 1e-4");
        }
    }

    out.d = DynamicalMatrix{coords_to_mat(z)};
    out.value = problem.objective.value(out.d);
    out.iterations = it;
    return out;
}

SdpSolution symmetric_optimum() {
    const auto [a, b] = fidelity_functionals();
    SdpProblem problem;
    problem.objective = LinearFunctional{0.5 * (a.coeffs + b.coeffs)};
    problem.sense = Sense::maximize;
    problem.constraints = standard_constraints(true);
    problem.constraints.push_back({LinearFunctional{a.coeffs - b.coeffs}, 0.0});
    SdpSolution sol = solve(problem);
    if (sol.converged) {
        const bool valid = validate(sol.d).is_valid_channel;
        const double interference = interference_of_dynamical(sol.d).value;
        const auto [sa, sb] = universality_spread(sol.d, 20);
        if (!valid || interference > 1e-8 || sa > 1e-6 || sb > 1e-6)
            throw InvalidChannel("symmetric_optimum: optimizer failed channel verification");
    }
    return sol;
}

namespace {

// Rows pinning D·u = 0 componentwise for the eigenvector in the given
// column: real and imaginary part of each component as one Hermitian
// functional row each. Both projection steps preserve such a kernel
// (eigenvalue clipping keeps a null vector null), so the iteration runs
// entirely inside the pinned face.
void append_kernel_rows(std::vector<EqualityConstraint>& rows, const ComplexMatrix& vectors,
                        int column) {
    for (int r = 0; r < kN; ++r) {
        ComplexMatrix re(kN), im(kN);
        for (int k = 0; k < kN; ++k) {
            const cdouble u = vectors(k, column);
            re(r, k) += 0.5 * u;
            re(k, r) += 0.5 * std::conj(u);
            im(r, k) += cdouble(0.0, -0.5) * u;
            im(k, r) += cdouble(0.0, 0.5) * std::conj(u);
        }
        rows.push_back({LinearFunctional{re}, 0.0});
        rows.push_back({LinearFunctional{im}, 0.0});
    }
}

// At the endpoints of the feasible F̄_A range the scalar slice A·D = t
// meets the cone tangentially (the dual of the pinned problem is
// unbounded) and the splitting iteration stalls. The slice has an exact
// facial description instead: the charged eigenvectors of the
// first-clone functional span precisely the diagonal positions of two
// input columns, so the column normalization fixes the total charged
// mass and A·D becomes an affine function of the mass in the top
// eigenspace alone. Its minimum is attained exactly where the top
// eigendirections are annihilated, its maximum exactly where the
// intermediate ones are (the null directions are unpriced).
std::vector<EqualityConstraint> corner_face_constraints(
    const std::vector<EqualityConstraint>& base, const LinearFunctional& a, bool at_max) {
    std::vector<EqualityConstraint> rows = base;
    const EigenDecomposition eig = eigh(a.coeffs);
    const double top = eig.values.back();
    for (int c = 0; c < kN; ++c) {
        const bool is_top = eig.values[c] >= top - 1e-9;
        const bool intermediate = eig.values[c] > 1e-9 && !is_top;
        if (at_max ? intermediate : is_top) append_kernel_rows(rows, eig.vectors, c);
    }
    return rows;
}

SweepRecord sweep_point(double t, double a_min, double a_max,
                        const std::vector<EqualityConstraint>& base, const LinearFunctional& a,
                        const LinearFunctional& b) {
    SweepRecord rec;
    rec.fa = t;
    // Wide enough to absorb the solver's error in the computed range
    // endpoints.
    const bool at_max = std::abs(t - a_max) <= 1e-6;
    const bool at_min = std::abs(t - a_min) <= 1e-6;
    try {
        SdpProblem p;
        p.objective = b;
        if (at_max || at_min) {
            p.constraints = corner_face_constraints(base, a, at_max);
        } else {
            p.constraints = base;
            p.constraints.push_back({a, t});
        }
        p.sense = Sense::maximize;
        const SdpSolution smax = solve(p);
        p.sense = Sense::minimize;
        const SdpSolution smin = solve(p);
        rec.fb_max = smax.value;
        rec.fb_min = smin.value;
        rec.converged_max = smax.converged;
        rec.converged_min = smin.converged;
    } catch (const InfeasibleDetected&) {
        rec.fb_max = std::nan("");
        rec.fb_min = std::nan("");
        rec.converged_max = false;
        rec.converged_min = false;
    }
    return rec;
}

} // namespace

std::vector<SweepRecord> sweep_boundary(const std::vector<double>& fa_grid) {
    const auto [a, b] = fidelity_functionals();
    const std::vector<EqualityConstraint> base = standard_constraints(true);

    SdpProblem range;
    range.objective = a;
    range.constraints = base;
    range.sense = Sense::maximize;
    const double a_max = solve(range).value;
    range.sense = Sense::minimize;
    const double a_min = solve(range).value;

    std::vector<SweepRecord> records(fa_grid.size());
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(fa_grid.size())));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < fa_grid.size(); i += workers)
                    records[i] = sweep_point(fa_grid[i], a_min, a_max, base, a, b);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : failures)
        if (e) std::rethrow_exception(e);
    return records;
}

} // namespace qclone
