#pragma once

#include <optional>
#include <vector>

#include "qclone/channel.hpp"
#include "qclone/fidelity.hpp"

namespace qclone {

struct EqualityConstraint {
    LinearFunctional functional; // Hermitian coefficient matrix
    double target = 0.0;
};

enum class Sense { maximize, minimize };

struct SdpProblem {
    LinearFunctional objective;
    Sense sense = Sense::maximize;
    std::vector<EqualityConstraint> constraints;
};

struct SdpSolution {
    DynamicalMatrix d;
    double value = 0.0;
    double primal_residual = 0.0;
    double constraint_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct SweepRecord {
    double fa = 0.0;
    double fb_min = 0.0;
    double fb_max = 0.0;
    bool converged_min = false;
    bool converged_max = false;
};

// The 4 column-normalization constraints (Σ_i D[4i+j][4i+j] = 1 per j),
// plus, when requested, 48 real constraints zeroing the real and
// imaginary parts of the 24 upper-triangle entries of the four diagonal
// 4×4 blocks. Hermiticity is structural in the solver's parametrization,
// not a constraint row.
std::vector<EqualityConstraint> standard_constraints(bool zero_interference);

// Splitting solver over the cone of 16×16 PSD Hermitian matrices:
// alternates a projection onto the affine equality set (precomputed
// orthonormalized rows) carrying the objective gradient with a
// projection onto the PSD cone, with over-relaxation. Deterministic.
// Returns the PSD-side iterate; converged means primal and constraint
// residuals ≤ 1e-8 and the objective is stationary to 1e-10 relative
// over the last check window. Hits of the iteration cap (2×10^5) return
// converged = false; a constraint residual that stalls above 1e-4 throws
// InfeasibleDetected; inconsistent constraint rows are rejected at setup.
SdpSolution solve(const SdpProblem& problem,
                  std::optional<DynamicalMatrix> initial = std::nullopt);

// maximize (A+B)/2 under the interference-free standard constraints plus
// A·D = B·D; verifies the optimizer is a valid interference-free
// universal channel before returning it.
SdpSolution symmetric_optimum();

// For each grid value t: extremize B·D under the standard constraints
// plus F̄_A = t. At the endpoints of the feasible F̄_A range the equality
// slice meets the cone tangentially and plain splitting iterations
// stall; those grid points are solved exactly on the face instead: the
// column normalization makes F̄_A an affine function of the D-mass in
// the top eigenspace of its coefficient matrix, so the extreme slices
// are the subcones annihilating the top (minimum) or the intermediate
// (maximum) eigendirections, pinned by componentwise kernel rows.
// Points run across parallel workers; results are ordered by grid
// index.
std::vector<SweepRecord> sweep_boundary(const std::vector<double>& fa_grid);

} // namespace qclone
