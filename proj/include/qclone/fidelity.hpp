#pragma once

#include <utility>

#include "qclone/channel.hpp"
#include "qclone/matrix.hpp"

namespace qclone {

// Linear functional on 16×16 matrices evaluated through the matrix
// scalar product value(D) = Σ_{I,K} coeffs[I][K]·D[I][K] (no conjugation;
// real for Hermitian arguments).
struct LinearFunctional {
    ComplexMatrix coeffs;

    double value(const ComplexMatrix& m) const;
    double value(const DynamicalMatrix& d) const { return value(d.d); }
};

// ψ(θ,φ) = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩ with θ ∈ [0,π], φ ∈ [0,2π).
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

// The two Hermitian coefficient matrices giving the Bloch-average clone
// fidelities as linear functions of the dynamical matrix. Each has
// exactly 12 nonzero entries.
std::pair<LinearFunctional, LinearFunctional> fidelity_functionals();

// (F̄_A, F̄_B) = (A·D, B·D).
std::pair<double, double> average_fidelities(const DynamicalMatrix& d);

// Fidelities of the two clones for one input ψ(θ,φ), blank copy in |0⟩:
// F_j = ⟨ψ|ρ'_j|ψ⟩.
std::pair<double, double> point_fidelity(const DynamicalMatrix& d, BlochAngles angles);

// Uniform Bloch-sphere average of the point fidelities, via 32-node
// Gauss-Legendre quadrature in cosθ times 64 uniform nodes in φ. The
// integrand is a trigonometric polynomial of degree ≤ 4, so the rule is
// exact to round-off; agreement with average_fidelities is an
// independent check of the hard-coded functionals.
std::pair<double, double> average_by_quadrature(const DynamicalMatrix& d);

// Re-derives the fidelity functionals coefficient by coefficient from
// the quadrature average applied to Hermitian basis matrices (single
// diagonal entry, symmetric pair, antisymmetric pair).
std::pair<LinearFunctional, LinearFunctional> derive_fidelity_functionals();

// Max minus min of the point fidelities over a grid×grid lattice in
// (cosθ, φ), per clone. Zero for universal machines.
std::pair<double, double> universality_spread(const DynamicalMatrix& d, int grid);

// Reduced single-qubit outputs for input (α|0⟩+β|1⟩) ⊗ |0⟩.
std::pair<ComplexMatrix, ComplexMatrix> reduced_outputs(const DynamicalMatrix& d, cdouble alpha,
                                                        cdouble beta);

} // namespace qclone
