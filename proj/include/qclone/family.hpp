#pragma once

#include <cstdint>
#include <vector>

#include "qclone/channel.hpp"
#include "qclone/matrix.hpp"

namespace qclone {

// Orthonormal Hermitian perturbation directions W such that d_opt + t·W
// keeps both average fidelities, every column trace and the
// interference-free block structure unchanged, while staying supported
// on the range of d_opt (so small t cannot break positivity).
struct PerturbationBasis {
    std::vector<ComplexMatrix> basis; // Hermitian, Frobenius-orthonormal
    int dimension = 0;                // == basis.size(), derived numerically
    int claimed_dimension = 64;       // commonly quoted parameter count for
                                      // this family; reported, never asserted
};

struct MemberReport {
    bool valid_channel = false;
    double min_eigenvalue = 0.0;
    double interference = 0.0;
    double fidelity_a = 0.0;
    double fidelity_b = 0.0;
    double spread_a = 0.0;
    double spread_b = 0.0;
    double membership_residual = 0.0; // ‖(d − d_opt) − Π_span(d − d_opt)‖_F
    bool all_pass = false;
};

// Basis of the admissible perturbation subspace, built once and cached.
const PerturbationBasis& admissible_perturbation_basis();

// d_opt + epsilon·W for a seeded unit-spectral-norm W drawn uniformly
// from the admissible subspace; epsilon 0 returns d_opt exactly. Throws
// EpsilonTooLarge if the minimum eigenvalue drops below −1e-9 (cannot
// happen for epsilon ≤ 0.2: the spectrum on the support is bounded
// below by 1/4).
DynamicalMatrix sample_member(std::uint64_t seed, double epsilon);

// Checks channel validity, zero interference, both average fidelities
// equal to 5/6, universality, and distance from the affine family.
MemberReport verify_member(const DynamicalMatrix& d);

// Largest t with d_opt + t·direction still positive semidefinite,
// located by doubling plus bisection to absolute accuracy 1e-6. Returns
// +infinity for the zero direction. Throws NotAdmissible unless
// direction is Hermitian and lies in the admissible subspace.
double max_epsilon(const ComplexMatrix& direction);

} // namespace qclone
