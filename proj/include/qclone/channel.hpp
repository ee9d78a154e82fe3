#pragma once

#include <array>
#include <vector>

#include "qclone/matrix.hpp"

namespace qclone {

// 4×4 density matrix of qubits A (original) and B (copy) in the product
// basis |00⟩,|01⟩,|10⟩,|11⟩, A being the leading factor.
struct TwoQubitState {
    ComplexMatrix rho;
};

// 16×16 superoperator: row packs (i,j) as 4i+j, column packs (k,l) as
// 4k+l, acting as ρ'_ij = Σ_kl P[4i+j][4k+l]·ρ_kl.
struct PropagatorMatrix {
    ComplexMatrix p;
};

// 16×16 dynamical (Choi) matrix: row index I packs (i,k) as 4i+k,
// column index J packs (j,l) as 4j+l. Hermitian for any channel;
// positive semidefinite iff the channel is completely positive; column
// normalization Σ_i D[4i+j][4i+j] = 1 for each j iff trace preserving.
struct DynamicalMatrix {
    ComplexMatrix d;
};

struct ValidationReport {
    double hermiticity_residual = 0.0;
    std::array<double, 4> trace_residuals{};
    double min_eigenvalue = 0.0;
    double interference = 0.0;
    bool is_valid_channel = false;
};

enum class Keep { A, B };

// Index permutation D[4i+k][4j+l] = P[4i+j][4k+l]; an involution.
DynamicalMatrix reshuffle(const PropagatorMatrix& p);
PropagatorMatrix unreshuffle(const DynamicalMatrix& d);

// ρ'_ij = Σ_kl D[4i+k][4j+l]·ρ_kl. In strict mode the channel and state
// are validated first and InvalidChannel is thrown on failure.
TwoQubitState apply(const DynamicalMatrix& d, const TwoQubitState& rho, bool strict = false);

// 2×2 reduced density matrix of the kept qubit.
ComplexMatrix partial_trace(const TwoQubitState& rho, Keep keep);

// D[4i+k][4j+l] = Σ_m K_m(i,k)·conj(K_m(j,l)). Throws NotTracePreserving
// unless Σ_m K_m†·K_m = I within 1e-9.
DynamicalMatrix channel_from_kraus(const std::vector<ComplexMatrix>& operators);

// The optimal interference-free symmetric cloner. Nonzero entries:
// diagonal (2/3, 1/4, 0, 1/4, 1/6, 1/4, 1/6, 1/4, 1/6, 1/4, 1/6, 1/4,
// 0, 1/4, 2/3, 1/4); value 1/3 at (0,6),(6,0),(0,10),(10,0),(4,14),
// (14,4),(8,14),(14,8); value 1/6 at (4,8),(8,4),(6,10),(10,6).
DynamicalMatrix d_opt();

// ρ ↦ ½·Tr_B(ρ)⊗I/2 + ½·I/2⊗Tr_B(ρ): keep the original or swap it onto
// the copy slot with probability 1/2, replacing the other slot by the
// maximally mixed state.
DynamicalMatrix trivial_swap_channel();

// D of the identity channel: ones at (5i, 5j) for i,j ∈ {0..3}.
DynamicalMatrix identity_channel();

ValidationReport validate(const DynamicalMatrix& d);

} // namespace qclone
