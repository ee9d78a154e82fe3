#pragma once

#include <vector>

#include "qclone/matrix.hpp"

namespace qclone {

struct EigenDecomposition {
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // columns are orthonormal eigenvectors
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
// Deterministic: fixed rotation order, eigenvalues ascending, each
// eigenvector phase-fixed so its first nonvanishing component is real
// and positive. Throws NotHermitian if ‖H − H†‖_F > 1e-9, NoConvergence
// after 10^4 sweeps.
EigenDecomposition eigh(const ComplexMatrix& h);

// Frobenius-nearest positive-semidefinite matrix (clip negative
// eigenvalues to zero and reassemble). Idempotent.
ComplexMatrix project_psd(const ComplexMatrix& h);

// Dense real matrix, row-major.
struct RealMatrix {
    int rows = 0, cols = 0;
    std::vector<double> entries;

    RealMatrix() = default;
    RealMatrix(int r, int c)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    double& operator()(int r, int c) {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
    double operator()(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
};

// Orthonormal basis of the right nullspace of L: vectors v with
// ‖L·v‖ ≤ tol·σ_max. Computed by one-sided Jacobi orthogonalization of
// the columns of L (no normal-equation squaring), so small singular
// values are resolved to machine precision.
std::vector<std::vector<double>> nullspace(const RealMatrix& l, double tol);

} // namespace qclone
