#pragma once

#include "qclone/channel.hpp"
#include "qclone/matrix.hpp"

namespace qclone {

struct InterferenceValue {
    double value = 0.0;
    int hilbert_dim = 4;
};

// ℐ = Σ_{i,k,l} |P[4i+i][4k+l]|² − Σ_{i,k} |P[4i+i][4k+k]|²: how much the
// output probabilities depend on input coherences, plus equipartition.
// Zero for classical stochastic maps and basis permutations; at most
// N − 1 for valid channels.
InterferenceValue interference_of_propagator(const PropagatorMatrix& p);

// Same measure on the dynamical matrix:
// ℐ = Σ_{i,k,l} |D[4i+k][4i+l]|² − Σ_{i,k} |D[4i+k][4i+k]|².
InterferenceValue interference_of_dynamical(const DynamicalMatrix& d);

// For a unitary acting on an N-dimensional system: N − Σ_{i,k}|U_ik|⁴.
InterferenceValue interference_of_unitary(const ComplexMatrix& u);

// True iff every off-diagonal element of the four diagonal 4×4 blocks
// of D has magnitude ≤ tol.
bool is_interference_free(const DynamicalMatrix& d, double tol);

} // namespace qclone
