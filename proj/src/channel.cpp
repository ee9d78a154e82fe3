#include "qclone/channel.hpp"

#include <cmath>

#include "qclone/errors.hpp"
#include "qclone/interference.hpp"
#include "qclone/numkernel.hpp"

namespace qclone {

namespace {

// Shared entry permutation: out[4a+c][4b+d] = in[4a+b][4c+d].
ComplexMatrix swap_middle_indices(const ComplexMatrix& in) {
    if (in.dim != 16) throw DimensionMismatch("reshuffle: matrix must be 16x16");
    ComplexMatrix out(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) out(4 * a + c, 4 * b + d) = in(4 * a + b, 4 * c + d);
    return out;
}

bool valid_state(const TwoQubitState& s) {
    if (s.rho.dim != 4) return false;
    if (hermiticity_residual(s.rho) > 1e-10) return false;
    if (std::abs(trace(s.rho) - cdouble(1.0)) > 1e-10) return false;
    return eigh(hermitized(s.rho)).values.front() >= -1e-10;
}

} // namespace

DynamicalMatrix reshuffle(const PropagatorMatrix& p) {
    return {swap_middle_indices(p.p)};
}

PropagatorMatrix unreshuffle(const DynamicalMatrix& d) {
    return {swap_middle_indices(d.d)};
}

TwoQubitState apply(const DynamicalMatrix& d, const TwoQubitState& rho, bool strict) {
    if (d.d.dim != 16) throw DimensionMismatch("apply: dynamical matrix must be 16x16");
    if (rho.rho.dim != 4) throw DimensionMismatch("apply: state must be 4x4");
    if (strict) {
        if (!validate(d).is_valid_channel) throw InvalidChannel("apply: dynamical matrix failed validation");
        if (!valid_state(rho)) throw InvalidChannel("apply: input is not a density matrix");
    }
    TwoQubitState out{ComplexMatrix(4)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cdouble s = 0.0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += d.d(4 * i + k, 4 * j + l) * rho.rho(k, l);
            out.rho(i, j) = s;
        }
    return out;
}

ComplexMatrix partial_trace(const TwoQubitState& rho, Keep keep) {
    if (rho.rho.dim != 4) throw DimensionMismatch("partial_trace: state must be 4x4");
    ComplexMatrix out(2);
    if (keep == Keep::A) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                out(a, b) = rho.rho(2 * a, 2 * b) + rho.rho(2 * a + 1, 2 * b + 1);
    } else {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) out(a, b) = rho.rho(a, b) + rho.rho(2 + a, 2 + b);
    }
    return out;
}

DynamicalMatrix channel_from_kraus(const std::vector<ComplexMatrix>& operators) {
    ComplexMatrix sum(4);
    for (const ComplexMatrix& k : operators) {
        if (k.dim != 4) throw DimensionMismatch("channel_from_kraus: operators must be 4x4");
        sum = sum + adjoint(k) * k;
    }
    if (frobenius_norm(sum - ComplexMatrix::identity(4)) > 1e-9)
        throw NotTracePreserving("channel_from_kraus: sum of K†K is not the identity");

    DynamicalMatrix out{ComplexMatrix(16)};
    for (const ComplexMatrix& k : operators)
        for (int i = 0; i < 4; ++i)
            for (int kk = 0; kk < 4; ++kk) {
                const cdouble left = k(i, kk);
                if (left == cdouble(0.0)) continue;
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l)
                        out.d(4 * i + kk, 4 * j + l) += left * std::conj(k(j, l));
            }
    return out;
}

DynamicalMatrix d_opt() {
    DynamicalMatrix m{ComplexMatrix(16)};
    const double diag[16] = {2.0 / 3.0, 0.25, 0.0,  0.25, 1.0 / 6.0, 0.25, 1.0 / 6.0, 0.25,
                             1.0 / 6.0, 0.25, 1.0 / 6.0, 0.25, 0.0,  0.25, 2.0 / 3.0, 0.25};
    for (int i = 0; i < 16; ++i) m.d(i, i) = diag[i];
    const int thirds[8][2] = {{0, 6}, {6, 0}, {0, 10}, {10, 0}, {4, 14}, {14, 4}, {8, 14}, {14, 8}};
    for (const auto& e : thirds) m.d(e[0], e[1]) = 1.0 / 3.0;
    const int sixths[4][2] = {{4, 8}, {8, 4}, {6, 10}, {10, 6}};
    for (const auto& e : sixths) m.d(e[0], e[1]) = 1.0 / 6.0;
    return m;
}

DynamicalMatrix trivial_swap_channel() {
    // Kraus set: {(I⊗|m⟩⟨n|)/2} ∪ {SWAP·(I⊗|m⟩⟨n|)/2} for m,n ∈ {0,1}.
    ComplexMatrix swap(4);
    swap(0, 0) = 1.0;
    swap(1, 2) = 1.0;
    swap(2, 1) = 1.0;
    swap(3, 3) = 1.0;
    std::vector<ComplexMatrix> ops;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
            ComplexMatrix k(4);
            for (int a = 0; a < 2; ++a) k(2 * a + m, 2 * a + n) = 0.5;
            ops.push_back(k);
            ops.push_back(swap * k);
        }
    return channel_from_kraus(ops);
}

DynamicalMatrix identity_channel() {
    DynamicalMatrix m{ComplexMatrix(16)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.d(5 * i, 5 * j) = 1.0;
    return m;
}

ValidationReport validate(const DynamicalMatrix& d) {
    if (d.d.dim != 16) throw DimensionMismatch("validate: dynamical matrix must be 16x16");
    ValidationReport r;
    r.hermiticity_residual = hermiticity_residual(d.d);
    for (int j = 0; j < 4; ++j) {
        cdouble col = 0.0;
        for (int i = 0; i < 4; ++i) col += d.d(4 * i + j, 4 * i + j);
        r.trace_residuals[j] = std::abs(col - cdouble(1.0));
    }
    r.min_eigenvalue = eigh(hermitized(d.d)).values.front();
    r.interference = interference_of_dynamical(d).value;
    bool traces_ok = true;
    for (double t : r.trace_residuals) traces_ok = traces_ok && t <= 1e-9;
    r.is_valid_channel =
        r.hermiticity_residual <= 1e-10 && traces_ok && r.min_eigenvalue >= -1e-9;
    return r;
}

} // namespace qclone
