#include "qclone/interference.hpp"

#include <cmath>

#include "qclone/errors.hpp"

namespace qclone {

InterferenceValue interference_of_propagator(const PropagatorMatrix& p) {
    if (p.p.dim != 16) throw DimensionMismatch("interference: propagator must be 16x16");
    double all = 0.0, diag = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            for (int l = 0; l < 4; ++l) all += std::norm(p.p(4 * i + i, 4 * k + l));
            diag += std::norm(p.p(4 * i + i, 4 * k + k));
        }
    return {all - diag, 4};
}

InterferenceValue interference_of_dynamical(const DynamicalMatrix& d) {
    if (d.d.dim != 16) throw DimensionMismatch("interference: dynamical matrix must be 16x16");
    double all = 0.0, diag = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            for (int l = 0; l < 4; ++l) all += std::norm(d.d(4 * i + k, 4 * i + l));
            diag += std::norm(d.d(4 * i + k, 4 * i + k));
        }
    return {all - diag, 4};
}

InterferenceValue interference_of_unitary(const ComplexMatrix& u) {
    if (frobenius_norm(adjoint(u) * u - ComplexMatrix::identity(u.dim)) > 1e-9)
        throw NotUnitary("interference: matrix is not unitary");
    double quartic = 0.0;
    for (const cdouble& v : u.entries) {
        const double m2 = std::norm(v);
        quartic += m2 * m2;
    }
    return {static_cast<double>(u.dim) - quartic, u.dim};
}

bool is_interference_free(const DynamicalMatrix& d, double tol) {
    if (d.d.dim != 16) throw DimensionMismatch("interference: dynamical matrix must be 16x16");
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l)
                if (k != l && std::abs(d.d(4 * i + k, 4 * i + l)) > tol) return false;
    return true;
}

} // namespace qclone
