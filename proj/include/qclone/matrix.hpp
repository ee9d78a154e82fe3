#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qclone {

using cdouble = std::complex<double>;

// Dense square complex matrix, row-major.
struct ComplexMatrix {
    int dim = 0;
    std::vector<cdouble> entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int d)
        : dim(d), entries(static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {}

    cdouble& operator()(int r, int c) {
        return entries[static_cast<std::size_t>(r) * dim + c];
    }
    const cdouble& operator()(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * dim + c];
    }

    static ComplexMatrix identity(int d);
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
cdouble trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);

// ‖M − M†‖_F
double hermiticity_residual(const ComplexMatrix& a);

// (M + M†)/2
ComplexMatrix hermitized(const ComplexMatrix& a);

} // namespace qclone
