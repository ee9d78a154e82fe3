#include "qclone/matrix.hpp"

#include <cmath>

#include "qclone/errors.hpp"

namespace qclone {

ComplexMatrix ComplexMatrix::identity(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

static void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim != b.dim) throw DimensionMismatch("matrix dimensions differ");
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = a.entries[i] + b.entries[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = a.entries[i] - b.entries[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cdouble aik = a(i, k);
            if (aik == cdouble(0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cdouble s, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = s * a.entries[i];
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
    return cdouble(s, 0.0) * a;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim);
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

cdouble trace(const ComplexMatrix& a) {
    cdouble t = 0.0;
    for (int i = 0; i < a.dim; ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cdouble& v : a.entries) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cdouble& v : a.entries) m = std::max(m, std::abs(v));
    return m;
}

double hermiticity_residual(const ComplexMatrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) s += std::norm(a(r, c) - std::conj(a(c, r)));
    return std::sqrt(s);
}

ComplexMatrix hermitized(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim);
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) out(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
    return out;
}

} // namespace qclone
