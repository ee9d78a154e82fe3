#include "qclone/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qclone/errors.hpp"
#include "qclone/random.hpp"

namespace qclone {

ComplexMatrix random_complex(GaussianSampler& rng, int dim) {
    ComplexMatrix m(dim);
    for (cdouble& v : m.entries) v = rng.complex_gaussian();
    return m;
}

ComplexMatrix random_hermitian(GaussianSampler& rng, int dim) {
    return hermitized(random_complex(rng, dim));
}

namespace {

constexpr int kMaxSweeps = 10000;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.dim; ++p)
        for (int q = 0; q < a.dim; ++q)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

// One cyclic sweep of two-sided Jacobi rotations; returns true if any
// rotation was applied.
bool jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
    const int n = a.dim;
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const cdouble beta = a(p, q);
            const double ab = std::abs(beta);
            if (ab < 1e-300) continue;
            rotated = true;
            const double alpha = a(p, p).real();
            const double gamma = a(q, q).real();
            const double theta = (gamma - alpha) / (2.0 * ab);
            const double sgn = theta >= 0.0 ? 1.0 : -1.0;
            const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const cdouble u = beta / ab;
            const cdouble su = s * u;
            const cdouble suc = s * std::conj(u);
            // A <- A·J with J(p,p)=c, J(p,q)=s·u, J(q,p)=-s·conj(u), J(q,q)=c
            for (int r = 0; r < n; ++r) {
                const cdouble ap = a(r, p), aq = a(r, q);
                a(r, p) = c * ap - suc * aq;
                a(r, q) = su * ap + c * aq;
            }
            // A <- J†·A
            for (int col = 0; col < n; ++col) {
                const cdouble ap = a(p, col), aq = a(q, col);
                a(p, col) = c * ap - su * aq;
                a(q, col) = suc * ap + c * aq;
            }
            // V <- V·J
            for (int r = 0; r < n; ++r) {
                const cdouble vp = v(r, p), vq = v(r, q);
                v(r, p) = c * vp - suc * vq;
                v(r, q) = su * vp + c * vq;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
        }
    }
    return rotated;
}

void phase_fix_column(ComplexMatrix& v, int col) {
    for (int r = 0; r < v.dim; ++r) {
        const double m = std::abs(v(r, col));
        if (m > 1e-8) {
            const cdouble phase = v(r, col) / m;
            for (int k = 0; k < v.dim; ++k) v(k, col) *= std::conj(phase);
            v(r, col) = cdouble(std::abs(v(r, col)), 0.0);
            return;
        }
    }
}

} // namespace

EigenDecomposition eigh(const ComplexMatrix& h) {
    if (h.dim <= 0) throw DimensionMismatch("eigh: empty matrix");
    if (hermiticity_residual(h) > 1e-9) throw NotHermitian("eigh: input is not Hermitian");

    const int n = h.dim;
    ComplexMatrix a = hermitized(h);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, frobenius_norm(a));

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-14 * scale) {
            converged = true;
            break;
        }
        if (!jacobi_sweep(a, v)) {
            converged = true;
            break;
        }
    }
    if (!converged && off_diagonal_norm(a) > 1e-14 * scale)
        throw NoConvergence("eigh: Jacobi sweep cap exceeded");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
        phase_fix_column(out.vectors, j);
    }
    return out;
}

ComplexMatrix project_psd(const ComplexMatrix& h) {
    if (hermiticity_residual(h) > 1e-9) throw NotHermitian("project_psd: input is not Hermitian");
    const EigenDecomposition e = eigh(h);
    const int n = h.dim;
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lam = e.values[k];
        if (lam <= 0.0) continue;
        for (int r = 0; r < n; ++r) {
            const cdouble vr = lam * e.vectors(r, k);
            for (int c = 0; c < n; ++c) out(r, c) += vr * std::conj(e.vectors(c, k));
        }
    }
    return hermitized(out);
}

std::vector<std::vector<double>> nullspace(const RealMatrix& l, double tol) {
    const int m = l.rows, n = l.cols;
    // Column-major working copy of L and accumulated rotations V.
    std::vector<std::vector<double>> w(n, std::vector<double>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) w[c][r] = l(r, c);
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int c = 0; c < n; ++c) v[c][c] = 1.0;

    auto dot = [m](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += a[i] * b[i];
        return s;
    };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double app = dot(w[p], w[p]);
                const double aqq = dot(w[q], w[q]);
                const double apq = dot(w[p], w[q]);
                if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double sgn = zeta >= 0.0 ? 1.0 : -1.0;
                const double t = sgn / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < m; ++i) {
                    const double wp = w[p][i], wq = w[q][i];
                    w[p][i] = c * wp - s * wq;
                    w[q][i] = s * wp + c * wq;
                }
                for (int i = 0; i < n; ++i) {
                    const double vp = v[p][i], vq = v[q][i];
                    v[p][i] = c * vp - s * vq;
                    v[q][i] = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    double sigma_max = 0.0;
    for (int c = 0; c < n; ++c) {
        sigma[c] = std::sqrt(dot(w[c], w[c]));
        sigma_max = std::max(sigma_max, sigma[c]);
    }

    std::vector<std::vector<double>> basis;
    for (int c = 0; c < n; ++c) {
        if (sigma_max > 0.0 && sigma[c] >= tol * sigma_max) continue;
        std::vector<double> vec = v[c];
        for (int i = 0; i < n; ++i) {
            if (std::abs(vec[i]) > 1e-8) {
                if (vec[i] < 0.0)
                    for (double& x : vec) x = -x;
                break;
            }
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace qclone
