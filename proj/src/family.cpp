#include "qclone/family.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/interference.hpp"
#include "qclone/numkernel.hpp"
#include "qclone/random.hpp"

namespace qclone {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

// Orthonormal eigenvectors spanning the range of d_opt (eigenvalues 1/4
// and 1); ten of them.
std::vector<std::vector<cdouble>> support_vectors() {
    const EigenDecomposition eig = eigh(d_opt().d);
    std::vector<std::vector<cdouble>> vecs;
    for (int a = 0; a < eig.vectors.dim; ++a) {
        if (eig.values[a] > 1e-8) {
            std::vector<cdouble> v(eig.vectors.dim);
            for (int r = 0; r < eig.vectors.dim; ++r) v[r] = eig.vectors(r, a);
            vecs.push_back(std::move(v));
        }
    }
    return vecs;
}

ComplexMatrix outer(const std::vector<cdouble>& u, const std::vector<cdouble>& v) {
    ComplexMatrix m(static_cast<int>(u.size()));
    for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c) m(r, c) = u[r] * std::conj(v[c]);
    return m;
}

// Frobenius-orthonormal Hermitian coordinate matrices for the space of
// Hermitian operators supported on span{v_a}: one per diagonal pair and
// a symmetric/antisymmetric pair per off-diagonal index pair.
std::vector<ComplexMatrix> hermitian_coordinates(const std::vector<std::vector<cdouble>>& vecs) {
    const int n = static_cast<int>(vecs.size());
    std::vector<ComplexMatrix> coords;
    coords.reserve(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) coords.push_back(outer(vecs[a], vecs[a]));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const ComplexMatrix ab = outer(vecs[a], vecs[b]);
            const ComplexMatrix ba = outer(vecs[b], vecs[a]);
            coords.push_back(kSqrtHalf * (ab + ba));
            coords.push_back(cdouble(0.0, kSqrtHalf) * (ab - ba));
        }
    }
    return coords;
}

// Rows: A·H = 0, B·H = 0, four column traces, and the real and
// imaginary parts of the 24 off-diagonal entries of the four diagonal
// 4×4 blocks. All are real-linear in Hermitian H.
RealMatrix constraint_matrix(const std::vector<ComplexMatrix>& coords) {
    const auto [fa, fb] = fidelity_functionals();
    const int cols = static_cast<int>(coords.size());
    RealMatrix l(2 + 4 + 48, cols);
    for (int c = 0; c < cols; ++c) {
        const ComplexMatrix& h = coords[c];
        l(0, c) = fa.value(h);
        l(1, c) = fb.value(h);
        for (int j = 0; j < 4; ++j) {
            double t = 0.0;
            for (int i = 0; i < 4; ++i) t += h(4 * i + j, 4 * i + j).real();
            l(2 + j, c) = t;
        }
        int row = 6;
        for (int i = 0; i < 4; ++i) {
            for (int k = 0; k < 4; ++k) {
                for (int m = k + 1; m < 4; ++m) {
                    const cdouble e = h(4 * i + k, 4 * i + m);
                    l(row++, c) = e.real();
                    l(row++, c) = e.imag();
                }
            }
        }
    }
    return l;
}

PerturbationBasis build_basis() {
    const auto vecs = support_vectors();
    const auto coords = hermitian_coordinates(vecs);
    const auto null_vecs = nullspace(constraint_matrix(coords), 1e-9);

    PerturbationBasis pb;
    pb.dimension = static_cast<int>(null_vecs.size());
    pb.basis.reserve(null_vecs.size());
    for (const auto& y : null_vecs) {
        ComplexMatrix w(16);
        for (std::size_t c = 0; c < y.size(); ++c) {
            if (y[c] == 0.0) continue;
            w = w + y[c] * coords[c];
        }
        pb.basis.push_back(hermitized(w));
    }
    return pb;
}

double min_eigenvalue(const ComplexMatrix& h) { return eigh(hermitized(h)).values.front(); }

double spectral_norm_hermitian(const ComplexMatrix& h) {
    const EigenDecomposition eig = eigh(h);
    return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
}

// Frobenius distance of h from the span of the (orthonormal) basis.
double span_residual(const ComplexMatrix& h) {
    const PerturbationBasis& pb = admissible_perturbation_basis();
    ComplexMatrix rem = h;
    for (const ComplexMatrix& w : pb.basis) {
        cdouble dot = 0.0;
        for (std::size_t e = 0; e < rem.entries.size(); ++e)
            dot += std::conj(w.entries[e]) * rem.entries[e];
        rem = rem - dot * w;
    }
    return frobenius_norm(rem);
}

} // namespace

const PerturbationBasis& admissible_perturbation_basis() {
    static const PerturbationBasis table = build_basis();
    return table;
}

DynamicalMatrix sample_member(std::uint64_t seed, double epsilon) {
    DynamicalMatrix base = d_opt();
    if (epsilon == 0.0) return base;

    const PerturbationBasis& pb = admissible_perturbation_basis();
    GaussianSampler rng(seed);
    std::vector<double> coeff(pb.basis.size());
    double norm2 = 0.0;
    for (double& c : coeff) {
        c = rng.gaussian();
        norm2 += c * c;
    }
    const double inv = 1.0 / std::sqrt(norm2);

    ComplexMatrix w(16);
    for (std::size_t i = 0; i < coeff.size(); ++i) w = w + (coeff[i] * inv) * pb.basis[i];
    w = (1.0 / spectral_norm_hermitian(w)) * w;

    DynamicalMatrix out{base.d + epsilon * w};
    if (min_eigenvalue(out.d) < -1e-9)
        throw EpsilonTooLarge("sample_member: perturbation breaks positivity");
    return out;
}

MemberReport verify_member(const DynamicalMatrix& d) {
    MemberReport rep;
    const ValidationReport val = validate(d);
    rep.valid_channel = val.is_valid_channel;
    rep.min_eigenvalue = val.min_eigenvalue;
    rep.interference = val.interference;
    const auto [fa, fb] = average_fidelities(d);
    rep.fidelity_a = fa;
    rep.fidelity_b = fb;
    const auto [sa, sb] = universality_spread(d, 20);
    rep.spread_a = sa;
    rep.spread_b = sb;
    rep.membership_residual = span_residual(hermitized(d.d - d_opt().d));

    const double f_target = 5.0 / 6.0;
    rep.all_pass = rep.valid_channel && rep.interference <= 1e-9 &&
                   std::abs(rep.fidelity_a - f_target) <= 1e-9 &&
                   std::abs(rep.fidelity_b - f_target) <= 1e-9 && rep.spread_a <= 1e-8 &&
                   rep.spread_b <= 1e-8 && rep.membership_residual <= 1e-8;
    return rep;
}

double max_epsilon(const ComplexMatrix& direction) {
    if (direction.dim != 16) throw NotAdmissible("max_epsilon: direction must be 16x16");
    const double fro = frobenius_norm(direction);
    if (fro <= 1e-12) return std::numeric_limits<double>::infinity();
    if (hermiticity_residual(direction) > 1e-9)
        throw NotAdmissible("max_epsilon: direction is not Hermitian");
    if (span_residual(direction) > 1e-8 * std::max(1.0, fro))
        throw NotAdmissible("max_epsilon: direction leaves the admissible subspace");

    const ComplexMatrix base = d_opt().d;
    const auto psd_at = [&](double t) { return min_eigenvalue(base + t * direction) >= -1e-12; };

    double lo = 0.0, hi = 0.25;
    while (psd_at(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) return std::numeric_limits<double>::infinity();
    }
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (psd_at(mid) ? lo : hi) = mid;
    }
    return lo;
}

} // namespace qclone
