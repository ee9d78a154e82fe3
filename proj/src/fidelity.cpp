#include "qclone/fidelity.hpp"

#include <cmath>
#include <vector>

#include "qclone/errors.hpp"

namespace qclone {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr int kQuadU = 32;
constexpr int kQuadPhi = 64;

struct Quadrature {
    std::vector<double> nodes;   // u = cosθ
    std::vector<double> weights; // sum to 2
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on the Legendre
// recurrence; deterministic and accurate to round-off.
Quadrature gauss_legendre(int n) {
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[i] = x;
        q.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

const Quadrature& sphere_quadrature() {
    static const Quadrature q = gauss_legendre(kQuadU);
    return q;
}

TwoQubitState input_state(cdouble alpha, cdouble beta) {
    // (α|0⟩+β|1⟩)⟨·| ⊗ |0⟩⟨0|
    TwoQubitState s{ComplexMatrix(4)};
    const cdouble psi[2] = {alpha, beta};
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) s.rho(2 * a, 2 * c) = psi[a] * std::conj(psi[c]);
    return s;
}

std::pair<double, double> point_fidelity_amplitudes(const DynamicalMatrix& d, cdouble alpha,
                                                    cdouble beta) {
    const TwoQubitState out = apply(d, input_state(alpha, beta));
    const ComplexMatrix ra = partial_trace(out, Keep::A);
    const ComplexMatrix rb = partial_trace(out, Keep::B);
    const cdouble psi[2] = {alpha, beta};
    cdouble fa = 0.0, fb = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const cdouble w = std::conj(psi[a]) * psi[b];
            fa += w * ra(a, b);
            fb += w * rb(a, b);
        }
    return {fa.real(), fb.real()};
}

std::pair<double, double> quadrature_average(const DynamicalMatrix& d) {
    const Quadrature& q = sphere_quadrature();
    double fa = 0.0, fb = 0.0;
    for (int i = 0; i < kQuadU; ++i) {
        const double u = q.nodes[i];
        const double ct = std::sqrt(0.5 * (1.0 + u)); // cos(θ/2)
        const double st = std::sqrt(0.5 * (1.0 - u)); // sin(θ/2)
        double fa_phi = 0.0, fb_phi = 0.0;
        for (int j = 0; j < kQuadPhi; ++j) {
            const double phi = 2.0 * kPi * j / kQuadPhi;
            const cdouble beta = st * cdouble(std::cos(phi), std::sin(phi));
            const auto [pa, pb] = point_fidelity_amplitudes(d, ct, beta);
            fa_phi += pa;
            fb_phi += pb;
        }
        fa += q.weights[i] * fa_phi;
        fb += q.weights[i] * fb_phi;
    }
    // ∫dΩ/4π = ∫du dφ/4π; u-weights sum to 2, φ-sum counts kQuadPhi nodes.
    const double norm = 1.0 / (2.0 * kQuadPhi);
    return {fa * norm, fb * norm};
}

} // namespace

double LinearFunctional::value(const ComplexMatrix& m) const {
    if (m.dim != coeffs.dim) throw DimensionMismatch("functional: dimension mismatch");
    cdouble s = 0.0;
    for (std::size_t i = 0; i < coeffs.entries.size(); ++i)
        if (coeffs.entries[i] != cdouble(0.0)) s += coeffs.entries[i] * m.entries[i];
    return s.real();
}

std::pair<LinearFunctional, LinearFunctional> fidelity_functionals() {
    LinearFunctional a{ComplexMatrix(16)}, b{ComplexMatrix(16)};
    const int a2[4][2] = {{0, 0}, {4, 4}, {10, 10}, {14, 14}};
    const int a1[8][2] = {{0, 10}, {2, 2}, {4, 14}, {6, 6}, {8, 8}, {10, 0}, {12, 12}, {14, 4}};
    const int b2[4][2] = {{0, 0}, {6, 6}, {8, 8}, {14, 14}};
    const int b1[8][2] = {{0, 6}, {2, 2}, {4, 4}, {6, 0}, {8, 14}, {10, 10}, {12, 12}, {14, 8}};
    for (const auto& e : a2) a.coeffs(e[0], e[1]) = 2.0 / 6.0;
    for (const auto& e : a1) a.coeffs(e[0], e[1]) = 1.0 / 6.0;
    for (const auto& e : b2) b.coeffs(e[0], e[1]) = 2.0 / 6.0;
    for (const auto& e : b1) b.coeffs(e[0], e[1]) = 1.0 / 6.0;
    return {a, b};
}

std::pair<double, double> average_fidelities(const DynamicalMatrix& d) {
    static const auto fns = fidelity_functionals();
    return {fns.first.value(d), fns.second.value(d)};
}

std::pair<double, double> point_fidelity(const DynamicalMatrix& d, BlochAngles angles) {
    const double ct = std::cos(angles.theta / 2.0);
    const double st = std::sin(angles.theta / 2.0);
    const cdouble beta = st * cdouble(std::cos(angles.phi), std::sin(angles.phi));
    return point_fidelity_amplitudes(d, ct, beta);
}

std::pair<double, double> average_by_quadrature(const DynamicalMatrix& d) {
    return quadrature_average(d);
}

std::pair<LinearFunctional, LinearFunctional> derive_fidelity_functionals() {
    LinearFunctional a{ComplexMatrix(16)}, b{ComplexMatrix(16)};
    for (int i = 0; i < 16; ++i) {
        DynamicalMatrix probe{ComplexMatrix(16)};
        probe.d(i, i) = 1.0;
        const auto [fa, fb] = quadrature_average(probe);
        a.coeffs(i, i) = fa;
        b.coeffs(i, i) = fb;
    }
    for (int i = 0; i < 16; ++i)
        for (int k = i + 1; k < 16; ++k) {
            DynamicalMatrix sym{ComplexMatrix(16)};
            sym.d(i, k) = 1.0;
            sym.d(k, i) = 1.0;
            DynamicalMatrix anti{ComplexMatrix(16)};
            anti.d(i, k) = cdouble(0.0, 1.0);
            anti.d(k, i) = cdouble(0.0, -1.0);
            const auto [sa, sb] = quadrature_average(sym);
            const auto [ta, tb] = quadrature_average(anti);
            // value(sym) = 2·Re coeff, value(anti) = -2·Im coeff
            a.coeffs(i, k) = cdouble(sa / 2.0, -ta / 2.0);
            a.coeffs(k, i) = std::conj(a.coeffs(i, k));
            b.coeffs(i, k) = cdouble(sb / 2.0, -tb / 2.0);
            b.coeffs(k, i) = std::conj(b.coeffs(i, k));
        }
    return {a, b};
}

std::pair<double, double> universality_spread(const DynamicalMatrix& d, int grid) {
    if (grid < 8) throw DimensionMismatch("universality_spread: grid must be at least 8");
    double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
    for (int i = 0; i < grid; ++i) {
        const double u = -1.0 + (2.0 * i + 1.0) / grid;
        const double theta = std::acos(u);
        for (int j = 0; j < grid; ++j) {
            const double phi = 2.0 * kPi * j / grid;
            const auto [fa, fb] = point_fidelity(d, {theta, phi});
            amin = std::min(amin, fa);
            amax = std::max(amax, fa);
            bmin = std::min(bmin, fb);
            bmax = std::max(bmax, fb);
        }
    }
    return {amax - amin, bmax - bmin};
}

std::pair<ComplexMatrix, ComplexMatrix> reduced_outputs(const DynamicalMatrix& d, cdouble alpha,
                                                        cdouble beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
        throw NotNormalized("reduced_outputs: |alpha|^2 + |beta|^2 must be 1");
    const TwoQubitState out = apply(d, input_state(alpha, beta));
    return {partial_trace(out, Keep::A), partial_trace(out, Keep::B)};
}

} // namespace qclone
