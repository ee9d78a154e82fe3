#include <cmath>
#include <vector>

#include "doctest.h"
#include "qclone/errors.hpp"
#include "qclone/matrix.hpp"
#include "qclone/numkernel.hpp"
#include "qclone/random.hpp"
#include "test_support.hpp"

using namespace qclone;

TEST_CASE("eigh solves a known 2x2 problem") {
    ComplexMatrix m(2);
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    m(0, 1) = cdouble(0.0, -1.0);
    m(1, 0) = cdouble(0.0, 1.0);
    const EigenDecomposition e = eigh(m);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("eigh reconstructs, orders and phase-fixes") {
    GaussianSampler rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 15;
        const ComplexMatrix h = random_hermitian(rng, n);
        const EigenDecomposition e = eigh(h);

        // Reconstruction V·diag(λ)·V† = H.
        ComplexMatrix rec(n);
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    rec(r, c) += e.values[k] * e.vectors(r, k) * std::conj(e.vectors(c, k));
        CHECK(frobenius_norm(rec - h) <= 1e-12 * std::max(1.0, frobenius_norm(h)));

        // Orthonormal columns.
        CHECK(frobenius_norm(adjoint(e.vectors) * e.vectors - ComplexMatrix::identity(n)) <=
              1e-13);

        // Ascending values; first sizable component of each vector is
        // exactly real and positive.
        for (int k = 0; k + 1 < n; ++k) CHECK(e.values[k] <= e.values[k + 1]);
        for (int k = 0; k < n; ++k) {
            for (int r = 0; r < n; ++r) {
                if (std::abs(e.vectors(r, k)) > 1e-8) {
                    CHECK(e.vectors(r, k).imag() == 0.0);
                    CHECK(e.vectors(r, k).real() > 0.0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("eigh is deterministic") {
    GaussianSampler rng(11);
    const ComplexMatrix h = random_hermitian(rng, 16);
    const EigenDecomposition e1 = eigh(h);
    const EigenDecomposition e2 = eigh(h);
    for (int i = 0; i < 16; ++i) CHECK(e1.values[i] == e2.values[i]);
    for (std::size_t i = 0; i < e1.vectors.entries.size(); ++i)
        CHECK(e1.vectors.entries[i] == e2.vectors.entries[i]);
}

TEST_CASE("eigh rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eigh(m), NotHermitian);
}

TEST_CASE("project_psd clips negative spectrum") {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 2.0;
    m(1, 1) = 1.0; // eigenvalues 3 and -1
    const ComplexMatrix p = project_psd(m);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(p(r, c).real() == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(frobenius_norm(p - m) == doctest::Approx(1.0).epsilon(1e-12));

    const ComplexMatrix pp = project_psd(p);
    CHECK(frobenius_norm(pp - p) <= 1e-13);
}

TEST_CASE("project_psd returns the Frobenius-nearest PSD point") {
    GaussianSampler rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix h = random_hermitian(rng, 16);
        const ComplexMatrix p = project_psd(h);
        CHECK(eigh(p).values.front() >= -1e-12);
        // Complementarity: the clipped part is orthogonal to the result.
        cdouble inner = 0.0;
        const ComplexMatrix rem = h - p;
        for (std::size_t i = 0; i < p.entries.size(); ++i)
            inner += std::conj(p.entries[i]) * rem.entries[i];
        CHECK(std::abs(inner) <= 1e-10 * std::max(1.0, frobenius_norm(h)));
    }
}

TEST_CASE("nullspace of the zero matrix is the whole space") {
    const RealMatrix l(3, 5);
    const auto basis = nullspace(l, 1e-9);
    REQUIRE(basis.size() == 5);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            double d = 0.0;
            for (int i = 0; i < 5; ++i) d += basis[a][i] * basis[b][i];
            CHECK(d == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("nullspace finds known kernels") {
    RealMatrix l(2, 3);
    l(0, 0) = 1.0;
    l(0, 1) = -1.0; // x0 = x1, x2 free
    const auto basis = nullspace(l, 1e-9);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(std::abs(v[0] - v[1]) <= 1e-12);
        // Sign convention: first sizable component positive.
        for (double x : v) {
            if (std::abs(x) > 1e-8) {
                CHECK(x > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("nullspace dimension and accuracy on random rank-deficient systems") {
    GaussianSampler rng(5);
    const int rank = 5, rows = 8, cols = 12;
    RealMatrix left(rows, rank), right(rank, cols), l(rows, cols);
    for (auto* m : {&left, &right})
        for (double& v : m->entries) v = rng.gaussian();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            double s = 0.0;
            for (int k = 0; k < rank; ++k) s += left(r, k) * right(k, c);
            l(r, c) = s;
        }
    const auto basis = nullspace(l, 1e-9);
    REQUIRE(basis.size() == cols - rank);
    for (const auto& v : basis) {
        double worst = 0.0;
        for (int r = 0; r < rows; ++r) {
            double s = 0.0;
            for (int c = 0; c < cols; ++c) s += l(r, c) * v[c];
            worst = std::max(worst, std::abs(s));
        }
        CHECK(worst <= 1e-10);
    }
    const auto again = nullspace(l, 1e-9);
    REQUIRE(again.size() == basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (int i = 0; i < cols; ++i) CHECK(basis[a][i] == again[a][i]);
}
