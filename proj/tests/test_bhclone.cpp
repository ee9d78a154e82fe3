#include <cmath>
#include <complex>

#include "doctest.h"
#include "qclone/bhclone.hpp"
#include "qclone/channel.hpp"
#include "qclone/errors.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/random.hpp"
#include "test_support.hpp"

using namespace qclone;
using qclone::testing::random_qubit;

namespace {

ComplexMatrix closed_form_clone(cdouble alpha, cdouble beta) {
    ComplexMatrix psi(2);
    psi(0, 0) = std::norm(alpha);
    psi(0, 1) = alpha * std::conj(beta);
    psi(1, 0) = beta * std::conj(alpha);
    psi(1, 1) = std::norm(beta);
    return (2.0 / 3.0) * psi + (1.0 / 6.0) * ComplexMatrix::identity(2);
}

} // namespace

TEST_CASE("the cloner isometry has orthonormal columns") {
    const BhIsometry v = bh_isometry();
    for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2) {
            cdouble s = 0.0;
            for (int r = 0; r < 8; ++r) s += std::conj(v.v[r][c1]) * v.v[r][c2];
            const double want = (c1 == c2) ? 1.0 : 0.0;
            CHECK(std::abs(s - want) <= 1e-12);
        }
}

TEST_CASE("both clones carry the shrunk input state") {
    GaussianSampler rng(31415);
    for (int t = 0; t < 50; ++t) {
        const auto [alpha, beta] = random_qubit(rng);
        const TwoQubitState out = bh_output(alpha, beta);
        const ComplexMatrix ca = partial_trace(out, Keep::A);
        const ComplexMatrix cb = partial_trace(out, Keep::B);
        CHECK(max_abs(ca - cb) <= 1e-12);
        const ComplexMatrix want = closed_form_clone(alpha, beta);
        CHECK(max_abs(ca - want) <= 1e-10);
        const auto [ra, rb] = reduced_outputs(d_opt(), alpha, beta);
        CHECK(max_abs(ca - ra) <= 1e-10);
        CHECK(max_abs(cb - rb) <= 1e-10);
    }
}

TEST_CASE("every input is cloned with fidelity 5/6") {
    GaussianSampler rng(2718);
    for (int t = 0; t < 100; ++t) {
        const auto [alpha, beta] = random_qubit(rng);
        const ComplexMatrix clone = partial_trace(bh_output(alpha, beta), Keep::A);
        cdouble f = std::conj(alpha) * (clone(0, 0) * alpha + clone(0, 1) * beta) +
                    std::conj(beta) * (clone(1, 0) * alpha + clone(1, 1) * beta);
        CHECK(std::abs(f.real() - 5.0 / 6.0) <= 1e-10);
        CHECK(std::abs(f.imag()) <= 1e-12);
    }
}

TEST_CASE("basis and equator inputs give the known joint outputs") {
    const TwoQubitState zero = bh_output(1.0, 0.0);
    ComplexMatrix want(4);
    want(0, 0) = 2.0 / 3.0;
    want(1, 1) = want(2, 2) = want(1, 2) = want(2, 1) = 1.0 / 6.0;
    CHECK(max_abs(zero.rho - want) <= 1e-14);

    const double r = 1.0 / std::sqrt(2.0);
    const TwoQubitState plus = bh_output(r, r);
    const ComplexMatrix ca = partial_trace(plus, Keep::A);
    const ComplexMatrix cb = partial_trace(plus, Keep::B);
    CHECK(std::abs(ca(0, 1) - cdouble(1.0 / 3.0, 0.0)) <= 1e-12);
    CHECK(std::abs(cb(0, 1) - cdouble(1.0 / 3.0, 0.0)) <= 1e-12);
}

TEST_CASE("the unitary extension restricts back to the cloner") {
    const BhExtendedChannel ext = bh_extended_channel();
    CHECK(validate(ext.d).is_valid_channel);

    GaussianSampler rng(161803);
    for (int t = 0; t < 20; ++t) {
        const auto [alpha, beta] = random_qubit(rng);
        TwoQubitState in;
        in.rho = ComplexMatrix(4);
        in.rho(0, 0) = std::norm(alpha);
        in.rho(0, 2) = alpha * std::conj(beta);
        in.rho(2, 0) = beta * std::conj(alpha);
        in.rho(2, 2) = std::norm(beta);
        const TwoQubitState out = apply(ext.d, in);
        CHECK(max_abs(out.rho - bh_output(alpha, beta).rho) <= 1e-12);
    }

    const auto [fa, fb] = average_fidelities(ext.d);
    CHECK(std::abs(fa - 5.0 / 6.0) <= 1e-10);
    CHECK(std::abs(fb - 5.0 / 6.0) <= 1e-10);
    CHECK(ext.interference == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("non-normalized inputs are rejected") {
    CHECK_THROWS_AS(bh_output(1.0, 0.5), NotNormalized);
    CHECK_THROWS_AS(bh_output(0.0, 0.0), NotNormalized);
}
