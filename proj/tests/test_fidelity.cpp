#include <cmath>

#include "doctest.h"
#include "qclone/channel.hpp"
#include "qclone/errors.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/random.hpp"
#include "test_support.hpp"

using namespace qclone;
using qclone::testing::random_channel;

namespace {

int nonzero_count(const ComplexMatrix& m) {
    int n = 0;
    for (const cdouble& v : m.entries)
        if (v != cdouble(0.0)) ++n;
    return n;
}

} // namespace

TEST_CASE("functional coefficient tables have the expected support") {
    const auto [a, b] = fidelity_functionals();
    CHECK(nonzero_count(a.coeffs) == 12);
    CHECK(nonzero_count(b.coeffs) == 12);
    CHECK(a.coeffs(0, 0).real() == doctest::Approx(1.0 / 3.0));
    CHECK(a.coeffs(0, 10).real() == doctest::Approx(1.0 / 6.0));
    CHECK(b.coeffs(0, 6).real() == doctest::Approx(1.0 / 6.0));
    CHECK(hermiticity_residual(a.coeffs) <= 1e-15);
    CHECK(hermiticity_residual(b.coeffs) <= 1e-15);
}

TEST_CASE("known machines hit their closed-form averages") {
    const auto [ia, ib] = average_fidelities(identity_channel());
    CHECK(ia == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ib == doctest::Approx(0.5).epsilon(1e-14));

    const auto [sa, sb] = average_fidelities(trivial_swap_channel());
    CHECK(sa == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(sb == doctest::Approx(0.75).epsilon(1e-13));

    const auto [oa, ob] = average_fidelities(d_opt());
    CHECK(oa == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(ob == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("quadrature average equals the functional values") {
    GaussianSampler rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const DynamicalMatrix d = random_channel(rng);
        const auto [fa, fb] = average_fidelities(d);
        const auto [qa, qb] = average_by_quadrature(d);
        CHECK(std::abs(fa - qa) <= 1e-10);
        CHECK(std::abs(fb - qb) <= 1e-10);
    }
}

TEST_CASE("re-derived functionals match the hard-coded tables") {
    const auto [a, b] = fidelity_functionals();
    const auto [da, db] = derive_fidelity_functionals();
    CHECK(max_abs(da.coeffs - a.coeffs) <= 1e-10);
    CHECK(max_abs(db.coeffs - b.coeffs) <= 1e-10);
}

TEST_CASE("point fidelities of the identity channel") {
    const DynamicalMatrix id = identity_channel();
    const double theta = 1.0471975511965976; // pi/3
    const auto [fa, fb] = point_fidelity(id, {theta, 0.7});
    CHECK(fa == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(fb == doctest::Approx(std::cos(theta / 2) * std::cos(theta / 2)).epsilon(1e-13));
}

TEST_CASE("universality spread separates universal from biased machines") {
    const auto [oa, ob] = universality_spread(d_opt(), 20);
    CHECK(oa <= 1e-10);
    CHECK(ob <= 1e-10);

    const auto [ia, ib] = universality_spread(identity_channel(), 20);
    CHECK(ia <= 1e-12);
    CHECK(ib == doctest::Approx(0.95).epsilon(1e-12)); // cos²(θ/2) over the grid midpoints

    CHECK_THROWS_AS(universality_spread(d_opt(), 7), DimensionMismatch);
}

TEST_CASE("reduced outputs of the optimal cloner") {
    const auto [ra, rb] = reduced_outputs(d_opt(), 1.0, 0.0);
    for (const ComplexMatrix* r : {&ra, &rb}) {
        CHECK((*r)(0, 0).real() == doctest::Approx(5.0 / 6.0).epsilon(1e-13));
        CHECK((*r)(1, 1).real() == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
        CHECK(std::abs((*r)(0, 1)) <= 1e-14);
    }

    const double s = 1.0 / std::sqrt(2.0);
    const auto [pa, pb] = reduced_outputs(d_opt(), s, s);
    CHECK(pa(0, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(pb(0, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    CHECK_THROWS_AS(reduced_outputs(d_opt(), 1.0, 1.0), NotNormalized);
}

TEST_CASE("functional value requires matching dimensions") {
    const auto [a, b] = fidelity_functionals();
    CHECK_THROWS_AS(a.value(ComplexMatrix(4)), DimensionMismatch);
    CHECK(b.value(ComplexMatrix(16)) == 0.0);
}
