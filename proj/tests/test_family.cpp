#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "doctest.h"
#include "qclone/channel.hpp"
#include "qclone/errors.hpp"
#include "qclone/family.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/interference.hpp"
#include "qclone/numkernel.hpp"
#include "qclone/random.hpp"
#include "test_support.hpp"

using namespace qclone;

namespace {

cdouble frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        s += std::conj(a.entries[i]) * b.entries[i];
    return s;
}

} // namespace

TEST_CASE("perturbation basis is Frobenius-orthonormal and admissible") {
    const PerturbationBasis& pb = admissible_perturbation_basis();
    CHECK(pb.dimension == 62);
    CHECK(pb.claimed_dimension == 64);
    CHECK(static_cast<int>(pb.basis.size()) == pb.dimension);

    for (std::size_t i = 0; i < pb.basis.size(); ++i)
        for (std::size_t j = i; j < pb.basis.size(); ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            CHECK(std::abs(frobenius_inner(pb.basis[i], pb.basis[j]) - want) <= 1e-12);
        }

    const auto [fa, fb] = fidelity_functionals();
    for (const ComplexMatrix& w : pb.basis) {
        CHECK(hermiticity_residual(w) <= 1e-12);
        CHECK(std::abs(fa.value(w)) <= 1e-10);
        CHECK(std::abs(fb.value(w)) <= 1e-10);
        for (int j = 0; j < 4; ++j) {
            cdouble col = 0.0;
            for (int i = 0; i < 4; ++i) col += w(4 * i + j, 4 * i + j);
            CHECK(std::abs(col) <= 1e-10);
        }
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                for (int m = k + 1; m < 4; ++m)
                    CHECK(std::abs(w(4 * i + k, 4 * i + m)) <= 1e-10);
    }
}

TEST_CASE("perturbations annihilate the kernel of the optimum") {
    const PerturbationBasis& pb = admissible_perturbation_basis();
    const EigenDecomposition eig = eigh(d_opt().d);
    for (const ComplexMatrix& w : pb.basis)
        for (int c = 0; c < 16; ++c) {
            if (eig.values[c] > 1e-8) continue;
            double norm2 = 0.0;
            for (int r = 0; r < 16; ++r) {
                cdouble acc = 0.0;
                for (int k = 0; k < 16; ++k) acc += w(r, k) * eig.vectors(k, c);
                norm2 += std::norm(acc);
            }
            CHECK(std::sqrt(norm2) <= 1e-10);
        }
}

TEST_CASE("sampled members stay optimal cloners") {
    const DynamicalMatrix base = sample_member(12345, 0.0);
    for (std::size_t i = 0; i < base.d.entries.size(); ++i)
        CHECK(base.d.entries[i] == d_opt().d.entries[i]);

    const DynamicalMatrix m = sample_member(1, 0.1);
    const auto [fa, fb] = average_fidelities(m);
    CHECK(std::abs(fa - 5.0 / 6.0) <= 1e-9);
    CHECK(std::abs(fb - 5.0 / 6.0) <= 1e-9);
    CHECK(interference_of_dynamical(m).value <= 1e-9);
    const auto [sa, sb] = universality_spread(m, 20);
    CHECK(sa <= 1e-8);
    CHECK(sb <= 1e-8);
    CHECK(frobenius_norm(m.d - d_opt().d) > 1e-3);
}

TEST_CASE("member verification separates family members from outsiders") {
    const MemberReport at_base = verify_member(d_opt());
    CHECK(at_base.all_pass);
    CHECK(at_base.membership_residual <= 1e-12);

    const MemberReport sampled = verify_member(sample_member(7, 0.15));
    CHECK(sampled.all_pass);
    CHECK(sampled.valid_channel);
    CHECK(sampled.min_eigenvalue >= -1e-9);

    DynamicalMatrix broken = d_opt();
    broken.d(1, 2) += 0.05;
    broken.d(2, 1) += 0.05;
    const MemberReport bad = verify_member(broken);
    CHECK_FALSE(bad.all_pass);
    CHECK(bad.interference > 1e-9);
}

TEST_CASE("the family is affine: midpoints of members are members") {
    const DynamicalMatrix a = sample_member(3, 0.2);
    const DynamicalMatrix b = sample_member(4, 0.2);
    DynamicalMatrix mid;
    mid.d = 0.5 * (a.d + b.d);
    CHECK(verify_member(mid).all_pass);
}

TEST_CASE("perturbations vanish on the doubly-occupied eigenspace") {
    const EigenDecomposition eig = eigh(d_opt().d);
    const ComplexMatrix w = sample_member(11, 0.2).d - d_opt().d;
    for (int a = 0; a < 16; ++a) {
        if (eig.values[a] <= 0.9) continue;
        for (int b = 0; b < 16; ++b) {
            if (eig.values[b] <= 0.9) continue;
            cdouble elem = 0.0;
            for (int r = 0; r < 16; ++r)
                for (int c = 0; c < 16; ++c)
                    elem += std::conj(eig.vectors(r, a)) * w(r, c) * eig.vectors(c, b);
            CHECK(std::abs(elem) <= 1e-9);
        }
    }
}

TEST_CASE("max_epsilon finds the positivity boundary") {
    CHECK(std::isinf(max_epsilon(ComplexMatrix(16))));

    const ComplexMatrix dir = 10.0 * (sample_member(9, 0.1).d - d_opt().d);
    const double t = max_epsilon(dir);
    CHECK(t >= 0.25 - 1e-6);
    EigenDecomposition at_t = eigh(d_opt().d + t * dir);
    CHECK(at_t.values.front() >= -1e-6);

    GaussianSampler rng(99);
    CHECK_THROWS_AS(max_epsilon(random_hermitian(rng, 16)), NotAdmissible);

    ComplexMatrix non_herm(16);
    non_herm(0, 1) = cdouble(0.3, 0.1);
    CHECK_THROWS_AS(max_epsilon(non_herm), NotAdmissible);
}
