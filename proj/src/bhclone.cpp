#include "qclone/bhclone.hpp"

#include <cmath>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/interference.hpp"

namespace qclone {

BhIsometry bh_isometry() {
    const double w2 = std::sqrt(2.0 / 3.0);
    const double w1 = std::sqrt(1.0 / 6.0);
    BhIsometry iso;
    iso.v[0][0] = w2; // |000⟩
    iso.v[3][0] = w1; // |011⟩
    iso.v[5][0] = w1; // |101⟩
    iso.v[7][1] = w2; // |111⟩
    iso.v[2][1] = w1; // |010⟩
    iso.v[4][1] = w1; // |100⟩
    return iso;
}

TwoQubitState bh_output(cdouble alpha, cdouble beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
        throw NotNormalized("bh_output: input amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    const BhIsometry iso = bh_isometry();
    std::array<cdouble, 8> psi{};
    for (int r = 0; r < 8; ++r) psi[r] = iso.v[r][0] * alpha + iso.v[r][1] * beta;

    TwoQubitState out{ComplexMatrix(4)};
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            out.rho(m, n) =
                psi[2 * m] * std::conj(psi[2 * n]) + psi[2 * m + 1] * std::conj(psi[2 * n + 1]);
    return out;
}

BhExtendedChannel bh_extended_channel() {
    const double w2 = std::sqrt(2.0 / 3.0);
    const double w1 = std::sqrt(1.0 / 6.0);
    const double s = 1.0 / std::sqrt(6.0);

    // 8×4 unitary completion W: rows pack |a b x⟩ as 4a+2b+x, columns the
    // input |original, blank⟩ as 2a+b. Blank-|0⟩ columns carry the
    // isometry; blank-|1⟩ columns its image under X⊗X⊗X, completed to
    // mutually orthonormal columns.
    double wm[8][4] = {};
    wm[0][0] = w2;
    wm[3][0] = w1;
    wm[5][0] = w1;
    wm[7][2] = w2;
    wm[2][2] = w1;
    wm[4][2] = w1;
    wm[0][1] = s;
    wm[6][1] = s;
    wm[3][1] = -2.0 * s;
    wm[1][3] = s;
    wm[7][3] = s;
    wm[4][3] = -2.0 * s;

    std::vector<ComplexMatrix> kraus(2, ComplexMatrix(4));
    for (int x = 0; x < 2; ++x)
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) kraus[x](i, k) = wm[2 * i + x][k];

    BhExtendedChannel out{channel_from_kraus(kraus), 0.0};
    out.interference = interference_of_dynamical(out.d).value;
    return out;
}

} // namespace qclone
