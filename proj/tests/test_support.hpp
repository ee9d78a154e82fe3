#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qclone/channel.hpp"
#include "qclone/matrix.hpp"
#include "qclone/numkernel.hpp"
#include "qclone/random.hpp"

namespace qclone::testing {

// Channel with a random Kraus decomposition: the operators G_m·S^{-1/2}
// with S = Σ G_m†·G_m are trace preserving by construction.
inline DynamicalMatrix random_channel(GaussianSampler& rng, int kraus_count = 4) {
    std::vector<ComplexMatrix> g;
    g.reserve(kraus_count);
    for (int m = 0; m < kraus_count; ++m) g.push_back(random_complex(rng, 4));
    ComplexMatrix s(4);
    for (const ComplexMatrix& k : g) s = s + adjoint(k) * k;
    const EigenDecomposition eig = eigh(s);
    ComplexMatrix inv_root(4);
    for (int a = 0; a < 4; ++a) {
        const double w = 1.0 / std::sqrt(eig.values[a]);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                inv_root(r, c) += w * eig.vectors(r, a) * std::conj(eig.vectors(c, a));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(g.size());
    for (const ComplexMatrix& k : g) kraus.push_back(k * inv_root);
    return channel_from_kraus(kraus);
}

inline TwoQubitState random_state(GaussianSampler& rng) {
    const ComplexMatrix g = random_complex(rng, 4);
    ComplexMatrix rho = g * adjoint(g);
    rho = (1.0 / trace(rho).real()) * rho;
    return TwoQubitState{rho};
}

inline ComplexMatrix random_unitary(GaussianSampler& rng, int dim) {
    return eigh(random_hermitian(rng, dim)).vectors;
}

inline std::pair<cdouble, cdouble> random_qubit(GaussianSampler& rng) {
    const cdouble a = rng.complex_gaussian(), b = rng.complex_gaussian();
    const double inv = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
    return {a * inv, b * inv};
}

} // namespace qclone::testing
