#include "qclone/classical.hpp"

#include <algorithm>
#include <cmath>

#include "qclone/errors.hpp"

namespace qclone {

StochasticMap deterministic_map(const std::array<int, 4>& outputs) {
    StochasticMap m;
    for (int j = 0; j < 4; ++j) {
        if (outputs[j] < 0 || outputs[j] > 3)
            throw InvalidStochastic("deterministic_map: output index out of range");
        m.t[outputs[j]][j] = 1.0;
    }
    return m;
}

static void check_stochastic(const StochasticMap& map) {
    for (int j = 0; j < 4; ++j) {
        double col = 0.0;
        for (int i = 0; i < 4; ++i) {
            if (map.t[i][j] < 0.0) throw InvalidStochastic("stochastic map: negative entry");
            col += map.t[i][j];
        }
        if (std::abs(col - 1.0) > 1e-12)
            throw InvalidStochastic("stochastic map: column does not sum to 1");
    }
}

DynamicalMatrix to_dynamical(const StochasticMap& map) {
    check_stochastic(map);
    DynamicalMatrix d{ComplexMatrix(16)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d.d(4 * i + j, 4 * i + j) = map.t[i][j];
    return d;
}

std::pair<double, double> classical_average_fidelities(const StochasticMap& map) {
    check_stochastic(map);
    const auto& t = map.t;
    const double fa = (3.0 + t[0][0] + t[1][0] - t[0][2] - t[1][2]) / 6.0;
    const double fb = (3.0 + t[0][0] + t[2][0] - t[0][2] - t[2][2]) / 6.0;
    return {fa, fb};
}

ClassicalExtrema enumerate_deterministic_extrema() {
    ClassicalExtrema e;
    e.max_fa = e.max_fb = e.max_symmetric = -1.0;
    e.min_fa = e.min_fb = 2.0;
    for (int r0 = 0; r0 < 4; ++r0)
        for (int r1 = 0; r1 < 4; ++r1)
            for (int r2 = 0; r2 < 4; ++r2)
                for (int r3 = 0; r3 < 4; ++r3) {
                    const StochasticMap m = deterministic_map({r0, r1, r2, r3});
                    const auto [fa, fb] = classical_average_fidelities(m);
                    e.max_fa = std::max(e.max_fa, fa);
                    e.min_fa = std::min(e.min_fa, fa);
                    e.max_fb = std::max(e.max_fb, fb);
                    e.min_fb = std::min(e.min_fb, fb);
                    e.max_symmetric = std::max(e.max_symmetric, std::min(fa, fb));
                }
    // Copy both basis states onto the output pair: 0 ↦ 0 ("00"), 2 ↦ 3
    // ("11"); attains the simultaneous maximum.
    e.witness_max = deterministic_map({0, 1, 3, 3});
    // Flipped copy: 0 ↦ 3, 2 ↦ 0; attains the simultaneous minimum.
    e.witness_min = deterministic_map({3, 1, 0, 3});
    return e;
}

} // namespace qclone
