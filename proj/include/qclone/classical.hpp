#pragma once

#include <array>
#include <utility>

#include "qclone/channel.hpp"

namespace qclone {

// Column-stochastic transition matrix: t[i][j] = probability of output
// basis state i given input basis state j.
struct StochasticMap {
    std::array<std::array<double, 4>, 4> t{};
};

// Deterministic map sending input basis state j to output r[j].
StochasticMap deterministic_map(const std::array<int, 4>& outputs);

// Diagonal dynamical matrix D[4i+j][4i+j] = t[i][j]. Throws
// InvalidStochastic for negative entries or column sums off 1 by more
// than 1e-12.
DynamicalMatrix to_dynamical(const StochasticMap& map);

// Closed forms of the Bloch-average clone fidelities of a diagonal
// (classical) channel:
//   F̄_A = (3 + t00 + t10 − t02 − t12)/6
//   F̄_B = (3 + t00 + t20 − t02 − t22)/6
std::pair<double, double> classical_average_fidelities(const StochasticMap& map);

struct ClassicalExtrema {
    double max_fa = 0.0;
    double min_fa = 0.0;
    double max_fb = 0.0;
    double min_fb = 0.0;
    // Largest value of min(F̄_A, F̄_B) over all maps.
    double max_symmetric = 0.0;
    // Canonical achievers (columns 1 and 3 fixed to the identity; those
    // columns never influence the fidelities).
    StochasticMap witness_max; // attains fa = fb = max simultaneously
    StochasticMap witness_min; // attains fa = fb = min simultaneously
};

// Exhaustive scan of all 4^4 deterministic column maps. The fidelities
// are linear in the map, so the polytope extrema are attained at these
// vertices.
ClassicalExtrema enumerate_deterministic_extrema();

} // namespace qclone
