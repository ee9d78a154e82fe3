#pragma once

#include <array>

#include "qclone/channel.hpp"
#include "qclone/matrix.hpp"

namespace qclone {

// 8×2 isometry of the symmetric universal cloner: one qubit in, two
// clones plus a two-dimensional ancilla out. Row r packs |a b x⟩ as
// 4a + 2b + x (a, b clones, x ancilla).
struct BhIsometry {
    std::array<std::array<cdouble, 2>, 8> v{};
};

struct BhExtendedChannel {
    DynamicalMatrix d;
    double interference = 0.0; // measured on this completion, reported as-is
};

// V|0⟩ = √(2/3)|00⟩|0⟩ₓ + √(1/6)(|01⟩+|10⟩)|1⟩ₓ and the bit-flipped
// image for V|1⟩; columns are orthonormal.
BhIsometry bh_isometry();

// Tr_ancilla[V|ψ⟩⟨ψ|V†] for |ψ⟩ = α|0⟩ + β|1⟩. Throws NotNormalized
// unless |α|² + |β|² = 1 within 1e-10.
TwoQubitState bh_output(cdouble alpha, cdouble beta);

// Extends the cloner to a full two-qubit channel: blank input |1⟩ goes
// to the bit-flip image of the |0⟩ branch, with the leftover freedom
// fixed by unitarity. The returned interference is a property of this
// completion choice, not of the cloner restricted to blank |0⟩.
BhExtendedChannel bh_extended_channel();

} // namespace qclone
