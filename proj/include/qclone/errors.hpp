#pragma once

#include <stdexcept>

namespace qclone {

struct NotHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotTracePreserving : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUnitary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNormalized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidStochastic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidChannel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EpsilonTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qclone
