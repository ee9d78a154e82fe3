#pragma once

#include <cstdint>
#include <random>

#include "qclone/matrix.hpp"

namespace qclone {

// Seeded Gaussian source. Uses mt19937_64 plus an explicit Box-Muller
// transform so the stream is identical across standard-library
// implementations (std::normal_distribution is not portable bit-for-bit).
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}

    // Uniform in (0, 1].
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cdouble complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

ComplexMatrix random_complex(GaussianSampler& rng, int dim);
ComplexMatrix random_hermitian(GaussianSampler& rng, int dim);

} // namespace qclone
