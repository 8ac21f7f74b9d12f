#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ratfourier/errors.hpp"

namespace ratfourier {

inline constexpr int kMaxOrder = 24;
inline constexpr int kMaxSampleBound = 10000;

/// Tunable tuple for one approximation run.
///
/// `a` shifts the target into the first quadrant, `M` sets the number of
/// rational terms (2^{M-1}), samples are taken at t = n*h for n = 0..N, and
/// `sigma` is the damping constant. `k` is the half-exponent of the
/// rectangular surrogate and `delta` the margin such that a = 1/2 + delta for
/// that surrogate; neither is read by the Gaussian targets.
template <typename Scalar = double>
struct ApproxParams {
    Scalar a{0};
    int M{1};
    int N{0};
    Scalar h{1};
    Scalar sigma{0};
    int k{35};
    Scalar delta{0.1};

    /// Period T = 2^{M+1} h of the truncated cosine expansion.
    Scalar period() const { return std::ldexp(h, M + 1); }

    std::size_t term_count() const { return std::size_t{1} << (M - 1); }

    void validate() const
    {
        if (M < 1) throw ValidationError("M >= 1 violated (M = " + std::to_string(M) + ")");
        if (M > kMaxOrder)
            throw ValidationError("M <= " + std::to_string(kMaxOrder) + " violated (M = " +
                                  std::to_string(M) + ")");
        if (N < 0) throw ValidationError("N >= 0 violated");
        if (N > kMaxSampleBound)
            throw ValidationError("N <= " + std::to_string(kMaxSampleBound) + " violated");
        if (!std::isfinite(h) || !(h > 0)) throw ValidationError("h > 0 violated");
        if (!std::isfinite(sigma) || sigma < 0) throw ValidationError("sigma >= 0 violated");
        if (k < 1) throw ValidationError("k >= 1 violated");
        if (!std::isfinite(delta) || !(delta > 0)) throw ValidationError("delta > 0 violated");
        if (!std::isfinite(a)) throw ValidationError("a must be finite");
        if (!std::isfinite(period())) throw ValidationError("T = 2^(M+1) h must be finite");
    }

    /// Soft conditions; an empty result means none apply.
    std::vector<std::string> warnings() const
    {
        std::vector<std::string> out;
        if (static_cast<Scalar>(N) * h < 2 * a) {
            out.push_back("N*h < 2a: the sample grid does not span the support [0, 2a]");
        }
        return out;
    }
};

}  // namespace ratfourier
