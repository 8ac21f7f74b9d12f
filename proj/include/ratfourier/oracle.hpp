#pragma once

// Brute-force validators. Nothing here calls into coefficients.hpp or
// rational_eval.hpp: the mode frequencies and mode sums are rebuilt from the
// raw samples so that agreement with the rational approximant is evidence.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "ratfourier/errors.hpp"
#include "ratfourier/quadrature.hpp"
#include "ratfourier/targets.hpp"

namespace ratfourier {

inline constexpr double kOracleMaxFrequency = 100.0;

namespace detail {

template <typename Scalar>
void check_oracle_frequency(Scalar nu)
{
    if (!(std::abs(nu) <= Scalar(kOracleMaxFrequency))) {
        throw RangeError("oracle refuses |nu| > 100");
    }
}

template <typename Scalar>
Scalar oscillation_width(Scalar nu)
{
    return nu == 0 ? std::numeric_limits<Scalar>::infinity() : 1 / (8 * std::abs(nu));
}

// Mode sums of the damped cosine expansion
//   E(t) = e^{-sigma t} 2^{1-M} sum_m sum_n v_n cos(w_m (t - n h))
//        = e^{-sigma t} 2^{1-M} sum_m [C_m cos(w_m t) + S_m sin(w_m t)].
template <typename Scalar>
struct DampedExpansion {
    Scalar sigma;
    Scalar scale;
    std::vector<Scalar> omega;
    std::vector<std::complex<Scalar>> cos_sums;
    std::vector<std::complex<Scalar>> sin_sums;
    Scalar envelope;  // sum_n |v_n|, bounds |E(t)| e^{sigma t}

    explicit DampedExpansion(const SampleSet<Scalar>& samples)
    {
        const auto& p = samples.params();
        const auto& v = samples.values();
        const std::size_t modes = p.term_count();
        sigma = p.sigma;
        scale = Scalar{1} / static_cast<Scalar>(modes);
        envelope = 0;
        for (Eigen::Index n = 0; n < v.size(); ++n) envelope += std::abs(v[n]);
        const Scalar base_period = static_cast<Scalar>(std::size_t{1} << p.M) * p.h;
        for (std::size_t m = 1; m <= modes; ++m) {
            const Scalar w = std::numbers::pi_v<Scalar> * static_cast<Scalar>(2 * m - 1) /
                             base_period;
            std::complex<Scalar> c{0};
            std::complex<Scalar> s{0};
            for (Eigen::Index n = 0; n < v.size(); ++n) {
                const Scalar tn = p.h * static_cast<Scalar>(n);
                c += v[n] * std::cos(w * tn);
                s += v[n] * std::sin(w * tn);
            }
            omega.push_back(w);
            cos_sums.push_back(c);
            sin_sums.push_back(s);
        }
    }

    std::complex<Scalar> operator()(Scalar t) const
    {
        std::complex<Scalar> sum{0};
        for (std::size_t m = 0; m < omega.size(); ++m) {
            sum += cos_sums[m] * std::cos(omega[m] * t) + sin_sums[m] * std::sin(omega[m] * t);
        }
        return std::exp(-sigma * t) * scale * sum;
    }
};

}  // namespace detail

/// Quadrature of f(t - shift) e^{-2 pi i nu t} over [spec.lo, spec.hi].
template <typename Scalar>
std::complex<Scalar> fourier_forward_quadrature(const TargetFunction<Scalar>& target, Scalar shift,
                                                Scalar nu, const QuadratureSpec<Scalar>& spec)
{
    detail::check_oracle_frequency(nu);
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    auto integrand = [&](Scalar t) {
        return target(t - shift) * std::polar(Scalar{1}, -two_pi * nu * t);
    };
    const Scalar breaks[] = {shift};
    return integrate_adaptive<std::complex<Scalar>>(integrand, spec, std::span<const Scalar>(breaks),
                                                    detail::oscillation_width(nu))
        .value;
}

/// Quadrature of the damped cosine expansion times e^{-2 pi i nu t} over
/// [0, upper]. `upper` may be +infinity, in which case the range is cut
/// where the expansion's envelope e^{-sigma t} sum_n |v_n| falls below 1e-18.
/// The result is the unshifted transform of f(t - a).
template <typename Scalar>
std::complex<Scalar> damped_expansion_quadrature(const SampleSet<Scalar>& samples, Scalar nu,
                                                 Scalar upper, Scalar tol,
                                                 long max_panels = 1000000)
{
    detail::check_oracle_frequency(nu);
    const detail::DampedExpansion<Scalar> expansion(samples);
    if (std::isinf(upper)) {
        if (!(expansion.sigma > 0)) {
            throw DampingError("infinite upper limit requires sigma > 0");
        }
        const Scalar cutoff = Scalar{1e-18};
        upper = std::log(std::max(expansion.envelope, cutoff) / cutoff) / expansion.sigma;
        upper = std::max(upper, samples.params().h * static_cast<Scalar>(samples.params().N));
    }
    if (!(upper > 0)) {
        return {0, 0};
    }
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    auto integrand = [&](Scalar t) {
        return expansion(t) * std::polar(Scalar{1}, -two_pi * nu * t);
    };
    // The highest mode sets the finest oscillation.
    const Scalar mode_width =
        expansion.omega.empty() ? std::numeric_limits<Scalar>::infinity()
                                : std::numbers::pi_v<Scalar> / (2 * expansion.omega.back());
    const QuadratureSpec<Scalar> spec{Scalar{0}, upper, tol, max_panels};
    return integrate_adaptive<std::complex<Scalar>>(
               integrand, spec, {}, std::min(mode_width, detail::oscillation_width(nu)))
        .value;
}

/// Term-by-term closed form of the same [0, inf) integral, one complex
/// exponential pair per (m, n):
///   int_0^inf e^{-s t} cos(w (t - t_n)) dt
///     = (e^{-i w t_n} / (s - i w) + e^{i w t_n} / (s + i w)) / 2,
/// with s = sigma + 2 pi i nu.
template <typename Scalar>
std::complex<Scalar> damped_expansion_closed_form(const SampleSet<Scalar>& samples, Scalar nu)
{
    const auto& p = samples.params();
    if (!(p.sigma > 0)) throw DampingError("closed form over [0, inf) requires sigma > 0");
    const auto& v = samples.values();
    const std::size_t modes = p.term_count();
    const Scalar base_period = static_cast<Scalar>(std::size_t{1} << p.M) * p.h;
    const std::complex<Scalar> s(p.sigma, 2 * std::numbers::pi_v<Scalar> * nu);
    const std::complex<Scalar> i(0, 1);
    std::complex<Scalar> total{0};
    for (std::size_t m = 1; m <= modes; ++m) {
        const Scalar w = std::numbers::pi_v<Scalar> * static_cast<Scalar>(2 * m - 1) / base_period;
        const std::complex<Scalar> lower = Scalar{1} / (s - i * w);
        const std::complex<Scalar> upper = Scalar{1} / (s + i * w);
        for (Eigen::Index n = 0; n < v.size(); ++n) {
            const Scalar phase = w * p.h * static_cast<Scalar>(n);
            total += v[n] * (std::polar(Scalar{1}, -phase) * lower +
                             std::polar(Scalar{1}, phase) * upper);
        }
    }
    return total / (Scalar{2} * static_cast<Scalar>(modes));
}

}  // namespace ratfourier
