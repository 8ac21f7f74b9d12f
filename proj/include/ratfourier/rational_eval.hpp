#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include <Eigen/Core>

#include "ratfourier/coefficients.hpp"
#include "ratfourier/errors.hpp"
#include "ratfourier/targets.hpp"

namespace ratfourier {

namespace detail {

template <typename Scalar>
inline constexpr Scalar kPoleGuard = Scalar{1e-300};

// sum_m (alpha_m s + beta_m) / (gamma_m^2 + s^2)
template <typename Scalar>
std::complex<Scalar> partial_fraction_sum(const CoefficientSet<Scalar>& coeffs,
                                          std::complex<Scalar> s)
{
    const auto& alpha = coeffs.alpha();
    const auto& beta = coeffs.beta();
    const auto& gamma = coeffs.gamma();
    const std::complex<Scalar> s2 = s * s;
    std::complex<Scalar> sum{0};
    for (Eigen::Index m = 0; m < gamma.size(); ++m) {
        const std::complex<Scalar> den = gamma[m] * gamma[m] + s2;
        if (std::abs(den) < kPoleGuard<Scalar>) {
            throw PoleError("gamma_m^2 + s^2 vanishes at m = " + std::to_string(m + 1));
        }
        sum += (alpha[m] * s + beta[m]) / den;
    }
    return sum;
}

}  // namespace detail

/// e^{2 pi i nu a} sum_m (alpha_m s + beta_m) / (gamma_m^2 + s^2), s = sigma + 2 pi i nu.
template <typename Scalar>
std::complex<Scalar> eval_forward(const CoefficientSet<Scalar>& coeffs, Scalar nu)
{
    if (coeffs.direction() != Direction::Forward) {
        throw DirectionError("eval_forward requires a forward coefficient set");
    }
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    const auto& p = coeffs.params();
    const std::complex<Scalar> s(p.sigma, two_pi * nu);
    return std::polar(Scalar{1}, two_pi * nu * p.a) * detail::partial_fraction_sum(coeffs, s);
}

/// e^{-2 pi i t a} sum_m (alpha*_m s + beta*_m) / (gamma_m^2 + s^2), s = sigma - 2 pi i t.
template <typename Scalar>
std::complex<Scalar> eval_inverse(const CoefficientSet<Scalar>& coeffs, Scalar t)
{
    if (coeffs.direction() != Direction::Inverse) {
        throw DirectionError("eval_inverse requires an inverse coefficient set");
    }
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    const auto& p = coeffs.params();
    const std::complex<Scalar> s(p.sigma, -two_pi * t);
    return std::polar(Scalar{1}, -two_pi * t * p.a) * detail::partial_fraction_sum(coeffs, s);
}

/// Dispatches on the direction tag.
template <typename Scalar>
std::complex<Scalar> evaluate(const CoefficientSet<Scalar>& coeffs, Scalar x)
{
    return coeffs.direction() == Direction::Forward ? eval_forward(coeffs, x)
                                                    : eval_inverse(coeffs, x);
}

/// Approximant against a reference on a grid. abs_diff compares the
/// reference with the real part of the approximant.
template <typename Scalar = double>
struct EvaluationCurve {
    RealVector<Scalar> abscissae;
    ComplexVector<Scalar> approx;
    RealVector<Scalar> reference;
    RealVector<Scalar> abs_diff;

    Eigen::Index size() const { return abscissae.size(); }
    Scalar max_abs_diff() const { return abs_diff.size() == 0 ? Scalar{0} : abs_diff.maxCoeff(); }
};

/// Inclusive uniform grid, matching MATLAB linspace.
template <typename Scalar>
RealVector<Scalar> linspace(Scalar lo, Scalar hi, Eigen::Index count)
{
    RealVector<Scalar> x(count);
    if (count == 1) {
        x[0] = lo;
        return x;
    }
    const Scalar step = (hi - lo) / static_cast<Scalar>(count - 1);
    for (Eigen::Index i = 0; i < count; ++i) x[i] = lo + static_cast<Scalar>(i) * step;
    x[count - 1] = hi;
    return x;
}

template <typename Scalar>
EvaluationCurve<Scalar> error_scan(const CoefficientSet<Scalar>& coeffs, ReferenceKind reference,
                                   Scalar lo, Scalar hi, Eigen::Index count)
{
    if (!(lo < hi)) throw ValidationError("scan range requires lo < hi");
    if (count < 2) throw ValidationError("scan requires count >= 2");

    EvaluationCurve<Scalar> curve;
    curve.abscissae = linspace(lo, hi, count);
    curve.approx.resize(count);
    curve.reference.resize(count);
    curve.abs_diff.resize(count);
    for (Eigen::Index i = 0; i < count; ++i) {
        const Scalar x = curve.abscissae[i];
        curve.approx[i] = evaluate(coeffs, x);
        curve.reference[i] = reference_value(reference, x);
        curve.abs_diff[i] = std::abs(curve.reference[i] - curve.approx[i].real());
    }
    return curve;
}

}  // namespace ratfourier
