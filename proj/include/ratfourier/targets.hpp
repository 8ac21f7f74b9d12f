#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "ratfourier/errors.hpp"
#include "ratfourier/params.hpp"

namespace ratfourier {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class TargetKind {
    RectSurrogate,             // 1 / ((2t)^{2k} + 1)
    RectSurrogateGaussianAlt,  // exp(-(2t)^{2k})
    GaussianDerivative,        // pi^{3/2} i t exp(-pi^2 t^2)
    Gaussian,                  // sqrt(pi) exp(-pi^2 t^2)
};

enum class ReferenceKind { Sinc, NuGauss, Gauss, Rect };

std::string_view to_string(TargetKind kind);
std::optional<TargetKind> parse_target_kind(std::string_view name);
std::string_view to_string(ReferenceKind kind);
std::optional<ReferenceKind> parse_reference_kind(std::string_view name);

/// 1 / ((2t)^{2k} + 1), total on the reals.
///
/// The log-domain exponent u = 2k log|2t| decides whether (2t)^{2k} is
/// representable; past that point the value is below the smallest subnormal
/// and 0 is returned instead of forming inf.
template <typename Scalar>
Scalar rect_surrogate(Scalar t, int k)
{
    const Scalar x = std::abs(2 * t);
    if (x > 1 && 2 * k * std::log(x) >= std::log(std::numeric_limits<Scalar>::max())) {
        return Scalar{0};
    }
    return 1 / (std::pow(x, 2 * k) + 1);
}

/// exp(-(2t)^{2k}); the alternative surrogate.
template <typename Scalar>
Scalar rect_surrogate_gaussian_alt(Scalar t, int k)
{
    const Scalar x = std::abs(2 * t);
    if (x > 1 && 2 * k * std::log(x) >= std::log(std::numeric_limits<Scalar>::max())) {
        return Scalar{0};
    }
    return std::exp(-std::pow(x, 2 * k));
}

/// One of the sampled functions f(t).
template <typename Scalar = double>
struct TargetFunction {
    TargetKind kind{TargetKind::RectSurrogate};
    int k{35};

    std::complex<Scalar> operator()(Scalar t) const
    {
        constexpr Scalar pi = std::numbers::pi_v<Scalar>;
        switch (kind) {
        case TargetKind::RectSurrogate:
            return {rect_surrogate(t, k), 0};
        case TargetKind::RectSurrogateGaussianAlt:
            return {rect_surrogate_gaussian_alt(t, k), 0};
        case TargetKind::GaussianDerivative:
            return {0, pi * std::sqrt(pi) * t * std::exp(-(pi * t) * (pi * t))};
        case TargetKind::Gaussian:
            return {std::sqrt(pi) * std::exp(-(pi * t) * (pi * t)), 0};
        }
        return {};
    }
};

/// Closed-form functions the approximants are compared against.
template <typename Scalar>
Scalar reference_value(ReferenceKind kind, Scalar x)
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    switch (kind) {
    case ReferenceKind::Sinc:
        if (x == 0) return Scalar{1};
        return std::sin(pi * x) / (pi * x);
    case ReferenceKind::NuGauss:
        return x * std::exp(-x * x);
    case ReferenceKind::Gauss:
        return std::exp(-x * x);
    case ReferenceKind::Rect: {
        const Scalar ax = std::abs(x);
        if (ax < Scalar{0.5}) return Scalar{1};
        if (ax == Scalar{0.5}) return Scalar{0.5};
        return Scalar{0};
    }
    }
    return Scalar{0};
}

/// Damped samples v_n = f(n h - a) e^{sigma n h}, n = 0..N.
template <typename Scalar = double>
class SampleSet {
public:
    SampleSet(ApproxParams<Scalar> params, TargetFunction<Scalar> target,
              ComplexVector<Scalar> values)
        : params_(std::move(params)), target_(target), values_(std::move(values))
    {
        params_.validate();
        if (values_.size() != params_.N + 1) {
            throw ValidationError("sample count must equal N + 1");
        }
        for (Eigen::Index n = 0; n < values_.size(); ++n) {
            if (!std::isfinite(values_[n].real()) || !std::isfinite(values_[n].imag())) {
                throw OverflowError("sample " + std::to_string(n) + " is not finite");
            }
        }
    }

    const ApproxParams<Scalar>& params() const { return params_; }
    const TargetFunction<Scalar>& target() const { return target_; }
    const ComplexVector<Scalar>& values() const { return values_; }
    Eigen::Index size() const { return values_.size(); }

private:
    ApproxParams<Scalar> params_;
    TargetFunction<Scalar> target_;
    ComplexVector<Scalar> values_;
};

template <typename Scalar>
SampleSet<Scalar> sample_grid(const TargetFunction<Scalar>& target,
                              const ApproxParams<Scalar>& params)
{
    params.validate();
    const Scalar max_exponent = params.sigma * static_cast<Scalar>(params.N) * params.h;
    if (max_exponent >= std::log(std::numeric_limits<Scalar>::max())) {
        throw OverflowError("exp(sigma*N*h) overflows: sigma*N*h = " +
                            std::to_string(static_cast<double>(max_exponent)));
    }
    ComplexVector<Scalar> values(params.N + 1);
    for (int n = 0; n <= params.N; ++n) {
        const Scalar t = static_cast<Scalar>(n) * params.h;
        values[n] = target(t - params.a) * std::exp(params.sigma * t);
    }
    return SampleSet<Scalar>(params, target, std::move(values));
}

}  // namespace ratfourier
