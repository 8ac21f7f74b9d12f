#pragma once

#include <optional>
#include <string_view>

#include "ratfourier/coefficients.hpp"
#include "ratfourier/params.hpp"
#include "ratfourier/targets.hpp"

namespace ratfourier {

/// A named parameter tuple reproducing one published experiment.
template <typename Scalar = double>
struct Preset {
    std::string_view name;
    ApproxParams<Scalar> params;
    TargetFunction<Scalar> target;
    ReferenceKind reference;
    Direction direction{Direction::Forward};
};

/// sinc(pi nu) from the rectangular surrogate.
template <typename Scalar = double>
Preset<Scalar> sinc_preset()
{
    ApproxParams<Scalar> p;
    p.a = static_cast<Scalar>(0.6L);
    p.k = 35;
    p.sigma = static_cast<Scalar>(2.7L);
    p.M = 6;
    p.h = static_cast<Scalar>(0.04L);
    p.N = 28;
    return {"sinc", p, {TargetKind::RectSurrogate, p.k}, ReferenceKind::Sinc};
}

/// nu e^{-nu^2} from pi^{3/2} i t e^{-pi^2 t^2}.
template <typename Scalar = double>
Preset<Scalar> gauss_derivative_preset()
{
    ApproxParams<Scalar> p;
    p.a = 2;
    p.sigma = 5;
    p.M = 6;
    p.h = static_cast<Scalar>(0.078L);
    p.N = 55;
    return {"gauss-derivative", p, {TargetKind::GaussianDerivative, p.k}, ReferenceKind::NuGauss};
}

/// e^{-nu^2} from sqrt(pi) e^{-pi^2 t^2}; feeds the Voigt residue sum.
/// Same (a, M, N, h, sigma) as the Gaussian-derivative preset.
template <typename Scalar = double>
Preset<Scalar> voigt_preset()
{
    auto preset = gauss_derivative_preset<Scalar>();
    preset.name = "voigt";
    preset.target.kind = TargetKind::Gaussian;
    preset.reference = ReferenceKind::Gauss;
    return preset;
}

/// Inverse-direction twin of the Voigt preset: samples of
/// F(nu) = sqrt(pi) e^{-pi^2 nu^2}, approximant of e^{-t^2}.
template <typename Scalar = double>
Preset<Scalar> gauss_inverse_preset()
{
    auto preset = voigt_preset<Scalar>();
    preset.name = "gauss-inverse";
    preset.direction = Direction::Inverse;
    return preset;
}

template <typename Scalar = double>
std::optional<Preset<Scalar>> find_preset(std::string_view name)
{
    if (name == "sinc") return sinc_preset<Scalar>();
    if (name == "gauss-derivative") return gauss_derivative_preset<Scalar>();
    if (name == "voigt") return voigt_preset<Scalar>();
    if (name == "gauss-inverse") return gauss_inverse_preset<Scalar>();
    return std::nullopt;
}

template <typename Scalar>
CoefficientSet<Scalar> build_coefficients(const Preset<Scalar>& preset)
{
    return compute_coefficients(sample_grid(preset.target, preset.params), preset.direction);
}

}  // namespace ratfourier
