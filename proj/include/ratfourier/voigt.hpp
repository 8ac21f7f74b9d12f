#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "ratfourier/coefficients.hpp"
#include "ratfourier/errors.hpp"
#include "ratfourier/quadrature.hpp"
#include "ratfourier/rational_eval.hpp"

namespace ratfourier {

/// Detuning x and damping y > 0 of the Voigt function K(x, y).
template <typename Scalar = double>
struct VoigtPoint {
    Scalar x{0};
    Scalar y{1};

    void validate() const
    {
        if (!std::isfinite(x)) throw ValidationError("Voigt x must be finite");
        if (!std::isfinite(y) || !(y > 0)) throw ValidationError("Voigt y > 0 violated");
    }
};

/// Real part is K(x, y); `imag` is the leftover imaginary part of the complex
/// residue sum and should sit at rounding level.
template <typename Scalar = double>
struct VoigtValue {
    Scalar value{0};
    Scalar imag{0};
};

/// Residue sum over the poles of the forward rational approximant of
/// e^{-nu^2} (coefficients from sqrt(pi) e^{-pi^2 t^2} samples):
///
///   K ~ 2 pi i y sum_m [ e^{-a(i g + s)} (b - i a_m g) / (g D_-)
///                      - i e^{a(i g - s)} (a_m g - i b) / (g D_+)
///                      + i e^{2 i a pi z} (a_m (2 pi (y - i x) - s) - b)
///                          / (2 pi y (g^2 - (2 pi z - i s)^2)) ]
///
/// with z = x + i y, D_-/+ = 4 pi^2 |z|^2 +/- 4 pi x (g -/+ i s) + (g -/+ i s)^2.
template <typename Scalar>
VoigtValue<Scalar> voigt_residue(const CoefficientSet<Scalar>& coeffs, const VoigtPoint<Scalar>& p)
{
    p.validate();
    if (coeffs.direction() != Direction::Forward) {
        throw DirectionError("voigt_residue requires a forward coefficient set");
    }
    using C = std::complex<Scalar>;
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const C i(0, 1);
    const Scalar a = coeffs.params().a;
    const Scalar sigma = coeffs.params().sigma;
    const Scalar x = p.x;
    const Scalar y = p.y;
    const C z(x, y);
    const Scalar radius = 4 * pi * pi * (x * x + y * y);
    const C shift_factor = std::exp(Scalar{2} * i * a * pi * z);
    const Scalar guard = detail::kPoleGuard<Scalar>;

    C sum{0};
    for (Eigen::Index m = 0; m < coeffs.size(); ++m) {
        const C alpha = coeffs.alpha()[m];
        const C beta = coeffs.beta()[m];
        const Scalar g = coeffs.gamma()[m];
        const C g_minus(g, -sigma);
        const C g_plus(g, sigma);

        const C den1 = g * (radius + 4 * pi * x * g_minus + g_minus * g_minus);
        const C den2 = g * (radius - 4 * pi * x * g_plus + g_plus * g_plus);
        const C w = 2 * pi * z - i * sigma;
        const C den3 = 2 * pi * y * (g * g - w * w);
        if (std::abs(den1) < guard || std::abs(den2) < guard || std::abs(den3) < guard) {
            throw DenominatorError("residue denominator vanishes at m = " + std::to_string(m + 1));
        }

        const C num1 = std::exp(-a * (i * g + sigma)) * (beta - i * alpha * g);
        const C num2 = -i * std::exp(a * (i * g - sigma)) * (alpha * g - i * beta);
        const C num3 = i * shift_factor * (alpha * (2 * pi * C(y, -x) - sigma) - beta);
        sum += num1 / den1 + num2 / den2 + num3 / den3;
    }
    const C k = 2 * pi * i * y * sum;
    return {k.real(), k.imag()};
}

/// K(x, y) = (y / pi) int e^{-tau^2} / (y^2 + (x - tau)^2) dtau by adaptive
/// quadrature over |tau| <= L, with L chosen so that the Gaussian tails
/// contribute less than tol / 10.
template <typename Scalar>
Scalar voigt_quadrature(const VoigtPoint<Scalar>& p, Scalar tol, long max_panels = 1000000)
{
    p.validate();
    if (!(tol >= Scalar{1e-15})) throw ValidationError("voigt_quadrature tol >= 1e-15 violated");
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar peak = 1 / (pi * p.y);

    // Both tails together: sqrt(pi) erfc(L) * max of the Lorentzian factor.
    Scalar limit{1};
    while (std::sqrt(pi) * std::erfc(limit) * peak >= tol / 10) {
        limit += Scalar{0.25};
    }
    auto integrand = [&](Scalar tau) {
        const Scalar d = p.x - tau;
        return std::exp(-tau * tau) * p.y / (pi * (p.y * p.y + d * d));
    };
    const Scalar breaks[] = {p.x - p.y, p.x, p.x + p.y, Scalar{0}};
    // The rest of the budget goes to the panels, clamped at the quadrature floor.
    const Scalar panel_tol = std::max(tol * Scalar{0.9}, Scalar{1e-15});
    const QuadratureSpec<Scalar> spec{-limit, limit, panel_tol, max_panels};
    return integrate_adaptive<Scalar>(integrand, spec, std::span<const Scalar>(breaks)).value;
}

/// K(x, y) from the inverse rational approximant of e^{-t^2}: the real part
/// of the approximant is integrated against y / (pi (y^2 + (x - t)^2)) over a
/// window of half-width `window` around both the origin and x.
template <typename Scalar>
Scalar voigt_inverse_contour(const CoefficientSet<Scalar>& inverse_coeffs,
                             const VoigtPoint<Scalar>& p, Scalar tol, Scalar window = 40,
                             long max_panels = 1000000)
{
    p.validate();
    if (inverse_coeffs.direction() != Direction::Inverse) {
        throw DirectionError("voigt_inverse_contour requires an inverse coefficient set");
    }
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    auto integrand = [&](Scalar t) {
        const Scalar d = p.x - t;
        return eval_inverse(inverse_coeffs, t).real() * p.y / (pi * (p.y * p.y + d * d));
    };
    const Scalar lo = std::min(-window, p.x - window);
    const Scalar hi = std::max(window, p.x + window);
    const Scalar breaks[] = {p.x - p.y, p.x, p.x + p.y, Scalar{0}};
    const QuadratureSpec<Scalar> spec{lo, hi, tol, max_panels};
    // Quarter-period panels for the e^{-2 pi i t a} factor.
    return integrate_adaptive<Scalar>(integrand, spec, std::span<const Scalar>(breaks),
                                      Scalar{1} / (4 * std::abs(inverse_coeffs.params().a) + 1))
        .value;
}

}  // namespace ratfourier
