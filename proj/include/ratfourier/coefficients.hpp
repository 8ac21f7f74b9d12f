#pragma once

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "ratfourier/errors.hpp"
#include "ratfourier/params.hpp"
#include "ratfourier/summation.hpp"
#include "ratfourier/targets.hpp"

namespace ratfourier {

/// Forward sets approximate F(nu) from samples of f(t); inverse sets
/// approximate f(t) from samples of F(nu). The arithmetic is identical, the
/// tag only decides which evaluator may consume the set.
enum class Direction { Forward, Inverse };

std::string_view to_string(Direction direction);
std::optional<Direction> parse_direction(std::string_view name);

/// gamma_m = pi (2m - 1) / (2^M h), 1 <= m <= 2^{M-1}.
template <typename Scalar>
Scalar gamma_of(std::size_t m, const ApproxParams<Scalar>& params)
{
    if (params.M < 1 || params.M > kMaxOrder) {
        throw ValidationError("M out of range");
    }
    if (m < 1 || m > params.term_count()) {
        throw RangeError("m = " + std::to_string(m) + " outside 1.." +
                         std::to_string(params.term_count()));
    }
    return std::numbers::pi_v<Scalar> * static_cast<Scalar>(2 * m - 1) /
           std::ldexp(params.h, params.M);
}

template <typename Scalar = double>
class CoefficientSet {
public:
    CoefficientSet(ApproxParams<Scalar> params, TargetFunction<Scalar> target, Direction direction,
                   ComplexVector<Scalar> alpha, ComplexVector<Scalar> beta,
                   RealVector<Scalar> gamma)
        : params_(std::move(params)),
          target_(target),
          direction_(direction),
          alpha_(std::move(alpha)),
          beta_(std::move(beta)),
          gamma_(std::move(gamma))
    {
        params_.validate();
        const auto terms = static_cast<Eigen::Index>(params_.term_count());
        if (alpha_.size() != terms || beta_.size() != terms || gamma_.size() != terms) {
            throw ValidationError("alpha, beta and gamma must each hold 2^(M-1) = " +
                                  std::to_string(terms) + " entries");
        }
        if (!alpha_.allFinite() || !beta_.allFinite() || !gamma_.allFinite()) {
            throw ValidationError("coefficients must be finite");
        }
        for (Eigen::Index i = 0; i < terms; ++i) {
            if (!(gamma_[i] > 0) || (i > 0 && !(gamma_[i] > gamma_[i - 1]))) {
                throw ValidationError("gamma must be positive and strictly increasing");
            }
        }
    }

    const ApproxParams<Scalar>& params() const { return params_; }
    const TargetFunction<Scalar>& target() const { return target_; }
    Direction direction() const { return direction_; }
    const ComplexVector<Scalar>& alpha() const { return alpha_; }
    const ComplexVector<Scalar>& beta() const { return beta_; }
    const RealVector<Scalar>& gamma() const { return gamma_; }
    Eigen::Index size() const { return gamma_.size(); }

private:
    ApproxParams<Scalar> params_;
    TargetFunction<Scalar> target_;
    Direction direction_;
    ComplexVector<Scalar> alpha_;
    ComplexVector<Scalar> beta_;
    RealVector<Scalar> gamma_;
};

/// alpha_m = 2^{1-M} sum_n v_n cos(gamma_m n h)
/// beta_m  = 2^{1-M} sum_n v_n gamma_m sin(gamma_m n h)
template <typename Scalar>
CoefficientSet<Scalar> compute_coefficients(const SampleSet<Scalar>& samples,
                                            Direction direction = Direction::Forward)
{
    const auto& params = samples.params();
    const auto& v = samples.values();
    const auto terms = static_cast<Eigen::Index>(params.term_count());

    ComplexVector<Scalar> alpha(terms);
    ComplexVector<Scalar> beta(terms);
    RealVector<Scalar> gamma(terms);

    // gamma_m n h = pi (2m - 1) n / 2^M exactly; the odd integer product is
    // reduced modulo 2^{M+1} so the phase lands in [0, 2 pi) with a single
    // rounding instead of carrying the error of g * (n h) at large n.
    const std::int64_t wrap = std::int64_t{1} << (params.M + 1);
    // Trig factors are evaluated one step wider and split into a hi/lo pair,
    // so their rounding does not dominate the cancelling sums.
    using Wide = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
    const Wide phase_unit = std::ldexp(std::numbers::pi_v<Wide>, -params.M);
    const auto split = [](Wide x, Scalar& hi, Scalar& lo) {
        hi = static_cast<Scalar>(x);
        lo = static_cast<Scalar>(x - static_cast<Wide>(hi));
    };

    // The (m, n) loop is independent across m.
    for (Eigen::Index i = 0; i < terms; ++i) {
        const Scalar g = gamma_of(static_cast<std::size_t>(i + 1), params);
        const std::int64_t odd = 2 * static_cast<std::int64_t>(i) + 1;
        CompensatedSum<std::complex<Scalar>> cos_sum;
        CompensatedSum<std::complex<Scalar>> sin_sum;
        for (Eigen::Index n = 0; n < v.size(); ++n) {
            const Wide arg = phase_unit * static_cast<Wide>((odd * n) % wrap);
            Scalar hi, lo;
            split(std::cos(arg), hi, lo);
            cos_sum.add_product(v[n], hi, lo);
            split(std::sin(arg), hi, lo);
            sin_sum.add_product(v[n], hi, lo);
        }
        gamma[i] = g;
        alpha[i] = std::ldexp(Scalar{1}, 1 - params.M) * cos_sum.value();
        beta[i] = std::ldexp(g, 1 - params.M) * sin_sum.value();
    }
    return CoefficientSet<Scalar>(params, samples.target(), direction, std::move(alpha),
                                  std::move(beta), std::move(gamma));
}

}  // namespace ratfourier
