#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ratfourier/coefficients.hpp"
#include "ratfourier/presets.hpp"

using namespace ratfourier;

namespace {

using C = std::complex<double>;

// Literal (m, n) double loop of the reference MATLAB code, carried out
// entirely in Real: samples, gamma, the phase g * (n h), products and sums.
struct BruteForce {
    std::vector<C> alpha, beta;
    std::vector<double> gamma;
    std::vector<double> error_bound;  // naive-loop rounding bound per coefficient
};

template <typename Real>
BruteForce appendix_loop(const Preset<double>& preset)
{
    using CR = std::complex<Real>;
    const auto& p = preset.params;
    const int M2 = 1 << (p.M - 1);
    const Real h = p.h;
    const Real pi = std::numbers::pi_v<Real>;
    // Samples come from the library grid so the comparison isolates the
    // coefficient sums from the sampling step.
    const auto grid = sample_grid(preset.target, p);
    std::vector<CR> fm(p.N + 1);
    for (int n = 0; n <= p.N; ++n) fm[n] = CR(grid.values()[n]);
    const double eps = std::numeric_limits<double>::epsilon();
    BruteForce out;
    for (int m = 1; m <= M2; ++m) {
        const Real g = pi * (2 * m - 1) / (std::pow(Real(2), p.M) * h);
        CR sa = 0, sb = 0;
        double bound = 0;
        for (int n = 0; n <= p.N; ++n) {
            const Real arg = g * n * h;
            sa += fm[n] * std::cos(arg);
            sb += fm[n] * g * std::sin(arg);
            // phase error ~eps |arg| plus accumulation ~(N + 1) eps per term
            bound += static_cast<double>(std::abs(fm[n]) * (1 + g)) * eps *
                     (static_cast<double>(arg) + p.N + 4);
        }
        out.alpha.push_back(C(sa / Real(M2)));
        out.beta.push_back(C(sb / Real(M2)));
        out.gamma.push_back(static_cast<double>(g));
        out.error_bound.push_back(bound / M2);
    }
    return out;
}

SampleSet<double> random_samples(const Preset<double>& preset, std::mt19937_64& rng)
{
    std::normal_distribution<double> dist;
    ComplexVector<double> v(preset.params.N + 1);
    for (auto& x : v) x = {dist(rng), dist(rng)};
    return SampleSet<double>(preset.params, preset.target, v);
}

}  // namespace

TEST(GammaOf, Examples)
{
    auto p = sinc_preset().params;
    // mpmath: pi / 2.56 and 63 pi / 2.56
    EXPECT_NEAR(gamma_of(1, p), 1.227184630308512983774470, 4e-16);
    EXPECT_NEAR(gamma_of(32, p), 77.31263170943631797779161, 3e-14);
    EXPECT_THROW(gamma_of(33, p), RangeError);
    EXPECT_THROW(gamma_of(0, p), RangeError);
    p.M = 1;
    EXPECT_NO_THROW(gamma_of(1, p));
    EXPECT_THROW(gamma_of(2, p), RangeError);
}

TEST(ComputeCoefficients, MatchesExactlyAccumulatedLoop)
{
    for (const auto& preset : {sinc_preset(), gauss_derivative_preset(), voigt_preset()}) {
        const auto coeffs = build_coefficients(preset);
        const auto ref = appendix_loop<long double>(preset);
        ASSERT_EQ(coeffs.size(), 32);
        double scale = 0;
        for (int m = 0; m < 32; ++m) {
            scale = std::max({scale, std::abs(ref.alpha[m]), std::abs(ref.beta[m])});
        }
        for (int m = 0; m < 32; ++m) {
            EXPECT_NEAR(coeffs.gamma()[m], ref.gamma[m], 1e-15 * ref.gamma[m]) << preset.name;
            EXPECT_LE(std::abs(coeffs.alpha()[m] - ref.alpha[m]), 1e-15 * scale)
                << preset.name << " m=" << m + 1;
            EXPECT_LE(std::abs(coeffs.beta()[m] - ref.beta[m]), 1e-15 * scale)
                << preset.name << " m=" << m + 1;
        }
    }
}

TEST(ComputeCoefficients, NaiveLoopWithinSummationBound)
{
    // The literal loop in double carries phase and accumulation rounding;
    // agreement is bounded by its own error budget.
    for (const auto& preset : {sinc_preset(), gauss_derivative_preset(), voigt_preset()}) {
        const auto coeffs = build_coefficients(preset);
        const auto ref = appendix_loop<double>(preset);
        for (int m = 0; m < 32; ++m) {
            const double bound = ref.error_bound[m];
            EXPECT_LE(std::abs(coeffs.alpha()[m] - ref.alpha[m]), bound) << preset.name;
            EXPECT_LE(std::abs(coeffs.beta()[m] - ref.beta[m]), bound) << preset.name;
        }
    }
}

TEST(ComputeCoefficients, ZeroSamples)
{
    const auto preset = sinc_preset();
    const SampleSet<double> zero(preset.params, preset.target, ComplexVector<double>::Zero(29));
    const auto coeffs = compute_coefficients(zero);
    EXPECT_EQ(coeffs.alpha().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(coeffs.beta().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(coeffs.gamma(), build_coefficients(preset).gamma());
}

TEST(ComputeCoefficients, RealAndImaginarySamples)
{
    const auto sinc = build_coefficients(sinc_preset());
    EXPECT_EQ(sinc.alpha().imag().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(sinc.beta().imag().cwiseAbs().maxCoeff(), 0.0);

    const auto gd = build_coefficients(gauss_derivative_preset());
    EXPECT_LE(gd.alpha().real().cwiseAbs().maxCoeff(), 1e-18);
    EXPECT_LE(gd.beta().real().cwiseAbs().maxCoeff(), 1e-18);
}

TEST(ComputeCoefficients, ScalesWithComplexConstant)
{
    const auto preset = sinc_preset();
    const auto base = sample_grid(preset.target, preset.params);
    const C c(0.75, -2.0);
    const SampleSet<double> scaled(preset.params, preset.target, base.values() * c);
    const auto a = compute_coefficients(base);
    const auto b = compute_coefficients(scaled);
    for (int m = 0; m < a.size(); ++m) {
        EXPECT_LE(std::abs(b.alpha()[m] - c * a.alpha()[m]), 1e-14 * std::abs(c * a.alpha()[m]) + 1e-300);
        EXPECT_LE(std::abs(b.beta()[m] - c * a.beta()[m]), 1e-14 * std::abs(c * a.beta()[m]) + 1e-300);
    }
}

TEST(ComputeCoefficients, Linear)
{
    std::mt19937_64 rng(21);
    const auto preset = gauss_derivative_preset();
    for (int trial = 0; trial < 10; ++trial) {
        const auto s1 = random_samples(preset, rng);
        const auto s2 = random_samples(preset, rng);
        const SampleSet<double> sum(preset.params, preset.target, s1.values() + s2.values());
        const auto c1 = compute_coefficients(s1);
        const auto c2 = compute_coefficients(s2);
        const auto c12 = compute_coefficients(sum);
        const double scale = std::max(c12.alpha().cwiseAbs().maxCoeff(),
                                      c12.beta().cwiseAbs().maxCoeff());
        EXPECT_LE((c12.alpha() - c1.alpha() - c2.alpha()).cwiseAbs().maxCoeff(), 1e-13 * scale);
        EXPECT_LE((c12.beta() - c1.beta() - c2.beta()).cwiseAbs().maxCoeff(), 1e-13 * scale);
    }
}

TEST(ComputeCoefficients, BetaOverGammaBounded)
{
    std::mt19937_64 rng(8);
    const auto preset = sinc_preset();
    for (int trial = 0; trial < 5; ++trial) {
        const auto s = random_samples(preset, rng);
        const double bound = s.values().cwiseAbs().sum() / 32.0;
        const auto c = compute_coefficients(s);
        for (int m = 0; m < c.size(); ++m) {
            EXPECT_LE(std::abs(c.beta()[m]) / c.gamma()[m], bound * (1 + 1e-14));
        }
    }
}

TEST(ComputeCoefficients, GammaSpacingIsConstant)
{
    const auto c = build_coefficients(sinc_preset());
    const double step = 2 * std::numbers::pi / (64 * 0.04);
    for (int m = 0; m + 1 < c.size(); ++m) {
        EXPECT_NEAR(c.gamma()[m + 1] - c.gamma()[m], step, 1e-15 * c.gamma()[m + 1]);
    }
}

TEST(ComputeCoefficients, DirectionTagOnly)
{
    const auto preset = voigt_preset();
    const auto samples = sample_grid(preset.target, preset.params);
    const auto fwd = compute_coefficients(samples, Direction::Forward);
    const auto inv = compute_coefficients(samples, Direction::Inverse);
    EXPECT_EQ(fwd.direction(), Direction::Forward);
    EXPECT_EQ(inv.direction(), Direction::Inverse);
    EXPECT_EQ(fwd.alpha(), inv.alpha());
    EXPECT_EQ(fwd.beta(), inv.beta());
}

TEST(CoefficientSet, RejectsInconsistentArrays)
{
    const auto c = build_coefficients(sinc_preset());
    EXPECT_THROW(CoefficientSet<double>(c.params(), c.target(), c.direction(),
                                        c.alpha().head(31), c.beta(), c.gamma()),
                 ValidationError);
    RealVector<double> unsorted = c.gamma();
    std::swap(unsorted[0], unsorted[1]);
    EXPECT_THROW(CoefficientSet<double>(c.params(), c.target(), c.direction(), c.alpha(),
                                        c.beta(), unsorted),
                 ValidationError);
}
