// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ratfourier/ratfourier.hpp"

using namespace ratfourier;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_budget_s;
    std::function<Outcome()> check;
};

std::string fmt(const char* format, auto... args)
{
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

Outcome sinc_reproduction()
{
    const auto curve = error_scan(build_coefficients(sinc_preset()), ReferenceKind::Sinc, -kTwoPi,
                                  kTwoPi, 1000);
    const double worst = curve.max_abs_diff();
    return {worst < 3.2e-3, fmt("max_abs_diff=%.3e (< 3.2e-3)", worst)};
}

Outcome nu_gauss_reproduction()
{
    const auto curve = error_scan(build_coefficients(gauss_derivative_preset()),
                                  ReferenceKind::NuGauss, -kTwoPi, kTwoPi, 1000);
    const double worst = curve.max_abs_diff();
    return {worst < 7.3e-12, fmt("max_abs_diff=%.3e (< 7.3e-12)", worst)};
}

Outcome identity_suite()
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    double worst = 0;
    for (int M = 1; M <= 12; ++M) {
        const IdentityOrder order(M);
        for (int i = 0; i < 200; ++i) {
            const double t = dist(rng);
            worst = std::max(worst, std::abs(viete_product(t, order) - cosine_sum(t, order)));
        }
    }
    return {worst <= 1e-11, fmt("max |product - sum|=%.3e (<= 1e-11)", worst)};
}

Outcome voigt_desk_scale()
{
    const auto coeffs = build_coefficients(voigt_preset());
    const auto x = linspace(-kTwoPi, kTwoPi, 200);
    double worst = 0;
    bool positive = true;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const VoigtPoint<double> p{x[i], 1.0};
        const double approx = voigt_residue(coeffs, p).value;
        positive = positive && approx > 0;
        worst = std::max(worst, std::abs(approx - voigt_quadrature(p, 1e-14)));
    }
    const double closed = std::abs(voigt_residue(coeffs, {0.0, 1.0}).value -
                                   std::exp(1.0) * std::erfc(1.0));
    return {worst <= 1e-12 && closed <= 1e-12 && positive,
            fmt("max |residue - quadrature|=%.3e, |K(0,1) - e erfc(1)|=%.3e (<= 1e-12)", worst,
                closed)};
}

Outcome inverse_path()
{
    const auto curve = error_scan(build_coefficients(gauss_inverse_preset()), ReferenceKind::Gauss,
                                  -kTwoPi, kTwoPi, 1000);
    const double worst = curve.max_abs_diff();
    return {worst <= 1e-9, fmt("max_abs_diff=%.3e (<= 1e-9)", worst)};
}

Outcome oracle_self_certification()
{
    const TargetFunction<double> gauss{TargetKind::Gaussian};
    const QuadratureSpec<double> spec{-6.0, 6.0, 1e-13, 1000000};
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const double nu = dist(rng);
        worst = std::max(worst, std::abs(fourier_forward_quadrature(gauss, 0.0, nu, spec) -
                                         std::exp(-nu * nu)));
    }
    return {worst <= 1e-12, fmt("max |oracle - e^{-nu^2}|=%.3e (<= 1e-12)", worst)};
}

Outcome limit_replacement()
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-kTwoPi, kTwoPi);
    std::vector<double> nus(10);
    for (auto& nu : nus) nu = dist(rng);

    auto gaps_for = [&](double sigma) {
        auto preset = sinc_preset();
        preset.params.sigma = sigma;
        const auto samples = sample_grid(preset.target, preset.params);
        const double upper = 2 * preset.params.a;
        std::vector<double> gaps;
        for (double nu : nus) {
            gaps.push_back(std::abs(damped_expansion_quadrature(samples, nu, upper, 1e-12) -
                                    damped_expansion_quadrature(samples, nu, kInf, 1e-12)));
        }
        return gaps;
    };
    const auto g1 = gaps_for(1.0);
    const auto g27 = gaps_for(2.7);
    const auto g5 = gaps_for(5.0);

    double worst = 0;
    bool monotone = true;
    for (std::size_t i = 0; i < nus.size(); ++i) {
        worst = std::max(worst, g27[i]);
        monotone = monotone && g27[i] <= g1[i] && g5[i] <= g27[i];
    }
    return {worst <= 1e-6 && monotone,
            fmt("max gap at sigma=2.7: %.3e (<= 1e-6); monotone over sigma {1, 2.7, 5}: %s",
                worst, monotone ? "yes" : "no")};
}

Outcome rearrangement_equivalence()
{
    const auto preset = sinc_preset();
    const auto samples = sample_grid(preset.target, preset.params);
    const auto coeffs = compute_coefficients(samples);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dist(-kTwoPi, kTwoPi);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const double nu = dist(rng);
        const auto expected = std::polar(1.0, kTwoPi * nu * preset.params.a) *
                              damped_expansion_closed_form(samples, nu);
        worst = std::max(worst, std::abs(eval_forward(coeffs, nu) - expected) / std::abs(expected));
    }
    return {worst <= 1e-12, fmt("max relative difference=%.3e (<= 1e-12)", worst)};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "sinc reproduction", 1.0, sinc_reproduction},
        {2, "nu e^{-nu^2} reproduction", 1.0, nu_gauss_reproduction},
        {3, "product-to-sum identity", 1.0, identity_suite},
        {4, "Voigt residue vs quadrature", 10.0, voigt_desk_scale},
        {5, "inverse-transform path", 1.0, inverse_path},
        {6, "oracle self-certification", 5.0, oracle_self_certification},
        {7, "upper-limit replacement", 10.0, limit_replacement},
        {8, "rearrangement equivalence", 5.0, rearrangement_equivalence},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.time_budget_s;
        const bool passed = outcome.passed && in_time;
        failures += passed ? 0 : 1;
        std::printf("[%s] %d. %s: %s; %.3f s (< %.0f s)\n", passed ? "PASS" : "FAIL", c.id, c.name,
                    outcome.detail.c_str(), seconds, c.time_budget_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
