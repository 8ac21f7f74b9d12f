#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "ratfourier/errors.hpp"

namespace ratfourier {

/// Integration interval and accuracy target.
template <typename Scalar = double>
struct QuadratureSpec {
    Scalar lo{0};
    Scalar hi{1};
    Scalar tol{1e-12};
    long max_panels{1000000};

    void validate() const
    {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
            throw ValidationError("quadrature requires finite lo < hi");
        if (!(tol >= Scalar{1e-15})) throw ValidationError("quadrature tol >= 1e-15 violated");
        if (max_panels < 1 || max_panels > 10000000)
            throw ValidationError("quadrature max_panels must lie in 1..1e7");
    }
};

template <typename Value, typename Scalar = double>
struct QuadratureResult {
    Value value{};
    Scalar error_estimate{0};
    long panels{0};
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK qk15).
template <typename Scalar>
struct Kronrod15 {
    static constexpr std::array<Scalar, 8> xgk{
        Scalar(0.991455371120812639206854697526329L), Scalar(0.949107912342758524526189684047851L),
        Scalar(0.864864423359769072789712788640926L), Scalar(0.741531185599394439863864773280788L),
        Scalar(0.586087235467691130294144845693013L), Scalar(0.405845151377397166906606412076961L),
        Scalar(0.207784955007898467600689403773245L), Scalar(0.0L)};
    static constexpr std::array<Scalar, 8> wgk{
        Scalar(0.022935322010529224963732008058970L), Scalar(0.063092092629978553290700663189204L),
        Scalar(0.104790010322250183839876322541518L), Scalar(0.140653259715525918745189590510238L),
        Scalar(0.169004726639267902826583426598550L), Scalar(0.190350578064785409913256402421014L),
        Scalar(0.204432940075298892414161999234649L), Scalar(0.209482141084727828012999174891714L)};
    // Gauss weights for xgk[1], xgk[3], xgk[5], xgk[7].
    static constexpr std::array<Scalar, 4> wg{
        Scalar(0.129484966168869693270611432679082L), Scalar(0.279705391489276667901467771423780L),
        Scalar(0.381830050505118944950369775488975L), Scalar(0.417959183673469387755102040816327L)};
};

template <typename Value, typename Scalar>
struct Panel {
    Scalar lo;
    Scalar hi;
    Value value;
    Scalar error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename Value, typename Scalar, typename F>
Panel<Value, Scalar> kronrod_panel(const F& f, Scalar lo, Scalar hi)
{
    using K = Kronrod15<Scalar>;
    const Scalar center = (lo + hi) / 2;
    const Scalar half = (hi - lo) / 2;
    const Value fc = f(center);
    Value kronrod = fc * K::wgk[7];
    Value gauss = fc * K::wg[3];
    for (int j = 0; j < 7; ++j) {
        const Scalar dx = half * K::xgk[j];
        const Value fsum = f(center - dx) + f(center + dx);
        kronrod += fsum * K::wgk[j];
        if (j % 2 == 1) gauss += fsum * K::wg[j / 2];
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, static_cast<Scalar>(std::abs(kronrod - gauss))};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration.
///
/// [lo, hi] is first cut at every breakpoint inside it and into pieces no
/// wider than `max_width`; the panel with the largest error estimate is then
/// bisected until the summed estimate drops to `tol`. Value may be real or
/// complex.
template <typename Value, typename Scalar, typename F>
QuadratureResult<Value, Scalar> integrate_adaptive(
    const F& f, const QuadratureSpec<Scalar>& spec, std::span<const Scalar> breakpoints = {},
    Scalar max_width = std::numeric_limits<Scalar>::infinity())
{
    spec.validate();

    std::vector<Scalar> cuts{spec.lo, spec.hi};
    for (Scalar b : breakpoints) {
        if (b > spec.lo && b < spec.hi) cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<detail::Panel<Value, Scalar>> queue;
    long panels = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Scalar width = cuts[i + 1] - cuts[i];
        const auto pieces = static_cast<long>(std::max<Scalar>(1, std::ceil(width / max_width)));
        for (long j = 0; j < pieces; ++j) {
            const Scalar a = cuts[i] + width * static_cast<Scalar>(j) / static_cast<Scalar>(pieces);
            const Scalar b = j + 1 == pieces
                                 ? cuts[i + 1]
                                 : cuts[i] + width * static_cast<Scalar>(j + 1) /
                                                 static_cast<Scalar>(pieces);
            queue.push(detail::kronrod_panel<Value>(f, a, b));
            ++panels;
        }
    }
    if (panels > spec.max_panels) {
        throw ConvergenceError("initial subdivision already exceeds the panel budget");
    }

    auto total_error = [&queue] {
        // Recomputed from scratch; a running sum drifts once errors span many decades.
        Scalar sum{0};
        auto copy = queue;
        while (!copy.empty()) {
            sum += copy.top().error;
            copy.pop();
        }
        return sum;
    };

    Scalar error = total_error();
    long since_resync = 0;
    while (error > spec.tol) {
        if (panels >= spec.max_panels) {
            throw ConvergenceError("panel budget of " + std::to_string(spec.max_panels) +
                                   " exhausted with error estimate " +
                                   std::to_string(static_cast<double>(error)));
        }
        const auto worst = queue.top();
        queue.pop();
        const Scalar mid = (worst.lo + worst.hi) / 2;
        if (!(mid > worst.lo && mid < worst.hi)) {
            throw ConvergenceError("panel width reached machine resolution");
        }
        const auto left = detail::kronrod_panel<Value>(f, worst.lo, mid);
        const auto right = detail::kronrod_panel<Value>(f, mid, worst.hi);
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
        if (++since_resync == 256) {
            error = total_error();
            since_resync = 0;
        }
    }

    QuadratureResult<Value, Scalar> result;
    result.panels = panels;
    Value value{};
    while (!queue.empty()) {
        value += queue.top().value;
        result.error_estimate += queue.top().error;
        queue.pop();
    }
    result.value = value;
    return result;
}

}  // namespace ratfourier
