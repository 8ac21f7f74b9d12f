#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "ratfourier/errors.hpp"
#include "ratfourier/params.hpp"
#include "ratfourier/summation.hpp"

namespace ratfourier {

/// Truncation order of the cosine product, 1 <= M <= 24.
class IdentityOrder {
public:
    explicit IdentityOrder(int order) : order_(order)
    {
        if (order < 1 || order > kMaxOrder) {
            throw ValidationError("identity order must satisfy 1 <= M <= " +
                                  std::to_string(kMaxOrder) + " (got " + std::to_string(order) +
                                  ")");
        }
    }

    int value() const { return order_; }
    std::size_t term_count() const { return std::size_t{1} << (order_ - 1); }

private:
    int order_;
};

/// prod_{m=1}^{M} cos(t / 2^m)
template <typename Scalar>
Scalar viete_product(Scalar t, IdentityOrder order)
{
    Scalar product{1};
    for (int m = 1; m <= order.value(); ++m) {
        product *= std::cos(std::ldexp(t, -m));
    }
    return product;
}

/// (1 / 2^{M-1}) sum_{m=1}^{2^{M-1}} cos((2m-1) t / 2^M)
///
/// Every argument is formed directly from m; no angle-addition recurrence.
template <typename Scalar>
Scalar cosine_sum(Scalar t, IdentityOrder order)
{
    const int M = order.value();
    const std::size_t terms = order.term_count();
    const Scalar scaled = std::ldexp(t, -M);
    CompensatedSum<Scalar> sum;
    for (std::size_t m = 1; m <= terms; ++m) {
        sum += std::cos(static_cast<Scalar>(2 * m - 1) * scaled);
    }
    return std::ldexp(sum.value(), -(M - 1));
}

/// Truncated cosine series for sinc(pi t / h). Only meaningful on
/// |t| <= T/4 with T = 2^{M+1} h; outside that window it repeats with
/// period T.
template <typename Scalar>
Scalar sinc_series(Scalar t, const ApproxParams<Scalar>& params)
{
    const IdentityOrder order(params.M);
    return cosine_sum(std::numbers::pi_v<Scalar> * t / params.h, order);
}

}  // namespace ratfourier
