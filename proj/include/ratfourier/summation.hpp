#pragma once

#include <cmath>
#include <complex>

namespace ratfourier {

// Neumaier variant of Kahan summation. Handles terms larger than the running
// sum, which is the common case for mixed-sign cosine series.
template <typename Scalar>
class CompensatedSum {
public:
    CompensatedSum& operator+=(Scalar term)
    {
        const Scalar t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            compensation_ += (sum_ - t) + term;
        } else {
            compensation_ += (term - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    // Adds a * b, folding the product's rounding error into the compensation.
    CompensatedSum& add_product(Scalar a, Scalar b)
    {
        const Scalar p = a * b;
        *this += p;
        compensation_ += std::fma(a, b, -p);
        return *this;
    }

    // Adds a * (b_hi + b_lo) for a factor carried as an unevaluated pair.
    CompensatedSum& add_product(Scalar a, Scalar b_hi, Scalar b_lo)
    {
        add_product(a, b_hi);
        compensation_ += a * b_lo;
        return *this;
    }

    Scalar value() const { return sum_ + compensation_; }

private:
    Scalar sum_{0};
    Scalar compensation_{0};
};

template <typename Scalar>
class CompensatedSum<std::complex<Scalar>> {
public:
    CompensatedSum& operator+=(const std::complex<Scalar>& term)
    {
        re_ += term.real();
        im_ += term.imag();
        return *this;
    }

    CompensatedSum& add_product(const std::complex<Scalar>& a, Scalar b)
    {
        re_.add_product(a.real(), b);
        im_.add_product(a.imag(), b);
        return *this;
    }

    CompensatedSum& add_product(const std::complex<Scalar>& a, Scalar b_hi, Scalar b_lo)
    {
        re_.add_product(a.real(), b_hi, b_lo);
        im_.add_product(a.imag(), b_hi, b_lo);
        return *this;
    }

    std::complex<Scalar> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<Scalar> re_;
    CompensatedSum<Scalar> im_;
};

}  // namespace ratfourier
