#pragma once

#include <iosfwd>
#include <string>

#include "ratfourier/coefficients.hpp"
#include "ratfourier/errors.hpp"
#include "ratfourier/rational_eval.hpp"

namespace ratfourier {

/// Malformed coefficient or curve file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// 17 significant digits; binary64 values survive a text round trip.
std::string format_number(double value);

/// JSON document with fields a, M, N, h, sigma, k, delta, direction,
/// target, alpha ([re, im] pairs), beta ([re, im] pairs), gamma.
void write_coefficients(std::ostream& out, const CoefficientSet<double>& coeffs);
CoefficientSet<double> read_coefficients(std::istream& in);

void save_coefficients(const std::string& path, const CoefficientSet<double>& coeffs);
CoefficientSet<double> load_coefficients(const std::string& path);

/// Header `x,approx_re,approx_im,reference,abs_diff`, one row per point.
void write_curve(std::ostream& out, const EvaluationCurve<double>& curve);

struct VoigtCurve {
    RealVector<double> x;
    RealVector<double> approx;
    RealVector<double> reference;
    RealVector<double> abs_diff;

    double max_abs_diff() const { return abs_diff.size() == 0 ? 0.0 : abs_diff.maxCoeff(); }
};

/// Header `x,voigt_approx,voigt_ref,abs_diff`.
void write_voigt_curve(std::ostream& out, const VoigtCurve& curve);

}  // namespace ratfourier
