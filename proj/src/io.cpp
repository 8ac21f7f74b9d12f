#include "ratfourier/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ratfourier {

namespace {

using json = nlohmann::json;

void write_pairs(std::ostream& out, const ComplexVector<double>& values)
{
    out << '[';
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i > 0) out << ", ";
        out << '[' << format_number(values[i].real()) << ", " << format_number(values[i].imag())
            << ']';
    }
    out << ']';
}

template <typename T>
T required(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

ComplexVector<double> read_pairs(const json& doc, const char* key)
{
    const auto rows = required<std::vector<std::vector<double>>>(doc, key);
    ComplexVector<double> out(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != 2) {
            throw FormatError(std::string("field '") + key + "' must hold [re, im] pairs");
        }
        out[static_cast<Eigen::Index>(i)] = {rows[i][0], rows[i][1]};
    }
    return out;
}

}  // namespace

std::string format_number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_coefficients(std::ostream& out, const CoefficientSet<double>& coeffs)
{
    const auto& p = coeffs.params();
    out << "{\n"
        << "  \"a\": " << format_number(p.a) << ",\n"
        << "  \"M\": " << p.M << ",\n"
        << "  \"N\": " << p.N << ",\n"
        << "  \"h\": " << format_number(p.h) << ",\n"
        << "  \"sigma\": " << format_number(p.sigma) << ",\n"
        << "  \"k\": " << p.k << ",\n"
        << "  \"delta\": " << format_number(p.delta) << ",\n"
        << "  \"direction\": \"" << to_string(coeffs.direction()) << "\",\n"
        << "  \"target\": \"" << to_string(coeffs.target().kind) << "\",\n"
        << "  \"alpha\": ";
    write_pairs(out, coeffs.alpha());
    out << ",\n  \"beta\": ";
    write_pairs(out, coeffs.beta());
    out << ",\n  \"gamma\": [";
    for (Eigen::Index i = 0; i < coeffs.gamma().size(); ++i) {
        if (i > 0) out << ", ";
        out << format_number(coeffs.gamma()[i]);
    }
    out << "]\n}\n";
}

CoefficientSet<double> read_coefficients(std::istream& in)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("coefficient file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("coefficient file must hold a JSON object");

    ApproxParams<double> p;
    p.a = required<double>(doc, "a");
    p.M = required<int>(doc, "M");
    p.N = required<int>(doc, "N");
    p.h = required<double>(doc, "h");
    p.sigma = required<double>(doc, "sigma");
    p.k = required<int>(doc, "k");
    p.delta = required<double>(doc, "delta");

    const auto direction = parse_direction(required<std::string>(doc, "direction"));
    if (!direction) throw FormatError("direction must be 'forward' or 'inverse'");
    const auto kind = parse_target_kind(required<std::string>(doc, "target"));
    if (!kind) throw FormatError("unknown target kind");

    auto alpha = read_pairs(doc, "alpha");
    auto beta = read_pairs(doc, "beta");
    const auto gamma_values = required<std::vector<double>>(doc, "gamma");
    RealVector<double> gamma =
        Eigen::Map<const RealVector<double>>(gamma_values.data(),
                                             static_cast<Eigen::Index>(gamma_values.size()));
    return CoefficientSet<double>(p, TargetFunction<double>{*kind, p.k}, *direction,
                                  std::move(alpha), std::move(beta), std::move(gamma));
}

void save_coefficients(const std::string& path, const CoefficientSet<double>& coeffs)
{
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    write_coefficients(out, coeffs);
    if (!out) throw FormatError("write to '" + path + "' failed");
}

CoefficientSet<double> load_coefficients(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_coefficients(in);
}

void write_curve(std::ostream& out, const EvaluationCurve<double>& curve)
{
    out << "x,approx_re,approx_im,reference,abs_diff\n";
    for (Eigen::Index i = 0; i < curve.size(); ++i) {
        out << format_number(curve.abscissae[i]) << ',' << format_number(curve.approx[i].real())
            << ',' << format_number(curve.approx[i].imag()) << ','
            << format_number(curve.reference[i]) << ',' << format_number(curve.abs_diff[i])
            << '\n';
    }
}

void write_voigt_curve(std::ostream& out, const VoigtCurve& curve)
{
    out << "x,voigt_approx,voigt_ref,abs_diff\n";
    for (Eigen::Index i = 0; i < curve.x.size(); ++i) {
        out << format_number(curve.x[i]) << ',' << format_number(curve.approx[i]) << ','
            << format_number(curve.reference[i]) << ',' << format_number(curve.abs_diff[i])
            << '\n';
    }
}

}  // namespace ratfourier
