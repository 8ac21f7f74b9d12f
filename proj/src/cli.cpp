#include "ratfourier/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratfourier/io.hpp"
#include "ratfourier/ratfourier.hpp"

namespace ratfourier::cli {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kIdentityTolerance = 1e-11;
constexpr int kIdentityMaxOrder = 12;

/// Thrown for errors that map onto a specific exit code.
struct Exit {
    int code;
    std::string message;
};

struct ParamOptions {
    std::string preset;
    double a{};
    int M{};
    int N{};
    double h{};
    double sigma{};
    int k{};
    double delta{};
    std::string direction;
    std::string target;

    CLI::Option* a_opt{};
    CLI::Option* M_opt{};
    CLI::Option* N_opt{};
    CLI::Option* h_opt{};
    CLI::Option* sigma_opt{};
    CLI::Option* k_opt{};
    CLI::Option* delta_opt{};
    CLI::Option* direction_opt{};
    CLI::Option* target_opt{};

    void attach(CLI::App& app)
    {
        app.add_option("--preset", preset, "sinc | gauss-derivative | voigt | gauss-inverse");
        a_opt = app.add_option("--a", a, "shift a");
        M_opt = app.add_option("--M", M, "order M (2^(M-1) terms)");
        N_opt = app.add_option("--N", N, "samples at n = 0..N");
        h_opt = app.add_option("--h", h, "sample step h");
        sigma_opt = app.add_option("--sigma", sigma, "damping constant");
        k_opt = app.add_option("--k", k, "surrogate half-exponent");
        delta_opt = app.add_option("--delta", delta, "surrogate margin");
        direction_opt = app.add_option("--direction", direction, "forward | inverse");
        target_opt = app.add_option("--target", target,
                                    "rect-surrogate | rect-surrogate-gauss | gauss-derivative | gauss");
    }

    Preset<double> resolve(std::string_view fallback, std::ostream& err) const
    {
        const std::string name = preset.empty() ? std::string(fallback) : preset;
        auto base = find_preset<double>(name);
        if (!base) throw Exit{kValidation, "unknown preset '" + name + "'"};
        auto& p = base->params;
        if (a_opt->count()) p.a = a;
        if (M_opt->count()) p.M = M;
        if (N_opt->count()) p.N = N;
        if (h_opt->count()) p.h = h;
        if (sigma_opt->count()) p.sigma = sigma;
        if (k_opt->count()) p.k = k;
        if (delta_opt->count()) p.delta = delta;
        base->target.k = p.k;
        if (target_opt->count()) {
            const auto kind = parse_target_kind(target);
            if (!kind) throw Exit{kValidation, "unknown target '" + target + "'"};
            base->target.kind = *kind;
        }
        if (direction_opt->count()) {
            const auto d = parse_direction(direction);
            if (!d) throw Exit{kValidation, "direction must be forward or inverse"};
            base->direction = *d;
        }
        try {
            p.validate();
        } catch (const ValidationError& e) {
            throw Exit{kValidation, e.what()};
        }
        for (const auto& w : p.warnings()) err << "warning: " << w << '\n';
        return *base;
    }
};

ReferenceKind default_reference(TargetKind kind)
{
    switch (kind) {
    case TargetKind::RectSurrogate:
    case TargetKind::RectSurrogateGaussianAlt: return ReferenceKind::Sinc;
    case TargetKind::GaussianDerivative: return ReferenceKind::NuGauss;
    case TargetKind::Gaussian: return ReferenceKind::Gauss;
    }
    return ReferenceKind::Sinc;
}

void echo_params(std::ostream& out, const CoefficientSet<double>& c)
{
    const auto& p = c.params();
    out << "a=" << format_number(p.a) << " M=" << p.M << " N=" << p.N
        << " h=" << format_number(p.h) << " sigma=" << format_number(p.sigma) << " k=" << p.k
        << " delta=" << format_number(p.delta) << " direction=" << to_string(c.direction())
        << " target=" << to_string(c.target().kind) << '\n';
}

template <typename Fn>
auto guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const Exit&) {
        throw;
    } catch (const FormatError& e) {
        throw Exit{kValidation, e.what()};
    } catch (const ValidationError& e) {
        throw Exit{kValidation, e.what()};
    } catch (const OverflowError& e) {
        throw Exit{kValidation, e.what()};
    } catch (const RangeError& e) {
        throw Exit{kValidation, e.what()};
    } catch (const DirectionError& e) {
        throw Exit{kIncompatible, e.what()};
    }
}

void write_file(const std::string& path, const auto& writer)
{
    std::ofstream file(path);
    if (!file) throw Exit{kValidation, "cannot open '" + path + "' for writing"};
    writer(file);
}

// --- coeffs ---------------------------------------------------------------

struct CoeffsCommand {
    ParamOptions params;
    std::string out_path;

    void attach(CLI::App& app)
    {
        params.attach(app);
        app.add_option("--out", out_path, "coefficient file to write")->required();
    }

    int run(std::ostream& out, std::ostream& err) const
    {
        const auto preset = params.resolve("sinc", err);
        const auto coeffs = guarded([&] { return build_coefficients(preset); });
        guarded([&] {
            save_coefficients(out_path, coeffs);
            return 0;
        });
        echo_params(out, coeffs);
        out << "terms=" << coeffs.size() << '\n';
        return kSuccess;
    }
};

// --- scan -----------------------------------------------------------------

struct ScanCommand {
    ParamOptions params;
    std::string coeff_path;
    std::string reference;
    double lo{-kTwoPi};
    double hi{kTwoPi};
    long count{1000};
    std::string out_path;

    void attach(CLI::App& app)
    {
        params.attach(app);
        app.add_option("--coeffs", coeff_path, "coefficient file to read instead of a preset");
        app.add_option("--ref", reference, "sinc | nu-gauss | gauss | rect");
        app.add_option("--lo", lo, "grid start");
        app.add_option("--hi", hi, "grid end");
        app.add_option("--n", count, "grid points (>= 2)");
        app.add_option("--out", out_path, "curve file to write");
    }

    int run(std::ostream& out, std::ostream& err) const
    {
        auto coeffs = guarded([&] {
            if (coeff_path.empty()) return build_coefficients(params.resolve("sinc", err));
            return load_coefficients(coeff_path);
        });
        if (!coeff_path.empty() && params.direction_opt->count()) {
            const auto wanted = parse_direction(params.direction);
            if (!wanted) throw Exit{kValidation, "direction must be forward or inverse"};
            if (*wanted != coeffs.direction()) {
                throw Exit{kIncompatible, "coefficient file direction is " +
                                              std::string(to_string(coeffs.direction())) +
                                              ", requested " + params.direction};
            }
        }

        ReferenceKind ref = default_reference(coeffs.target().kind);
        if (!reference.empty()) {
            const auto parsed = parse_reference_kind(reference);
            if (!parsed) throw Exit{kValidation, "unknown reference '" + reference + "'"};
            ref = *parsed;
        }

        const auto curve = guarded([&] { return error_scan(coeffs, ref, lo, hi, count); });
        if (!out_path.empty()) {
            write_file(out_path, [&](std::ostream& f) { write_curve(f, curve); });
        }
        echo_params(out, coeffs);
        out << "points=" << curve.size() << " reference=" << to_string(ref) << '\n';
        out << "max_abs_diff=" << format_number(curve.max_abs_diff()) << '\n';
        return kSuccess;
    }
};

// --- identity-check -------------------------------------------------------

struct IdentityCommand {
    int m_max{kIdentityMaxOrder};
    int samples{200};
    unsigned long long seed{42};

    void attach(CLI::App& app)
    {
        app.add_option("--m-max", m_max, "check M = 1..m-max (<= 12)");
        app.add_option("--samples", samples, "random t per order");
        app.add_option("--seed", seed, "RNG seed");
    }

    int run(std::ostream& out, std::ostream&) const
    {
        if (m_max < 1 || m_max > kIdentityMaxOrder) {
            throw Exit{kValidation, "--m-max must lie in 1..12"};
        }
        if (samples < 1) throw Exit{kValidation, "--samples must be >= 1"};

        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(-100.0, 100.0);
        double worst = 0;
        for (int m = 1; m <= m_max; ++m) {
            const IdentityOrder order(m);
            double dev = 0;
            for (int i = 0; i < samples; ++i) {
                const double t = dist(rng);
                dev = std::max(dev, std::abs(viete_product(t, order) - cosine_sum(t, order)));
            }
            out << "M=" << m << " max_dev=" << format_number(dev) << '\n';
            worst = std::max(worst, dev);
        }
        out << "max_deviation=" << format_number(worst) << '\n';
        return worst <= kIdentityTolerance ? kSuccess : kPropertyBreach;
    }
};

// --- voigt ----------------------------------------------------------------

struct VoigtCommand {
    ParamOptions params;
    double y{1};
    double lo{-kTwoPi};
    double hi{kTwoPi};
    long count{200};
    double tol{1e-14};
    std::string out_path;

    void attach(CLI::App& app)
    {
        params.attach(app);
        app.add_option("--y", y, "damping y > 0");
        app.add_option("--lo", lo, "first x");
        app.add_option("--hi", hi, "last x");
        app.add_option("--n", count, "number of x points");
        app.add_option("--tol", tol, "reference quadrature tolerance");
        app.add_option("--out", out_path, "curve file to write");
    }

    int run(std::ostream& out, std::ostream& err) const
    {
        if (!(y > 0)) throw Exit{kValidation, "y > 0 violated"};
        if (count < 1) throw Exit{kValidation, "--n must be >= 1"};
        if (count > 1 && !(lo < hi)) {
            throw Exit{kValidation, "voigt range requires lo < hi"};
        }
        const auto preset = params.resolve("voigt", err);
        const auto coeffs = guarded([&] { return build_coefficients(preset); });

        VoigtCurve curve;
        curve.x = linspace(lo, hi, count);
        curve.approx.resize(count);
        curve.reference.resize(count);
        curve.abs_diff.resize(count);
        guarded([&] {
            for (Eigen::Index i = 0; i < count; ++i) {
                const VoigtPoint<double> p{curve.x[i], y};
                curve.approx[i] = voigt_residue(coeffs, p).value;
                curve.reference[i] = voigt_quadrature(p, tol);
                curve.abs_diff[i] = std::abs(curve.approx[i] - curve.reference[i]);
            }
            return 0;
        });
        if (!out_path.empty()) {
            write_file(out_path, [&](std::ostream& f) { write_voigt_curve(f, curve); });
        }
        echo_params(out, coeffs);
        out << "points=" << count << " y=" << format_number(y) << '\n';
        if (count == 1) out << "voigt_approx=" << format_number(curve.approx[0]) << '\n';
        out << "max_abs_diff=" << format_number(curve.max_abs_diff()) << '\n';
        return kSuccess;
    }
};

// --- oracle ---------------------------------------------------------------

struct OracleCommand {
    ParamOptions params;
    std::string mode{"fourier"};
    double shift{0};
    double nu{0};
    double lo{-6};
    double hi{6};
    double tol{1e-12};
    std::string upper{"inf"};

    void attach(CLI::App& app)
    {
        params.attach(app);
        app.add_option("--mode", mode, "fourier | damped");
        app.add_option("--shift", shift, "fourier: evaluate f(t - shift)");
        app.add_option("--nu", nu, "frequency");
        app.add_option("--lo", lo, "fourier: lower limit");
        app.add_option("--hi", hi, "fourier: upper limit");
        app.add_option("--tol", tol, "absolute tolerance");
        app.add_option("--upper", upper, "damped: upper limit, number or inf");
    }

    int run(std::ostream& out, std::ostream& err) const
    {
        const auto preset = params.resolve("sinc", err);
        std::complex<double> value;
        if (mode == "fourier") {
            value = guarded([&] {
                return fourier_forward_quadrature(preset.target, shift, nu,
                                                  QuadratureSpec<double>{lo, hi, tol, 1000000});
            });
        } else if (mode == "damped") {
            double limit = std::numeric_limits<double>::infinity();
            if (upper != "inf") {
                try {
                    limit = std::stod(upper);
                } catch (const std::exception&) {
                    throw Exit{kValidation, "--upper must be a number or inf"};
                }
            }
            value = guarded([&] {
                try {
                    return damped_expansion_quadrature(sample_grid(preset.target, preset.params),
                                                       nu, limit, tol);
                } catch (const DampingError& e) {
                    throw Exit{kValidation, e.what()};
                }
            });
        } else {
            throw Exit{kValidation, "--mode must be fourier or damped"};
        }
        out << "mode=" << mode << " nu=" << format_number(nu) << '\n';
        out << "value_re=" << format_number(value.real()) << '\n';
        out << "value_im=" << format_number(value.imag()) << '\n';
        return kSuccess;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rational approximants of Fourier transforms from damped cosine sampling",
                 "ratfourier"};
    app.require_subcommand(0, 1);
    // --h is the sample step, so help is long-form only.
    app.set_help_flag("--help", "print this help message and exit");

    CoeffsCommand coeffs;
    ScanCommand scan;
    IdentityCommand identity;
    VoigtCommand voigt;
    OracleCommand oracle;
    auto* coeffs_app = app.add_subcommand("coeffs", "compute and save expansion coefficients");
    auto* scan_app = app.add_subcommand("scan", "evaluate an approximant against a reference");
    auto* identity_app =
        app.add_subcommand("identity-check", "check the cosine product-to-sum identity");
    auto* voigt_app = app.add_subcommand("voigt", "Voigt function by residues vs quadrature");
    auto* oracle_app = app.add_subcommand("oracle", "quadrature spot checks");
    coeffs.attach(*coeffs_app);
    scan.attach(*scan_app);
    identity.attach(*identity_app);
    voigt.attach(*voigt_app);
    oracle.attach(*oracle_app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }

    try {
        if (*coeffs_app) return coeffs.run(out, err);
        if (*scan_app) return scan.run(out, err);
        if (*identity_app) return identity.run(out, err);
        if (*voigt_app) return voigt.run(out, err);
        if (*oracle_app) return oracle.run(out, err);
        err << "Missing input parameter! Preset sinc is assigned.\n";
        return scan.run(out, err);
    } catch (const Exit& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kPropertyBreach;
    }
}

}  // namespace ratfourier::cli
