#include <optional>
#include <string_view>

#include "ratfourier/coefficients.hpp"
#include "ratfourier/targets.hpp"

namespace ratfourier {

std::string_view to_string(TargetKind kind)
{
    switch (kind) {
    case TargetKind::RectSurrogate: return "rect-surrogate";
    case TargetKind::RectSurrogateGaussianAlt: return "rect-surrogate-gauss";
    case TargetKind::GaussianDerivative: return "gauss-derivative";
    case TargetKind::Gaussian: return "gauss";
    }
    return "unknown";
}

std::optional<TargetKind> parse_target_kind(std::string_view name)
{
    if (name == "rect-surrogate") return TargetKind::RectSurrogate;
    if (name == "rect-surrogate-gauss") return TargetKind::RectSurrogateGaussianAlt;
    if (name == "gauss-derivative") return TargetKind::GaussianDerivative;
    if (name == "gauss") return TargetKind::Gaussian;
    return std::nullopt;
}

std::string_view to_string(ReferenceKind kind)
{
    switch (kind) {
    case ReferenceKind::Sinc: return "sinc";
    case ReferenceKind::NuGauss: return "nu-gauss";
    case ReferenceKind::Gauss: return "gauss";
    case ReferenceKind::Rect: return "rect";
    }
    return "unknown";
}

std::optional<ReferenceKind> parse_reference_kind(std::string_view name)
{
    if (name == "sinc") return ReferenceKind::Sinc;
    if (name == "nu-gauss") return ReferenceKind::NuGauss;
    if (name == "gauss") return ReferenceKind::Gauss;
    if (name == "rect") return ReferenceKind::Rect;
    return std::nullopt;
}

std::string_view to_string(Direction direction)
{
    return direction == Direction::Forward ? "forward" : "inverse";
}

std::optional<Direction> parse_direction(std::string_view name)
{
    if (name == "forward") return Direction::Forward;
    if (name == "inverse") return Direction::Inverse;
    return std::nullopt;
}

}  // namespace ratfourier
