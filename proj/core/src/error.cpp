#include "osculate/error.hpp"

namespace osc {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::FlatPoint: return "flat_point";
    case ErrorKind::DegenerateFamily: return "degenerate_family";
    case ErrorKind::DegenerateOsculation: return "degenerate_osculation";
    case ErrorKind::IdenticalConic: return "identical_conic";
    case ErrorKind::IdenticalMap: return "identical_map";
    case ErrorKind::InvalidOval: return "invalid_oval";
    case ErrorKind::BboxTooSmall: return "bbox_too_small";
    case ErrorKind::InvalidSpec: return "invalid_spec";
    case ErrorKind::VerificationFailed: return "verification_failed";
    }
    return "unknown";
}

} // namespace osc
