#include "ncqm/error.hpp"

namespace ncqm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimMismatch: return "dim-mismatch";
        case ErrorKind::CaseMismatch: return "case-mismatch";
        case ErrorKind::InvalidSpec: return "invalid-spec";
        case ErrorKind::SingularParameter: return "singular-parameter";
        case ErrorKind::InconsistentConstants: return "inconsistent-constants";
        case ErrorKind::ComplexRoot: return "complex-root";
        case ErrorKind::InconsistentCone: return "inconsistent-cone";
        case ErrorKind::RhoZero: return "rho-zero";
        case ErrorKind::NonlinearPotential: return "nonlinear-potential";
        case ErrorKind::NonConstantRatio: return "non-constant-ratio";
        case ErrorKind::InsufficientSamples: return "insufficient-samples";
    }
    return "unknown";
}

}  // namespace ncqm
