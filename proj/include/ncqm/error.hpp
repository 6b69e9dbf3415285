#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncqm {

enum class ErrorKind {
    DimMismatch,
    CaseMismatch,
    InvalidSpec,
    SingularParameter,
    InconsistentConstants,
    ComplexRoot,
    InconsistentCone,
    RhoZero,
    NonlinearPotential,
    NonConstantRatio,
    InsufficientSamples,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every precondition or numerical-diagnostic failure in the library is
// reported through this one type; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // NonConstantRatio and InsufficientSamples are diagnostics of a broken
    // identity; everything else is a violated precondition.
    bool is_precondition() const noexcept {
        return kind_ != ErrorKind::NonConstantRatio &&
               kind_ != ErrorKind::InsufficientSamples;
    }

private:
    ErrorKind kind_;
};

}  // namespace ncqm
