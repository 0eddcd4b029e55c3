#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobhh {

enum class ErrorKind {
    NotPrime,
    NoRoot,
    DimensionMismatch,
    NoSolution,
    NotInvertible,
    CapExceeded,
    BadStructure,
    BadRoot,
    NotPrimitivePower,
    NotFrobeniusWithinAttempts,
    InconsistentSystem,
    HypothesisFailure,
    NotStronglyGraded,
    DegreeTooLarge,
    NoIntegral,
    IntegralSpaceNotOneDim,
    InconsistentModular,
    ConventionMismatch,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. `module()` names the
// subsystem that raised it so the CLI can surface provenance.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string module, const std::string& what)
        : std::runtime_error(what), kind_(kind), module_(std::move(module))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& module() const noexcept { return module_; }

private:
    ErrorKind kind_;
    std::string module_;
};

}  // namespace frobhh
