#pragma once

#include <stdexcept>
#include <string>

namespace grassblow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument values (out-of-range indices, bad dimensions, zero scale).
struct ParameterError : Error {
    using Error::Error;
};

// A matrix that must represent a point of G(p,n) is rank-deficient.
struct RankError : Error {
    using Error::Error;
};

// A lattice operation was called with non-normalized parameters.
struct NormalizationRequiredError : Error {
    using Error::Error;
};

// A (regime, side, j) or chart-family combination outside the stated cases.
struct UnsupportedCaseError : Error {
    using Error::Error;
};

// A required denominator minor vanishes; carries the offending index.
struct IndeterminacyError : Error {
    explicit IndeterminacyError(const std::string& what, std::string index)
        : Error(what), offending_index(std::move(index)) {}
    std::string offending_index;
};

// A pivot monomial vanishes during chart-function evaluation.
struct EvaluationDomainError : Error {
    using Error::Error;
};

// The explicit delta scan exhausted its depth without a strict certificate.
struct ConstructionFailureError : Error {
    using Error::Error;
};

}  // namespace grassblow
