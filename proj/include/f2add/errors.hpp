#pragma once

#include <stdexcept>
#include <string>

namespace f2add {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct DimensionTooLarge : Error {
    using Error::Error;
};
struct ZeroFrequency : Error {
    using Error::Error;
};
struct EmptySet : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct BadSpec : Error {
    using Error::Error;
};

// Raised when a quadruple handed to the extractor is not flat at the
// requested level; carries the violating frequency.
struct PreconditionNotFlat : Error {
    unsigned witness;
    PreconditionNotFlat(const std::string& what, unsigned xi) : Error(what), witness(xi) {}
};
struct PreconditionLowEnergy : Error {
    using Error::Error;
};

// The following indicate implementation faults, not input conditions: the
// underlying inequalities are guaranteed whenever the preconditions hold.
struct SubspaceClosureViolation : Error {
    using Error::Error;
};
struct CertificateViolation : Error {
    using Error::Error;
};
struct DecrementUnavailable : Error {
    using Error::Error;
};
struct IncrementUnavailable : Error {
    using Error::Error;
};
struct EmptySlices : Error {
    using Error::Error;
};
struct IterationBudgetExceeded : Error {
    using Error::Error;
};

}  // namespace f2add
