#pragma once

#include <stdexcept>
#include <string>

namespace petz {

// Base class for all contract violations raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonHermitianError : Error {
    using Error::Error;
};
struct NotPsdError : Error {
    using Error::Error;
};
struct TraceNotOneError : Error {
    using Error::Error;
};
struct DimMismatchError : Error {
    using Error::Error;
};
struct SingularPowerError : Error {
    using Error::Error;
};
struct InvalidStateError : Error {
    using Error::Error;
};
struct InvalidDistributionError : Error {
    using Error::Error;
};
struct HypothesisFailedError : Error {
    using Error::Error;
};
struct SingularSigmaError : Error {
    using Error::Error;
};
struct DivergentSeriesError : Error {
    using Error::Error;
};
struct SummationCapError : Error {
    using Error::Error;
};
struct DomainViolationError : Error {
    using Error::Error;
};
struct UnknownExampleError : Error {
    using Error::Error;
};

}  // namespace petz
