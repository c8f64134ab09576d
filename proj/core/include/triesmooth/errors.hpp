#pragma once

#include <stdexcept>
#include <string>

namespace triesmooth {

/// A PFA could not be reduced to star-like canonical form.
class ConversionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A distributional hypothesis of the requested quantity does not hold
/// (e.g. the PFA is not read-semi-deterministic).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact enumeration would exceed the configured string-count cap.
class EnumerationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite input string ran out before the sampler was done with it.
class InputUnderrunError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root refinement failed to reach tolerance; carries the best bracket seen.
class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}

    double bracket_lo() const { return lo_; }
    double bracket_hi() const { return hi_; }

private:
    double lo_;
    double hi_;
};

}  // namespace triesmooth
