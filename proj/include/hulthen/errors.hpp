#pragma once

#include <stdexcept>
#include <string>

namespace hulthen {

/// Requested state is unbound at the given screening; carries the threshold
/// screening below which the state exists.
class NoBoundStateError : public std::domain_error {
public:
    NoBoundStateError(const std::string& what, double delta_max)
        : std::domain_error(what), delta_max_(delta_max) {}
    double delta_max() const { return delta_max_; }

private:
    double delta_max_;
};

/// Wavefunction with eps <= 0 cannot be normalized on (0, inf).
class NotNormalizableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Eigenvalue iteration failed to converge within the configured budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed state label, config key, or file content.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hulthen
