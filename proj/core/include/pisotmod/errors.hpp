#ifndef PISOTMOD_ERRORS_HPP
#define PISOTMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pisotmod {

/// A precondition on the input was violated (bad polynomial, modulus
/// mismatch, non-monic divisor, ...).
struct InvalidInputError : std::invalid_argument {
    explicit InvalidInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input is structurally fine but outside the supported desk-scale range
/// (degree > 8, coefficients beyond 64 bits, modulus beyond word size).
struct UnsupportedInputError : std::invalid_argument {
    explicit UnsupportedInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Exact root counting could not separate a root from the unit circle.
struct BoundaryRootError : std::runtime_error {
    explicit BoundaryRootError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured budget (orbit states, trial-division bound, ...) was
/// exceeded. `partial` carries whatever was computed before giving up.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg, std::string partial_data = {})
        : std::runtime_error(msg), partial(std::move(partial_data)) {}
    std::string partial;
};

} // namespace pisotmod

#endif
