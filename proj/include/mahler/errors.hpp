#ifndef MAHLER_ERRORS_HPP
#define MAHLER_ERRORS_HPP

#include <stdexcept>

namespace mahler {

// Input violates a precondition (malformed text, non-monic polynomial where
// monic is required, out-of-range argument, ...). CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root certification failed at the maximum configured working precision.
// Signals ill-conditioned input. CLI exit code 3.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mahler

#endif
