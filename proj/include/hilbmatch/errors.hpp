#pragma once

#include <stdexcept>

namespace hilbmatch {

// Thrown when a family's positivity/ampleness guard fails. The message names
// the violated inequality and the offending values.
struct AmplenessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dims/twists length mismatch in a multiprojective Euler characteristic.
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two routes that must agree exactly disagreed. Always a bug, never user error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// A product was requested with no factors.
struct EmptyProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was asked to enumerate a family it cannot (product ranges).
struct UnsupportedFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hilbmatch
