#pragma once

#include <stdexcept>

namespace aimspec {

/// Precondition violation: mismatched jet centers, parameters outside their
/// admissible domain, malformed numeric strings, conflicting options.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Evaluation at a pole of a coefficient function (expansion point on a
/// singularity, division by a jet with vanishing constant term).
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A run configuration that cannot produce the requested result, e.g. a
/// derivative budget too small for the requested iteration count.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace aimspec
