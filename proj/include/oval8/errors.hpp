#pragma once

#include <stdexcept>
#include <string>

namespace oval8 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Semi-axes violate a >= b > 0 or are not finite.
struct InvalidAxes : Error {
    using Error::Error;
};

/// A geometric step lost validity beyond rounding slack (not expected for
/// valid input; guarded defensively).
struct DegenerateGeometry : Error {
    using Error::Error;
};

/// Iteration cap reached in the elliptic-integral evaluation.
struct NonConvergence : Error {
    using Error::Error;
};

/// Sweep grid would exceed the cell budget.
struct GridTooLarge : Error {
    using Error::Error;
};

/// Sweep ranges or step are unusable.
struct InvalidRange : Error {
    using Error::Error;
};

}  // namespace oval8
