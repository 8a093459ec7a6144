// Validated ellipse axes plus reference perimeter computations: the exact
// value via the complete elliptic integral of the second kind (AGM
// evaluation) and the classical pi*(a+b) estimate.
#pragma once

#include "oval8/errors.hpp"

namespace oval8 {

/// Semi-axes of an ellipse in canonical orientation.  Construction enforces
/// a >= b > 0 with finite values; every other operation in the library
/// relies on that.
struct EllipseSpec {
    double a;  ///< semi-major axis
    double b;  ///< semi-minor axis

    EllipseSpec(double semi_major, double semi_minor);

    bool is_circle() const { return a == b; }
};

/// Result of accepting axes in either order.
struct NormalizedAxes {
    EllipseSpec spec;
    /// True when the inputs arrived as (b, a) and were swapped.  Rendering
    /// uses this to restore the caller's orientation with a quarter turn.
    bool swapped;
};

/// Accepts unordered positive axes and swaps them into canonical order.
/// Throws InvalidAxes for non-positive or non-finite values.
NormalizedAxes normalize_axes(double first, double second);

struct EccentricityData {
    double c;        ///< linear eccentricity sqrt(a^2 - b^2)
    double epsilon;  ///< c / a, in [0, 1)
};

EccentricityData eccentricity(const EllipseSpec& spec);

/// Ellipse perimeter 4a*E(eps) via arithmetic-geometric-mean iteration with
/// the standard correction sum.  Iterates until the half-difference term
/// falls below tol times the current arithmetic iterate; tol must lie in
/// (0, 1e-6].  Throws NonConvergence if 64 iterations do not suffice
/// (unreachable for valid eccentricities).
double elliptic_perimeter(const EllipseSpec& spec, double tol = 1e-12);

/// Kepler's arithmetic-mean estimate pi*(a+b).
double kepler_perimeter(const EllipseSpec& spec);

/// Oval, elliptic-integral, and Kepler perimeters with relative errors
/// against the elliptic reference (as dimensionless fractions).
struct PerimeterReport {
    EllipseSpec spec;
    double oval;
    double elliptic;
    double kepler;
    double rel_err_oval;
    double rel_err_kepler;
};

PerimeterReport compare(const EllipseSpec& spec);

}  // namespace oval8
