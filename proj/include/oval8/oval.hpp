// Eight-centered oval approximation of an ellipse: Honey's construction of
// the three circle centers, the central angles of the three arcs, the full
// closed arc path, and the oval perimeter.
#pragma once

#include <array>

#include "oval8/ellipse.hpp"
#include "oval8/geometry.hpp"

namespace oval8 {

/// Everything the construction produces for one quadrant.  The three arc
/// circles osculate the ellipse at its vertices; the intermediate center is
/// found by intersecting two auxiliary circles.  Mirror symmetry extends the
/// quarter to the full eight-centered oval.
struct OvalConstruction {
    EllipseSpec spec;

    double minor_radius;         ///< b^2/a, curvature radius at (a, 0)
    double major_radius;         ///< a^2/b, curvature radius at (0, b)
    double intermediate_radius;  ///< (a + b)/2, arithmetic mean of the axes

    Vec2 minor_center;         ///< e, on the +x axis
    Vec2 major_center;         ///< g, on the -y axis
    Vec2 intermediate_center;  ///< k, auxiliary-circle intersection

    double aux_minor_radius;  ///< |ek| = intermediate_radius - minor_radius
    double aux_major_radius;  ///< |gk| = major_radius - intermediate_radius
    double center_distance;   ///< |ge|, hypotenuse of the right triangle (g,e,origin)

    double gamma;  ///< central angle of the major arc (at g)
    double beta;   ///< central angle of the intermediate arc (at k)
    double delta;  ///< central angle of the minor arc (at e)

    Vec2 junction_major;  ///< tangency point of major and intermediate arcs
    Vec2 junction_minor;  ///< tangency point of intermediate and minor arcs

    bool degenerate() const { return spec.is_circle(); }
};

/// Builds the construction.  For a == b all three centers coincide at the
/// origin and the auxiliary radii vanish (degenerate circle case).
/// Throws InvalidAxes via EllipseSpec; DegenerateGeometry if the auxiliary
/// circles fail to intersect beyond rounding slack (not reachable for valid
/// axes, guarded defensively).
OvalConstruction construct(const EllipseSpec& spec);

/// The three closed-form sine expressions of the central angles.
struct CentralSines {
    double sin_gamma;
    double sin_beta;
    double sin_delta;
};

CentralSines central_sines(const EllipseSpec& spec);

struct CentralAngles {
    double gamma;
    double beta;
    double delta;
};

/// Central angles from the closed-form sines; each lies in (0, pi/2] and
/// they sum to pi/2.
CentralAngles central_angles(const EllipseSpec& spec);

/// Intermediate angles of the two triangles used by the coordinate-geometric
/// derivation: (g,e,k) solved with cosine/sine laws and the right triangle
/// (g,e,origin).  beta_interior and theta_prime are measured directly from
/// coordinates, so the angle-sum identities are genuine cross-checks.
struct TriangleDiagnostics {
    double alpha_prime;    ///< at g in triangle (g,e,k), cosine law
    double alpha;          ///< at e in triangle (g,e,k), sine law
    double beta_interior;  ///< at k in triangle (g,e,k), measured
    double theta;          ///< at g in right triangle (g,e,origin)
    double theta_prime;    ///< at e in right triangle (g,e,origin), measured
    bool degenerate;       ///< true when a == b: the triangle collapses
};

struct GeometricAngles {
    double gamma;
    double beta;
    double delta;
    TriangleDiagnostics diagnostics;
};

/// Re-derives the central angles purely from the constructed coordinates:
/// gamma at g between the directions toward (0, b) and the major junction,
/// delta at e between (a, 0) and the minor junction, beta at k between the
/// two junctions.  Serves as an independent route against central_angles.
/// For a == b returns the closed-form split with the diagnostics flagged
/// degenerate (the triangle angles are undefined).
GeometricAngles angles_geometric(const OvalConstruction& c);

/// One circular arc of the oval.  Angles are radians from the +x axis;
/// positive sweep is counterclockwise.  The defining evaluation rule is
/// point_at: center + radius * (cos, sin) of (start + u * sweep).
struct Arc {
    Vec2 center;
    double radius;
    double start;
    double sweep;

    Vec2 point_at(double u) const {
        const double t = start + u * sweep;
        return {center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
    }
    Vec2 start_point() const { return point_at(0.0); }
    Vec2 endpoint() const { return point_at(1.0); }

    double length() const { return radius * std::fabs(sweep); }
};

/// The quarter decomposition (first quadrant, traversed from (0, b) down to
/// (a, 0)) and the closed full path of 8 arcs traversed counterclockwise.
struct OvalPath {
    std::array<Arc, 3> quarter;  ///< major, intermediate, minor
    std::array<Arc, 8> arcs;     ///< closed, endpoint-continuous
};

OvalPath full_oval(const OvalConstruction& c);

/// Perimeter of the eight-centered oval:
/// 4 * (gamma * a^2/b + beta * (a+b)/2 + delta * b^2/a).
double oval_perimeter(const EllipseSpec& spec);

namespace detail {
/// arcsin with the rounding guard: arguments within 1e-12 of [-1, 1] are
/// clamped; larger excursions raise DegenerateGeometry.
double asin_guarded(double s);
}  // namespace detail

}  // namespace oval8
