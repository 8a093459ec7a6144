#include "oval8/oval.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace oval8 {

namespace detail {

double asin_guarded(double s) {
    constexpr double slack = 1e-12;
    if (s > 1.0) {
        if (s > 1.0 + slack) {
            std::ostringstream msg;
            msg << "arcsine argument " << s << " exceeds 1 beyond rounding slack";
            throw DegenerateGeometry(msg.str());
        }
        s = 1.0;
    } else if (s < -1.0) {
        if (s < -1.0 - slack) {
            std::ostringstream msg;
            msg << "arcsine argument " << s << " is below -1 beyond rounding slack";
            throw DegenerateGeometry(msg.str());
        }
        s = -1.0;
    }
    return std::asin(s);
}

}  // namespace detail

CentralSines central_sines(const EllipseSpec& spec) {
    const double a = spec.a;
    const double b = spec.b;
    const double s = std::sqrt(2.0 * a * b);
    return {
        b / (2.0 * a + b) * (2.0 * a + b + s) / (a + b + s),
        2.0 * (a + b) * s / ((a + 2.0 * b) * (2.0 * a + b)),
        a / (a + 2.0 * b) * (a + 2.0 * b + s) / (a + b + s),
    };
}

CentralAngles central_angles(const EllipseSpec& spec) {
    const CentralSines sines = central_sines(spec);
    return {
        detail::asin_guarded(sines.sin_gamma),
        detail::asin_guarded(sines.sin_beta),
        detail::asin_guarded(sines.sin_delta),
    };
}

double oval_perimeter(const EllipseSpec& spec) {
    const CentralAngles angles = central_angles(spec);
    return 4.0 * (angles.gamma * spec.a * spec.a / spec.b +
                  angles.beta * 0.5 * (spec.a + spec.b) +
                  angles.delta * spec.b * spec.b / spec.a);
}

namespace {

/// Intersection of circle(c0, r0) and circle(c1, r1) on the same side of the
/// line (c0, c1) as the origin.  Centers must be distinct.
Vec2 intersect_toward_origin(Vec2 c0, double r0, Vec2 c1, double r1) {
    const Vec2 span = c1 - c0;
    const double d = norm(span);
    const double along = (r0 * r0 - r1 * r1 + d * d) / (2.0 * d);
    double h_sq = r0 * r0 - along * along;
    if (h_sq < 0.0) {
        if (h_sq < -1e-12 * r0 * r0) {
            throw DegenerateGeometry("auxiliary circles do not intersect");
        }
        h_sq = 0.0;
    }
    const double h = std::sqrt(h_sq);
    const Vec2 foot = c0 + (along / d) * span;
    const Vec2 offset = (h / d) * perp(span);

    const Vec2 p1 = foot + offset;
    const Vec2 p2 = foot - offset;
    // Side of the chord line through c0 and c1, compared with the origin.
    const double origin_side = cross(span, -c0);
    return cross(span, p1 - c0) * origin_side >= 0.0 ? p1 : p2;
}

}  // namespace

OvalConstruction construct(const EllipseSpec& spec) {
    const double a = spec.a;
    const double b = spec.b;

    OvalConstruction c{spec,
                       /*minor_radius=*/b * b / a,
                       /*major_radius=*/a * a / b,
                       /*intermediate_radius=*/0.5 * (a + b),
                       /*minor_center=*/{a - b * b / a, 0.0},
                       /*major_center=*/{0.0, b - a * a / b},
                       /*intermediate_center=*/{0.0, 0.0},
                       /*aux_minor_radius=*/0.0,
                       /*aux_major_radius=*/0.0,
                       /*center_distance=*/0.0,
                       /*gamma=*/0.0,
                       /*beta=*/0.0,
                       /*delta=*/0.0,
                       /*junction_major=*/{0.0, 0.0},
                       /*junction_minor=*/{0.0, 0.0}};

    c.aux_minor_radius = c.intermediate_radius - c.minor_radius;
    c.aux_major_radius = c.major_radius - c.intermediate_radius;
    c.center_distance = std::hypot(c.minor_center.x, c.major_center.y);

    const CentralAngles angles = central_angles(spec);
    c.gamma = angles.gamma;
    c.beta = angles.beta;
    c.delta = angles.delta;

    if (spec.is_circle()) {
        // Centers collapse to the origin; the junctions still split the
        // quarter circle at the closed-form angles.
        c.minor_center = {0.0, 0.0};
        c.major_center = {0.0, 0.0};
        const double rho = a;
        c.junction_minor = {rho * std::cos(c.delta), rho * std::sin(c.delta)};
        const double at = kHalfPi - c.gamma;
        c.junction_major = {rho * std::cos(at), rho * std::sin(at)};
        return c;
    }

    c.intermediate_center = intersect_toward_origin(c.minor_center, c.aux_minor_radius,
                                                    c.major_center, c.aux_major_radius);

    // Internal tangency: each junction lies on the line of the two centers.
    c.junction_minor =
        c.minor_center + c.minor_radius * unit(c.minor_center - c.intermediate_center);
    c.junction_major =
        c.major_center + c.major_radius * unit(c.intermediate_center - c.major_center);
    return c;
}

GeometricAngles angles_geometric(const OvalConstruction& c) {
    if (c.degenerate()) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        return {c.gamma, c.beta, c.delta, {nan, nan, nan, nan, nan, true}};
    }

    const Vec2 e = c.minor_center;
    const Vec2 g = c.major_center;
    const Vec2 k = c.intermediate_center;
    const double a = c.spec.a;
    const double b = c.spec.b;

    // Central angles straight from the coordinates.
    const double gamma = angle_between(Vec2{0.0, b} - g, c.junction_major - g);
    const double delta = angle_between(Vec2{a, 0.0} - e, c.junction_minor - e);
    const double beta = angle_between(c.junction_major - k, c.junction_minor - k);

    // Triangle (g,e,k): alpha' at g by cosine law, alpha at e by sine law,
    // the angle at k measured directly.
    const double ge = distance(g, e);
    const double gk = distance(g, k);
    const double ek = distance(e, k);
    const double cos_alpha_prime = (ge * ge + gk * gk - ek * ek) / (2.0 * ge * gk);
    const double alpha_prime = std::acos(cos_alpha_prime);
    const double alpha = detail::asin_guarded(gk * std::sin(alpha_prime) / ek);
    const double beta_interior = angle_between(g - k, e - k);

    // Right triangle (g,e,origin): theta at g from the metric relation,
    // theta' at e measured directly.
    const double theta = detail::asin_guarded(e.x / ge);
    const double theta_prime = angle_between(g - e, -e);

    return {gamma, beta, delta, {alpha_prime, alpha, beta_interior, theta, theta_prime, false}};
}

OvalPath full_oval(const OvalConstruction& c) {
    const Vec2 e = c.minor_center;
    const Vec2 g = c.major_center;
    const Vec2 k = c.intermediate_center;
    const double r = c.minor_radius;
    const double R = c.major_radius;
    const double p = c.intermediate_radius;
    const double gamma = c.gamma;
    const double beta = c.beta;
    const double delta = c.delta;

    OvalPath path;

    // Quarter: from (0, b) clockwise down to (a, 0).
    path.quarter = {{
        {g, R, kHalfPi, -gamma},
        {k, p, kHalfPi - gamma, -beta},
        {e, r, delta, -delta},
    }};

    // Full oval counterclockwise, starting at the fourth-quadrant junction
    // of the minor and intermediate arcs.  Mirrors of the quadrant-one
    // centers cover the other quadrants.
    path.arcs = {{
        {e, r, -delta, 2.0 * delta},
        {k, p, delta, beta},
        {g, R, kHalfPi - gamma, 2.0 * gamma},
        {{-k.x, k.y}, p, kHalfPi + gamma, beta},
        {{-e.x, e.y}, r, kPi - delta, 2.0 * delta},
        {{-k.x, -k.y}, p, kPi + delta, beta},
        {{g.x, -g.y}, R, 1.5 * kPi - gamma, 2.0 * gamma},
        {{k.x, -k.y}, p, 1.5 * kPi + gamma, beta},
    }};

    return path;
}

}  // namespace oval8
