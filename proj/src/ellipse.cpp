#include "oval8/ellipse.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oval8/geometry.hpp"
#include "oval8/oval.hpp"

namespace oval8 {

EllipseSpec::EllipseSpec(double semi_major, double semi_minor) : a(semi_major), b(semi_minor) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidAxes("semi-axes must be finite (non-NaN) values");
    }
    if (a <= 0.0 || b <= 0.0) {
        std::ostringstream msg;
        msg << "semi-axes must be positive (got a = " << a << ", b = " << b << ")";
        throw InvalidAxes(msg.str());
    }
    if (a < b) {
        std::ostringstream msg;
        msg << "canonical orientation requires a >= b (got a = " << a << ", b = " << b << ")";
        throw InvalidAxes(msg.str());
    }
}

NormalizedAxes normalize_axes(double first, double second) {
    if (!std::isfinite(first) || !std::isfinite(second)) {
        throw InvalidAxes("semi-axes must be finite (non-NaN) values");
    }
    if (first <= 0.0 || second <= 0.0) {
        std::ostringstream msg;
        msg << "semi-axes must be positive (got " << first << ", " << second << ")";
        throw InvalidAxes(msg.str());
    }
    if (first < second) {
        return {EllipseSpec(second, first), true};
    }
    return {EllipseSpec(first, second), false};
}

EccentricityData eccentricity(const EllipseSpec& spec) {
    // (a-b)(a+b) avoids the cancellation of a^2 - b^2 for near-circles.
    const double c = std::sqrt((spec.a - spec.b) * (spec.a + spec.b));
    return {c, c / spec.a};
}

double elliptic_perimeter(const EllipseSpec& spec, double tol) {
    if (!(tol > 0.0) || tol > 1e-6) {
        throw std::invalid_argument("elliptic_perimeter: tol must lie in (0, 1e-6]");
    }

    // 4a * E(eps) with E from the AGM: a_0 = 1, g_0 = b/a, and
    // E = K * (1 - sum_n 2^(n-1) c_n^2) where c_0 = eps and
    // c_n = (a_(n-1) - g_(n-1))/2.  Quadratic convergence.
    const double ratio = spec.b / spec.a;
    const double m = (1.0 - ratio) * (1.0 + ratio);  // eps^2

    double x = 1.0;
    double y = ratio;
    double sum = 0.5 * m;
    double weight = 0.5;  // 2^(n-1)

    int iterations = 0;
    while (true) {
        const double c = 0.5 * (x - y);
        if (c < tol * x) {
            // Converged: fold in the last correction term and finish the
            // mean, which squares the remaining error away.
            weight *= 2.0;
            sum += weight * c * c;
            x = 0.5 * (x + y);
            break;
        }
        if (++iterations > 64) {
            throw NonConvergence("elliptic_perimeter: AGM did not converge in 64 iterations");
        }
        const double xn = 0.5 * (x + y);
        y = std::sqrt(x * y);
        x = xn;
        weight *= 2.0;
        sum += weight * c * c;
    }

    const double complete_first = kPi / (2.0 * x);        // K(eps)
    const double complete_second = complete_first * (1.0 - sum);  // E(eps)
    return 4.0 * spec.a * complete_second;
}

double kepler_perimeter(const EllipseSpec& spec) { return kPi * (spec.a + spec.b); }

PerimeterReport compare(const EllipseSpec& spec) {
    const double oval = oval_perimeter(spec);
    const double elliptic = elliptic_perimeter(spec);
    const double kepler = kepler_perimeter(spec);
    return {spec,
            oval,
            elliptic,
            kepler,
            std::fabs(oval - elliptic) / elliptic,
            std::fabs(kepler - elliptic) / elliptic};
}

}  // namespace oval8
