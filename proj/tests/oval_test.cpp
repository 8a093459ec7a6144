#include <doctest.h>

#include <cmath>
#include <random>

#include "oval8/oval.hpp"
#include "support/circle_oracle.hpp"
#include "support/random_specs.hpp"

using namespace oval8;

namespace {

// The boxed closed-form sine expressions, transcribed independently here so
// the library implementation is checked against the text and the symmetry
// properties can be evaluated with swapped arguments.
double sin_gamma_expr(double a, double b) {
    const double s = std::sqrt(2.0 * a * b);
    return b / (2.0 * a + b) * (2.0 * a + b + s) / (a + b + s);
}
double sin_beta_expr(double a, double b) {
    const double s = std::sqrt(2.0 * a * b);
    return 2.0 * (a + b) * s / ((a + 2.0 * b) * (2.0 * a + b));
}
double sin_delta_expr(double a, double b) {
    const double s = std::sqrt(2.0 * a * b);
    return a / (a + 2.0 * b) * (a + 2.0 * b + s) / (a + b + s);
}

// Frozen from the high-precision oracle run.
constexpr double kColosseumGamma = 0.39767667221917238;
constexpr double kColosseumBeta = 0.67694712015328004;
constexpr double kColosseumDelta = 0.49617253442244419;
constexpr double kColosseumOval = 541.5242281399999;
constexpr double kSmallOval = 9.688714617679521;

void check_construction_invariants(const OvalConstruction& c) {
    const double a = c.spec.a;
    CHECK(std::fabs(distance(c.minor_center, c.intermediate_center) - c.aux_minor_radius) <=
          1e-12 * a);
    CHECK(std::fabs(distance(c.major_center, c.intermediate_center) - c.aux_major_radius) <=
          1e-12 * a);

    // Hypotenuse squared against its closed form.
    const double b = c.spec.b;
    const double expected_sq =
        (a * a + b * b) * (a * a - b * b) * (a * a - b * b) / (a * a * b * b);
    if (expected_sq == 0.0) {
        CHECK(c.center_distance == 0.0);
    } else {
        CHECK(c.center_distance * c.center_distance ==
              doctest::Approx(expected_sq).epsilon(1e-12));
    }

    CHECK(std::fabs(c.gamma + c.beta + c.delta - kHalfPi) <= 1e-10);

    // Internal tangency: both distance conditions per junction.
    CHECK(std::fabs(distance(c.junction_minor, c.minor_center) - c.minor_radius) <= 1e-9 * a);
    CHECK(std::fabs(distance(c.junction_minor, c.intermediate_center) - c.intermediate_radius) <=
          1e-9 * a);
    CHECK(std::fabs(distance(c.junction_major, c.major_center) - c.major_radius) <= 1e-9 * a);
    CHECK(std::fabs(distance(c.junction_major, c.intermediate_center) - c.intermediate_radius) <=
          1e-9 * a);

    if (!c.degenerate()) {
        // Collinearity of (e, k, j_minor) and (g, k, j_major).
        CHECK(angle_between(c.junction_minor - c.minor_center,
                            c.minor_center - c.intermediate_center) <= 1e-10);
        CHECK(angle_between(c.junction_major - c.major_center,
                            c.intermediate_center - c.major_center) <= 1e-10);
    }
}

}  // namespace

TEST_CASE("construct: Colosseum axes") {
    const OvalConstruction c = construct(EllipseSpec(94.0, 78.0));

    CHECK(c.minor_radius == doctest::Approx(64.72340425531915).epsilon(1e-15));
    CHECK(c.major_radius == doctest::Approx(113.28205128205128).epsilon(1e-15));
    CHECK(c.intermediate_radius == 86.0);
    CHECK(c.minor_center.x == doctest::Approx(29.276595744680851).epsilon(1e-15));
    CHECK(c.minor_center.y == 0.0);
    CHECK(c.major_center.x == 0.0);
    CHECK(c.major_center.y == doctest::Approx(-35.282051282051282).epsilon(1e-15));
    CHECK(c.aux_minor_radius == doctest::Approx(21.276595744680851).epsilon(1e-14));
    CHECK(c.aux_major_radius == doctest::Approx(27.282051282051282).epsilon(1e-14));

    // The intermediate center against the independent radical-line oracle.
    const auto oracle = testsup::circle_circle_toward_origin(
        {c.minor_center.x, c.minor_center.y}, c.aux_minor_radius,
        {c.major_center.x, c.major_center.y}, c.aux_major_radius);
    REQUIRE(oracle.has_value());
    CHECK(std::fabs(c.intermediate_center.x - oracle->x) <= 1e-12 * 94.0);
    CHECK(std::fabs(c.intermediate_center.y - oracle->y) <= 1e-12 * 94.0);
    CHECK(c.intermediate_center.x == doctest::Approx(10.565720976717483).epsilon(1e-11));
    CHECK(c.intermediate_center.y == doctest::Approx(-10.129002512595358).epsilon(1e-11));

    CHECK(c.junction_minor.x == doctest::Approx(86.195076788825416).epsilon(1e-11));
    CHECK(c.junction_minor.y == doctest::Approx(30.812425643315080).epsilon(1e-11));
    CHECK(c.junction_major.x == doctest::Approx(43.871574506708497).epsilon(1e-11));
    CHECK(c.junction_major.y == doctest::Approx(69.159837311422657).epsilon(1e-11));

    check_construction_invariants(c);
}

TEST_CASE("construct: (2, 1) comes out in exact rationals") {
    const OvalConstruction c = construct(EllipseSpec(2.0, 1.0));

    CHECK(c.minor_radius == 0.5);
    CHECK(c.major_radius == 4.0);
    CHECK(c.intermediate_radius == 1.5);
    CHECK(c.minor_center.x == 1.5);
    CHECK(c.major_center.y == -3.0);

    const auto oracle = testsup::circle_circle_toward_origin({1.5, 0.0}, 1.0, {0.0, -3.0}, 2.5);
    REQUIRE(oracle.has_value());
    CHECK(std::fabs(c.intermediate_center.x - oracle->x) <= 1e-13);
    CHECK(std::fabs(c.intermediate_center.y - oracle->y) <= 1e-13);
    CHECK(c.intermediate_center.x == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(c.intermediate_center.y == doctest::Approx(-0.6).epsilon(1e-13));

    CHECK(c.junction_minor.x == doctest::Approx(1.9).epsilon(1e-13));
    CHECK(c.junction_minor.y == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(c.junction_major.x == doctest::Approx(1.12).epsilon(1e-13));
    CHECK(c.junction_major.y == doctest::Approx(0.84).epsilon(1e-13));

    check_construction_invariants(c);
}

TEST_CASE("construct: degenerate circle") {
    for (const double rho : {1.0, 7.3}) {
        const OvalConstruction c = construct(EllipseSpec(rho, rho));
        CHECK(c.minor_radius == rho);
        CHECK(c.major_radius == rho);
        CHECK(c.intermediate_radius == rho);
        CHECK(c.minor_center.x == 0.0);
        CHECK(c.minor_center.y == 0.0);
        CHECK(c.major_center.x == 0.0);
        CHECK(c.major_center.y == 0.0);
        CHECK(c.intermediate_center.x == 0.0);
        CHECK(c.intermediate_center.y == 0.0);
        CHECK(c.aux_minor_radius == 0.0);
        CHECK(c.aux_major_radius == 0.0);
        CHECK(c.degenerate());
        check_construction_invariants(c);
    }
}

TEST_CASE("construct: random specs satisfy every invariant") {
    for (const EllipseSpec& spec : testsup::random_specs(31337u, 200)) {
        check_construction_invariants(construct(spec));
    }
}

TEST_CASE("central sines: exact small case and circle case") {
    const CentralSines small = central_sines(EllipseSpec(2.0, 1.0));
    CHECK(std::fabs(small.sin_gamma - 0.28) <= 1e-14);
    CHECK(std::fabs(small.sin_beta - 0.6) <= 1e-14);
    CHECK(std::fabs(small.sin_delta - 0.6) <= 1e-14);

    for (const double rho : {1.0, 42.0}) {
        const CentralSines sines = central_sines(EllipseSpec(rho, rho));
        const double expected_side = (4.0 - std::sqrt(2.0)) / 6.0;
        const double expected_mid = 4.0 * std::sqrt(2.0) / 9.0;
        CHECK(std::fabs(sines.sin_gamma - expected_side) <= 1e-14);
        CHECK(std::fabs(sines.sin_beta - expected_mid) <= 1e-14);
        CHECK(std::fabs(sines.sin_delta - expected_side) <= 1e-14);
    }

    // The arcsine-addition steps behind the circle reduction: doubling the
    // side angle gives arcsin(7/9), and that plus the middle angle is pi/2.
    const double side_angle = std::asin((4.0 - std::sqrt(2.0)) / 6.0);
    const double mid_angle = std::asin(4.0 * std::sqrt(2.0) / 9.0);
    CHECK(std::fabs(2.0 * side_angle - std::asin(7.0 / 9.0)) <= 1e-15);
    CHECK(std::fabs(std::asin(7.0 / 9.0) + mid_angle - kHalfPi) <= 1e-15);
}

TEST_CASE("central angles: golden values") {
    const CentralAngles small = central_angles(EllipseSpec(2.0, 1.0));
    CHECK(small.gamma == doctest::Approx(0.28379410920832785).epsilon(1e-13));
    CHECK(small.beta == doctest::Approx(0.64350110879328439).epsilon(1e-13));
    CHECK(small.delta == doctest::Approx(0.64350110879328439).epsilon(1e-13));
    CHECK(std::fabs(small.gamma + small.beta + small.delta - kHalfPi) <= 1e-10);

    const CentralAngles colosseum = central_angles(EllipseSpec(94.0, 78.0));
    CHECK(colosseum.gamma == doctest::Approx(kColosseumGamma).epsilon(1e-12));
    CHECK(colosseum.beta == doctest::Approx(kColosseumBeta).epsilon(1e-12));
    CHECK(colosseum.delta == doctest::Approx(kColosseumDelta).epsilon(1e-12));
}

TEST_CASE("central angles: properties over 1000 random specs") {
    for (const EllipseSpec& spec : testsup::random_specs(4242u, 1000)) {
        const CentralSines sines = central_sines(spec);
        const CentralAngles angles = central_angles(spec);

        // Angle sum and range.
        CHECK(std::fabs(angles.gamma + angles.beta + angles.delta - kHalfPi) <= 1e-10);
        CHECK(angles.gamma > 0.0);
        CHECK(angles.beta > 0.0);
        CHECK(angles.delta > 0.0);
        CHECK(angles.gamma <= kHalfPi);
        CHECK(angles.beta <= kHalfPi);
        CHECK(angles.delta <= kHalfPi);

        // All sine expressions stay in (0, 1].
        CHECK(sines.sin_gamma > 0.0);
        CHECK(sines.sin_gamma <= 1.0);
        CHECK(sines.sin_beta > 0.0);
        CHECK(sines.sin_beta <= 1.0);
        CHECK(sines.sin_delta > 0.0);
        CHECK(sines.sin_delta <= 1.0);

        // Transcription check against the test-local expressions.
        CHECK(sines.sin_gamma == sin_gamma_expr(spec.a, spec.b));
        CHECK(sines.sin_beta == sin_beta_expr(spec.a, spec.b));
        CHECK(sines.sin_delta == sin_delta_expr(spec.a, spec.b));

        // Symmetry: gamma's expression at (a, b) is delta's at (b, a), and
        // beta's expression is invariant under the swap.
        CHECK(std::fabs(sines.sin_gamma - sin_delta_expr(spec.b, spec.a)) <= 1e-14);
        CHECK(std::fabs(sines.sin_delta - sin_gamma_expr(spec.b, spec.a)) <= 1e-14);
        CHECK(std::fabs(sines.sin_beta - sin_beta_expr(spec.b, spec.a)) <= 1e-14);
    }
}

TEST_CASE("angles_geometric: mutual oracle with the closed forms") {
    for (const EllipseSpec& spec :
         {EllipseSpec(94.0, 78.0), EllipseSpec(2.0, 1.0), EllipseSpec(10.0, 9.99)}) {
        const OvalConstruction c = construct(spec);
        const GeometricAngles geo = angles_geometric(c);
        CHECK(std::fabs(geo.gamma - c.gamma) <= 1e-10);
        CHECK(std::fabs(geo.beta - c.beta) <= 1e-10);
        CHECK(std::fabs(geo.delta - c.delta) <= 1e-10);
        CHECK_FALSE(geo.diagnostics.degenerate);
    }

    for (const EllipseSpec& spec : testsup::random_specs(77777u, 1000, 1.0, 100.0, true)) {
        const OvalConstruction c = construct(spec);
        const GeometricAngles geo = angles_geometric(c);
        CHECK(std::fabs(geo.gamma - c.gamma) <= 1e-10);
        CHECK(std::fabs(geo.beta - c.beta) <= 1e-10);
        CHECK(std::fabs(geo.delta - c.delta) <= 1e-10);

        // Triangle angle sums hold with the measured angles.
        const TriangleDiagnostics& diag = geo.diagnostics;
        CHECK(std::fabs(diag.alpha + diag.alpha_prime + diag.beta_interior - kPi) <= 1e-10);
        CHECK(std::fabs(diag.theta + diag.theta_prime - kHalfPi) <= 1e-12);

        // The intermediate sine expressions also stay in (0, 1].
        const double a = spec.a;
        const double b = spec.b;
        const double shared = std::sqrt(2.0 * a * b / (a * a + b * b));
        const double sin_alpha_prime = b / (2.0 * a + b) * shared;
        const double sin_alpha = a / (a + 2.0 * b) * shared;
        CHECK(sin_alpha_prime > 0.0);
        CHECK(sin_alpha_prime <= 1.0);
        CHECK(sin_alpha > 0.0);
        CHECK(sin_alpha <= 1.0);
    }
}

TEST_CASE("angles_geometric: triangle diagnostics") {
    const OvalConstruction small = construct(EllipseSpec(2.0, 1.0));
    const TriangleDiagnostics diag = angles_geometric(small).diagnostics;

    // theta = arcsin(1/sqrt 5), theta' = arcsin(2/sqrt 5) for (2, 1).
    CHECK(diag.theta == doctest::Approx(std::asin(1.0 / std::sqrt(5.0))).epsilon(1e-14));
    CHECK(diag.theta_prime == doctest::Approx(std::asin(2.0 / std::sqrt(5.0))).epsilon(1e-14));
    CHECK(std::fabs(diag.theta + diag.theta_prime - kHalfPi) <= 1e-12);

    // gamma = theta - alpha', delta = theta' - alpha.
    CHECK(small.gamma == doctest::Approx(diag.theta - diag.alpha_prime).epsilon(1e-12));
    CHECK(small.delta == doctest::Approx(diag.theta_prime - diag.alpha).epsilon(1e-12));

    // Triangle angle sum with the measured interior angle at k.
    CHECK(std::fabs(diag.alpha + diag.alpha_prime + diag.beta_interior - kPi) <= 1e-10);

    // sin(alpha') two ways: the closed form and the cosine-law route plus
    // the Pythagorean identity.
    const double a = 94.0;
    const double b = 78.0;
    const TriangleDiagnostics big = angles_geometric(construct(EllipseSpec(a, b))).diagnostics;
    const double sin_direct = b / (2.0 * a + b) * std::sqrt(2.0 * a * b / (a * a + b * b));
    const double cos_route = (2.0 * a * a + a * b + b * b) /
                             ((b + 2.0 * a) * std::sqrt(a * a + b * b));
    const double sin_from_cos = std::sqrt((1.0 - cos_route) * (1.0 + cos_route));
    CHECK(sin_direct == doctest::Approx(78.0 / 266.0 *
                                        std::sqrt(2.0 * 94.0 * 78.0 / (94.0 * 94.0 + 78.0 * 78.0)))
                            .epsilon(1e-15));
    CHECK(std::sin(big.alpha_prime) == doctest::Approx(sin_direct).epsilon(1e-13));
    CHECK(std::sin(big.alpha_prime) == doctest::Approx(sin_from_cos).epsilon(1e-13));
    CHECK(std::fabs(big.alpha + big.alpha_prime + big.beta_interior - kPi) <= 1e-10);
    CHECK(std::fabs(big.theta + big.theta_prime - kHalfPi) <= 1e-12);
}

TEST_CASE("angles_geometric: degenerate circle keeps the closed-form split") {
    const OvalConstruction c = construct(EllipseSpec(3.0, 3.0));
    const GeometricAngles geo = angles_geometric(c);
    CHECK(geo.diagnostics.degenerate);
    CHECK(std::isnan(geo.diagnostics.alpha));
    CHECK(std::isnan(geo.diagnostics.theta));
    CHECK(geo.gamma == c.gamma);
    CHECK(geo.beta == c.beta);
    CHECK(geo.delta == c.delta);
}

TEST_CASE("full_oval: circle case") {
    const double rho = 5.0;
    const OvalPath path = full_oval(construct(EllipseSpec(rho, rho)));
    double total = 0.0;
    for (const Arc& arc : path.arcs) {
        CHECK(arc.center.x == 0.0);
        CHECK(arc.center.y == 0.0);
        CHECK(arc.radius == rho);
        total += std::fabs(arc.sweep);
    }
    CHECK(std::fabs(total - kTwoPi) <= 1e-10);
}

TEST_CASE("full_oval: quarter runs from (0, b) to (a, 0) through the junctions") {
    const OvalConstruction c = construct(EllipseSpec(94.0, 78.0));
    const OvalPath path = full_oval(c);
    const double tol = 1e-9 * 94.0;

    CHECK(distance(path.quarter[0].start_point(), {0.0, 78.0}) <= tol);
    CHECK(distance(path.quarter[0].endpoint(), c.junction_major) <= tol);
    CHECK(distance(path.quarter[1].start_point(), c.junction_major) <= tol);
    CHECK(distance(path.quarter[1].endpoint(), c.junction_minor) <= tol);
    CHECK(distance(path.quarter[2].start_point(), c.junction_minor) <= tol);
    CHECK(distance(path.quarter[2].endpoint(), {94.0, 0.0}) <= tol);

    CHECK(path.quarter[0].sweep == doctest::Approx(-c.gamma));
    CHECK(path.quarter[1].sweep == doctest::Approx(-c.beta));
    CHECK(path.quarter[2].sweep == doctest::Approx(-c.delta));
}

TEST_CASE("full_oval: path integrity over random specs") {
    for (const EllipseSpec& spec : testsup::random_specs(555u, 100)) {
        const OvalConstruction c = construct(spec);
        const OvalPath path = full_oval(c);
        const double tol = 1e-9 * spec.a;

        double total = 0.0;
        for (std::size_t i = 0; i < path.arcs.size(); ++i) {
            const Arc& arc = path.arcs[i];
            const Arc& next = path.arcs[(i + 1) % path.arcs.size()];
            CHECK(distance(arc.endpoint(), next.start_point()) <= tol);
            CHECK(arc.radius > 0.0);
            CHECK(std::fabs(arc.sweep) <= kTwoPi);
            total += std::fabs(arc.sweep);
        }
        CHECK(std::fabs(total - kTwoPi) <= 1e-10);

        // Sweep pattern 2delta, beta, 2gamma, beta, 2delta, beta, 2gamma, beta.
        CHECK(path.arcs[0].sweep == doctest::Approx(2.0 * c.delta));
        CHECK(path.arcs[2].sweep == doctest::Approx(2.0 * c.gamma));
        CHECK(path.arcs[4].sweep == doctest::Approx(2.0 * c.delta));
        CHECK(path.arcs[6].sweep == doctest::Approx(2.0 * c.gamma));
        for (const std::size_t i : {1u, 3u, 5u, 7u}) {
            CHECK(path.arcs[i].sweep == doctest::Approx(c.beta));
        }

        if (!spec.is_circle()) {
            // Eight distinct centers.
            for (std::size_t i = 0; i < path.arcs.size(); ++i) {
                for (std::size_t j = i + 1; j < path.arcs.size(); ++j) {
                    CHECK(distance(path.arcs[i].center, path.arcs[j].center) > 0.0);
                }
            }
        }
    }
}

TEST_CASE("oval perimeter: golden values") {
    const double colosseum = oval_perimeter(EllipseSpec(94.0, 78.0));
    CHECK(std::fabs(colosseum - 541.523) <= 0.005);
    CHECK(colosseum == doctest::Approx(kColosseumOval).epsilon(1e-12));

    const double small = oval_perimeter(EllipseSpec(2.0, 1.0));
    CHECK(std::fabs(small - 9.68872) <= 1e-4);
    CHECK(small == doctest::Approx(kSmallOval).epsilon(1e-12));
}

TEST_CASE("oval perimeter: circle reduction and homogeneity") {
    for (const double rho : {0.001, 1.0, 7.3, 1e4}) {
        const double perimeter = oval_perimeter(EllipseSpec(rho, rho));
        CHECK(std::fabs(perimeter - kTwoPi * rho) / (kTwoPi * rho) <= 1e-12);
    }

    std::mt19937 rng(2024u);
    std::uniform_real_distribution<double> scale_draw(1e-3, 1e3);
    const EllipseSpec base(7.0, 3.5);
    const double reference = oval_perimeter(base);
    for (int i = 0; i < 50; ++i) {
        const double s = scale_draw(rng);
        const double scaled = oval_perimeter(EllipseSpec(s * base.a, s * base.b));
        CHECK(std::fabs(scaled - s * reference) / (s * reference) <= 1e-12);
    }
}

TEST_CASE("asin_guarded clamps rounding noise only") {
    CHECK(detail::asin_guarded(1.0) == kHalfPi);
    CHECK(detail::asin_guarded(1.0 + 5e-13) == kHalfPi);
    CHECK(detail::asin_guarded(-1.0 - 5e-13) == -kHalfPi);
    CHECK(detail::asin_guarded(0.5) == std::asin(0.5));
    CHECK_THROWS_AS(detail::asin_guarded(1.0 + 1e-11), DegenerateGeometry);
    CHECK_THROWS_AS(detail::asin_guarded(-1.0 - 1e-11), DegenerateGeometry);
}
