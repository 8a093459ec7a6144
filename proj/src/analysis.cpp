#include "oval8/analysis.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "oval8/format.hpp"

namespace oval8 {

namespace {

/// Number of grid values min, min+step, ..., covering max (with slack for
/// steps that are not exactly representable).
long value_count(double min, double max, double step) {
    const double raw = (max - min) / step;
    if (!(raw >= 0.0) || raw > 2e9) {
        throw GridTooLarge("sweep grid axis would exceed 2e9 values");
    }
    return static_cast<long>(std::floor(raw + 1e-9)) + 1;
}

}  // namespace

SweepGrid sweep(double a_min, double a_max, double b_min, double b_max, double step) {
    if (!(a_min > 0.0) || !(b_min > 0.0) || !std::isfinite(a_max) || !std::isfinite(b_max) ||
        a_max < a_min || b_max < b_min) {
        throw InvalidRange("sweep ranges must satisfy 0 < min <= max and be finite");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw InvalidRange("sweep step must be positive and finite");
    }

    const long na = value_count(a_min, a_max, step);
    const long nb = value_count(b_min, b_max, step);
    if (na * nb > 1000000L) {
        std::ostringstream msg;
        msg << "sweep grid of " << na << " x " << nb << " points exceeds the 1e6 cell budget";
        throw GridTooLarge(msg.str());
    }

    SweepGrid grid{a_min, a_max, b_min, b_max, step, {}, 0.0, a_min, b_min};
    grid.cells.reserve(static_cast<std::size_t>(na) * static_cast<std::size_t>(nb));

    // Row-major, a outer; keep only cells with b <= a (no swapped duplicates).
    // The slack tolerates grids whose a and b values come from different
    // start points but represent the same coordinate.
    for (long ia = 0; ia < na; ++ia) {
        const double a = a_min + static_cast<double>(ia) * step;
        for (long ib = 0; ib < nb; ++ib) {
            const double b = b_min + static_cast<double>(ib) * step;
            if (b > a * (1.0 + 1e-12)) {
                break;
            }
            const PerimeterReport report = compare(EllipseSpec(a, std::min(a, b)));
            grid.cells.push_back({a, b, report.rel_err_oval});
            if (report.rel_err_oval > grid.max_err) {
                grid.max_err = report.rel_err_oval;
                grid.argmax_a = a;
                grid.argmax_b = b;
            }
        }
    }
    return grid;
}

void write_sweep_csv(const SweepGrid& grid, std::ostream& out) {
    out << "a,b,rel_err_percent\n";
    for (const SweepCell& cell : grid.cells) {
        out << fmt_shortest(cell.a) << ',' << fmt_shortest(cell.b) << ','
            << fmt_shortest(cell.rel_err * 100.0) << '\n';
    }
}

nlohmann::ordered_json sweep_to_json(const SweepGrid& grid) {
    nlohmann::ordered_json doc;
    doc["a_range"] = {grid.a_min, grid.a_max};
    doc["b_range"] = {grid.b_min, grid.b_max};
    doc["step"] = grid.step;
    doc["unit"] = "fraction";
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const SweepCell& cell : grid.cells) {
        cells.push_back({cell.a, cell.b, cell.rel_err});
    }
    doc["cells"] = std::move(cells);
    doc["max_err"] = grid.max_err;
    doc["argmax_cell"] = {grid.argmax_a, grid.argmax_b};
    return doc;
}

double oval_radius_at(const OvalConstruction& c, double phi) {
    if (!(phi >= 0.0 && phi <= kHalfPi)) {
        throw std::invalid_argument("oval_radius_at: phi must lie in [0, pi/2]");
    }

    // Junction polar angles split the quadrant into the three arc spans.
    const double phi_minor = std::atan2(c.junction_minor.y, c.junction_minor.x);
    const double phi_major = std::atan2(c.junction_major.y, c.junction_major.x);

    Vec2 center;
    double radius;
    if (phi <= phi_minor) {
        center = c.minor_center;
        radius = c.minor_radius;
    } else if (phi <= phi_major) {
        center = c.intermediate_center;
        radius = c.intermediate_radius;
    } else {
        center = c.major_center;
        radius = c.major_radius;
    }

    // Ray t*(cos phi, sin phi) against the circle; the arc lies on the far
    // (outer) root.
    const Vec2 dir{std::cos(phi), std::sin(phi)};
    const double along = dot(center, dir);
    const double discriminant = along * along - dot(center, center) + radius * radius;
    return along + std::sqrt(discriminant);
}

DeviationReport radial_deviation(const EllipseSpec& spec, int samples) {
    if (samples < 16) {
        throw std::invalid_argument("radial_deviation: samples must be at least 16");
    }

    const OvalConstruction c = construct(spec);
    const double a = spec.a;
    const double b = spec.b;

    double max_dev = 0.0;
    double argmax = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double phi = kHalfPi * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double r_oval = oval_radius_at(c, phi);
        const double r_ellipse = a * b / std::hypot(b * std::cos(phi), a * std::sin(phi));
        const double dev = std::fabs(r_oval - r_ellipse);
        if (dev > max_dev) {
            max_dev = dev;
            argmax = phi;
        }
    }
    return {spec, max_dev, argmax, samples};
}

}  // namespace oval8
