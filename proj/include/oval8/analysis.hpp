// Error sweep over an (a, b) grid and radial oval-vs-ellipse deviation.
#pragma once

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "oval8/ellipse.hpp"
#include "oval8/oval.hpp"

namespace oval8 {

struct SweepCell {
    double a;
    double b;
    double rel_err;  ///< |O - L| / L, dimensionless fraction
};

/// Relative oval-vs-elliptic error over every grid point with b <= a,
/// enumerated row-major with a as the outer loop.
struct SweepGrid {
    double a_min, a_max;
    double b_min, b_max;
    double step;
    std::vector<SweepCell> cells;
    double max_err;    ///< maximum rel_err over cells (fraction)
    double argmax_a;   ///< cell attaining max_err (first in row-major order)
    double argmax_b;
};

/// Runs the sweep.  Ranges must be positive with min <= max and step > 0;
/// grids beyond 1e6 points raise GridTooLarge.
SweepGrid sweep(double a_min, double a_max, double b_min, double b_max, double step);

/// CSV with header exactly "a,b,rel_err_percent" (errors in percent).
void write_sweep_csv(const SweepGrid& grid, std::ostream& out);

/// JSON mirroring the SweepGrid fields; rel_err values stay fractions and
/// the document carries "unit": "fraction".
nlohmann::ordered_json sweep_to_json(const SweepGrid& grid);

/// Radius of the oval at polar angle phi in [0, pi/2] measured from the
/// origin: locates the arc whose angular span contains phi and solves the
/// ray-circle intersection analytically (outer root).
double oval_radius_at(const OvalConstruction& c, double phi);

struct DeviationReport {
    EllipseSpec spec;
    double max_radial_dev;  ///< max |r_oval(phi) - r_ellipse(phi)|
    double argmax_angle;
    int samples;
};

/// Samples both curves at `samples` uniformly spaced polar angles covering
/// [0, pi/2] inclusive (by symmetry the quarter suffices) and reports the
/// largest radial gap.  Requires samples >= 16.
DeviationReport radial_deviation(const EllipseSpec& spec, int samples);

}  // namespace oval8
