// Command-line front end: construction tables, perimeter comparisons, error
// sweeps, invariant checks, and SVG export.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 I/O error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oval8/analysis.hpp"
#include "oval8/ellipse.hpp"
#include "oval8/format.hpp"
#include "oval8/oval.hpp"
#include "oval8/render.hpp"

namespace {

using nlohmann::ordered_json;
using namespace oval8;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIoError = 3;

int write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIoError;
    }
    file << content;
    file.flush();
    if (!file) {
        std::cerr << "error: failed while writing '" << path << "'\n";
        return kExitIoError;
    }
    return kExitOk;
}

void print_notices(const NormalizedAxes& axes, double first, double second) {
    if (axes.swapped) {
        std::cout << "note: axes swapped to canonical order from input (" << fmt_shortest(first)
                  << ", " << fmt_shortest(second) << ")\n";
    }
    if (axes.spec.is_circle()) {
        std::cout << "note: degenerate circle, all centers coincide at the origin\n";
    }
}

int run_params(double first, double second, const std::string& format) {
    const NormalizedAxes axes = normalize_axes(first, second);
    const OvalConstruction c = construct(axes.spec);

    if (format == "json") {
        ordered_json doc;
        doc["a"] = axes.spec.a;
        doc["b"] = axes.spec.b;
        doc["swapped"] = axes.swapped;
        doc["degenerate"] = c.degenerate();
        doc["r"] = c.minor_radius;
        doc["p"] = c.intermediate_radius;
        doc["R"] = c.major_radius;
        doc["e"] = {c.minor_center.x, c.minor_center.y};
        doc["g"] = {c.major_center.x, c.major_center.y};
        doc["k"] = {c.intermediate_center.x, c.intermediate_center.y};
        doc["gamma_rad"] = c.gamma;
        doc["beta_rad"] = c.beta;
        doc["delta_rad"] = c.delta;
        doc["gamma_deg"] = to_degrees(c.gamma);
        doc["beta_deg"] = to_degrees(c.beta);
        doc["delta_deg"] = to_degrees(c.delta);
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "eight-centered oval for a = " << fmt_shortest(axes.spec.a)
              << ", b = " << fmt_shortest(axes.spec.b) << "\n";
    print_notices(axes, first, second);
    const auto point = [](Vec2 v) {
        return "(" + fmt_fixed(v.x, 6) + ", " + fmt_fixed(v.y, 6) + ")";
    };
    std::cout << "radius r (minor)        = " << fmt_fixed(c.minor_radius, 6) << "\n"
              << "radius p (intermediate) = " << fmt_fixed(c.intermediate_radius, 6) << "\n"
              << "radius R (major)        = " << fmt_fixed(c.major_radius, 6) << "\n"
              << "center e = " << point(c.minor_center) << "\n"
              << "center g = " << point(c.major_center) << "\n"
              << "center k = " << point(c.intermediate_center) << "\n"
              << "angle gamma (major arc)        = " << fmt_fixed(c.gamma, 6)
              << " rad = " << fmt_fixed(to_degrees(c.gamma), 6) << " deg\n"
              << "angle beta  (intermediate arc) = " << fmt_fixed(c.beta, 6)
              << " rad = " << fmt_fixed(to_degrees(c.beta), 6) << " deg\n"
              << "angle delta (minor arc)        = " << fmt_fixed(c.delta, 6)
              << " rad = " << fmt_fixed(to_degrees(c.delta), 6) << " deg\n";
    return kExitOk;
}

int run_perimeter(double first, double second, const std::string& format) {
    const NormalizedAxes axes = normalize_axes(first, second);
    const PerimeterReport report = compare(axes.spec);
    const EccentricityData ecc = eccentricity(axes.spec);

    if (format == "json") {
        ordered_json doc;
        doc["a"] = axes.spec.a;
        doc["b"] = axes.spec.b;
        doc["swapped"] = axes.swapped;
        doc["eccentricity"] = ecc.epsilon;
        doc["oval"] = report.oval;
        doc["elliptic"] = report.elliptic;
        doc["kepler"] = report.kepler;
        doc["rel_err_oval"] = report.rel_err_oval;
        doc["rel_err_kepler"] = report.rel_err_kepler;
        doc["unit"] = "fraction";
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "perimeters for a = " << fmt_shortest(axes.spec.a)
              << ", b = " << fmt_shortest(axes.spec.b)
              << " (eccentricity = " << fmt_sig(ecc.epsilon, 6) << ")\n";
    print_notices(axes, first, second);
    std::cout << "oval (eight-centered)        O = " << fmt_sig(report.oval, 6) << "\n"
              << "elliptic integral reference  L = " << fmt_sig(report.elliptic, 6) << "\n"
              << "kepler pi*(a+b)                = " << fmt_sig(report.kepler, 6) << "\n"
              << "relative error, oval vs L   = " << fmt_sig(report.rel_err_oval * 100.0, 6)
              << " %\n"
              << "relative error, kepler vs L = " << fmt_sig(report.rel_err_kepler * 100.0, 6)
              << " %\n";
    return kExitOk;
}

int run_sweep(double a_min, double a_max, double b_min, double b_max, double step,
              const std::string& format, const std::string& out_path) {
    const SweepGrid grid = sweep(a_min, a_max, b_min, b_max, step);

    std::string payload;
    if (format == "json") {
        payload = sweep_to_json(grid).dump(2) + "\n";
    } else {
        std::ostringstream csv;
        write_sweep_csv(grid, csv);
        payload = csv.str();
    }

    std::ostringstream summary;
    summary << "cells: " << grid.cells.size() << " (b <= a only)\n"
            << "max rel err = " << fmt_sig(grid.max_err * 100.0, 6) << " % at (a, b) = ("
            << fmt_shortest(grid.argmax_a) << ", " << fmt_shortest(grid.argmax_b) << ")\n";

    if (out_path.empty()) {
        // Grid on stdout, summary on stderr so the data stays pipeable.
        std::cout << payload;
        std::cerr << summary.str();
        return kExitOk;
    }
    const int rc = write_file(out_path, payload);
    if (rc != kExitOk) {
        return rc;
    }
    std::cout << summary.str();
    return kExitOk;
}

Layer parse_layers(const std::string& text) {
    Layer layers = Layer::none;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) {
            continue;
        }
        if (token == "ellipse") {
            layers = layers | Layer::ellipse;
        } else if (token == "oval") {
            layers = layers | Layer::oval;
        } else if (token == "osculating") {
            layers = layers | Layer::osculating;
        } else if (token == "auxiliary") {
            layers = layers | Layer::auxiliary;
        } else if (token == "centers") {
            layers = layers | Layer::centers;
        } else if (token == "junctions") {
            layers = layers | Layer::junctions;
        } else if (token == "labels") {
            layers = layers | Layer::labels;
        } else if (token == "all") {
            layers = layers | kAllLayers;
        } else if (token == "none") {
            layers = Layer::none;
        } else {
            throw std::invalid_argument("unknown layer '" + token + "'");
        }
    }
    return layers;
}

int run_svg(double first, double second, const std::string& mode, const std::string& out_path,
            const RenderOptions& base_opts, const std::string& layer_spec) {
    const NormalizedAxes axes = normalize_axes(first, second);
    RenderOptions opts = base_opts;
    opts.quarter_turn = axes.swapped;
    if (!layer_spec.empty()) {
        opts.layers = parse_layers(layer_spec);
    }

    std::string document;
    if (mode == "overlay") {
        document = render_overlay(axes.spec, opts);
    } else {
        document = render_construction(construct(axes.spec), opts);
    }

    if (out_path.empty()) {
        std::cout << document;
        return kExitOk;
    }
    const int rc = write_file(out_path, document);
    if (rc == kExitOk) {
        std::cerr << "wrote " << out_path << "\n";
    }
    return rc;
}

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

int run_check(double first, double second) {
    const NormalizedAxes axes = normalize_axes(first, second);
    const EllipseSpec& spec = axes.spec;
    const OvalConstruction c = construct(spec);
    const double a = spec.a;
    std::vector<Check> checks;

    {
        const double residual = std::fabs(c.gamma + c.beta + c.delta - kHalfPi);
        checks.push_back({"angle-sum", residual <= 1e-10,
                          "|gamma+beta+delta - pi/2| = " + fmt_sig(residual, 3)});
    }
    {
        double worst = 0.0;
        worst = std::max(worst, std::fabs(distance(c.junction_minor, c.minor_center) -
                                          c.minor_radius));
        worst = std::max(worst, std::fabs(distance(c.junction_minor, c.intermediate_center) -
                                          c.intermediate_radius));
        worst = std::max(worst, std::fabs(distance(c.junction_major, c.major_center) -
                                          c.major_radius));
        worst = std::max(worst, std::fabs(distance(c.junction_major, c.intermediate_center) -
                                          c.intermediate_radius));
        bool ok = worst <= 1e-9 * a;
        std::string detail = "max junction distance residual = " + fmt_sig(worst, 3);
        if (!c.degenerate()) {
            const double col1 = angle_between(c.junction_minor - c.minor_center,
                                              c.minor_center - c.intermediate_center);
            const double col2 = angle_between(c.junction_major - c.major_center,
                                              c.intermediate_center - c.major_center);
            ok = ok && col1 <= 1e-10 && col2 <= 1e-10;
            detail += ", collinearity residuals = " + fmt_sig(col1, 3) + ", " + fmt_sig(col2, 3);
        }
        checks.push_back({"tangency", ok, detail});
    }
    {
        const GeometricAngles geo = angles_geometric(c);
        const double worst = std::max({std::fabs(geo.gamma - c.gamma), std::fabs(geo.beta - c.beta),
                                       std::fabs(geo.delta - c.delta)});
        checks.push_back({"oracle-equivalence", worst <= 1e-10,
                          "max closed-form vs geometric gap = " + fmt_sig(worst, 3)});
    }
    {
        const double base = oval_perimeter(spec);
        double worst = 0.0;
        for (const double s : {0.37, 2.5, 640.0}) {
            const double scaled = oval_perimeter(EllipseSpec(s * spec.a, s * spec.b));
            worst = std::max(worst, std::fabs(scaled - s * base) / (s * base));
        }
        checks.push_back(
            {"homogeneity", worst <= 1e-12, "max relative residual = " + fmt_sig(worst, 3)});
    }
    {
        const double circumference = oval_perimeter(EllipseSpec(a, a));
        const double residual = std::fabs(circumference - kTwoPi * a) / (kTwoPi * a);
        checks.push_back({"circle-reduction", residual <= 1e-12,
                          "rho = " + fmt_shortest(a) + ", relative residual = " +
                              fmt_sig(residual, 3)});
    }

    bool all_ok = true;
    for (const Check& check : checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << " " << check.name << ": " << check.detail
                  << "\n";
        all_ok = all_ok && check.passed;
    }
    return all_ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eight-centered oval approximation of an ellipse"};
    app.require_subcommand(1);

    double first = 0.0;
    double second = 0.0;
    std::string format;
    std::string out_path;

    auto* params = app.add_subcommand("params", "construction radii, centers, and central angles");
    params->add_option("a", first, "first semi-axis")->required();
    params->add_option("b", second, "second semi-axis")->required();
    params->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    auto* perimeter =
        app.add_subcommand("perimeter", "oval, elliptic, and Kepler perimeters with errors");
    perimeter->add_option("a", first, "first semi-axis")->required();
    perimeter->add_option("b", second, "second semi-axis")->required();
    perimeter->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    double a_min = 0.0, a_max = 0.0, b_min = 0.0, b_max = 0.0, step = 0.25;
    auto* sweep_cmd = app.add_subcommand("sweep", "relative-error sweep over an (a, b) grid");
    sweep_cmd->add_option("a_min", a_min, "smallest a")->required();
    sweep_cmd->add_option("a_max", a_max, "largest a")->required();
    sweep_cmd->add_option("b_min", b_min, "smallest b")->required();
    sweep_cmd->add_option("b_max", b_max, "largest b")->required();
    sweep_cmd->add_option("step,--step", step, "grid step (default 0.25)");
    sweep_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    sweep_cmd->add_option("-o,--out", out_path, "write the grid to this file");

    std::string mode = "construction";
    std::string layer_spec;
    RenderOptions render_opts;
    auto* svg = app.add_subcommand("svg", "construction or overlay diagram as SVG");
    svg->add_option("a", first, "first semi-axis")->required();
    svg->add_option("b", second, "second semi-axis")->required();
    svg->add_option("--mode", mode, "diagram kind")
        ->check(CLI::IsMember({"construction", "overlay"}));
    svg->add_option("-o,--out", out_path, "write the document to this file");
    svg->add_option("--width", render_opts.width_px, "canvas width in px");
    svg->add_option("--height", render_opts.height_px, "canvas height in px");
    svg->add_option("--margin", render_opts.margin_fraction, "margin fraction, [0, 0.4]");
    svg->add_option("--samples", render_opts.ellipse_samples,
                    "ellipse sample count in overlay mode (min 256)");
    svg->add_option("--layers", layer_spec,
                    "comma list of construction layers (ellipse, oval, osculating, auxiliary, "
                    "centers, junctions, labels, all)");

    auto* check = app.add_subcommand("check", "run the invariant suite on one spec");
    check->add_option("a", first, "first semi-axis")->required();
    check->add_option("b", second, "second semi-axis")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*params) {
            return run_params(first, second, format);
        }
        if (*perimeter) {
            return run_perimeter(first, second, format);
        }
        if (*sweep_cmd) {
            return run_sweep(a_min, a_max, b_min, b_max, step, format, out_path);
        }
        if (*svg) {
            return run_svg(first, second, mode, out_path, render_opts, layer_spec);
        }
        if (*check) {
            return run_check(first, second);
        }
    } catch (const InvalidAxes& e) {
        std::cerr << "error: invalid axes: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InvalidRange& e) {
        std::cerr << "error: invalid range: " << e.what() << "\n";
        return kExitInputError;
    } catch (const GridTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
