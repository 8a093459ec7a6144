#include "oval8/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "oval8/format.hpp"

namespace oval8 {

namespace {

// Fixed palette: minor blue, intermediate green, major red; guides grey.
constexpr const char* kMinorColor = "#1f77b4";
constexpr const char* kIntermediateColor = "#2ca02c";
constexpr const char* kMajorColor = "#d62728";
constexpr const char* kEllipseColor = "#444444";
constexpr const char* kGuideColor = "#8a8a8a";
constexpr const char* kMarkerColor = "#222222";
constexpr const char* kJunctionColor = "#7a4dad";

struct Bounds {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    bool empty = true;

    void expand(Vec2 pt) {
        if (empty) {
            min_x = max_x = pt.x;
            min_y = max_y = pt.y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, pt.x);
        max_x = std::max(max_x, pt.x);
        min_y = std::min(min_y, pt.y);
        max_y = std::max(max_y, pt.y);
    }
    void expand_circle(Vec2 c, double r) {
        expand({c.x - r, c.y - r});
        expand({c.x + r, c.y + r});
    }
    void expand_arc(const Arc& arc) {
        expand(arc.start_point());
        expand(arc.endpoint());
        // Axis extremes of the circle that fall inside the angular span.
        const double lo = std::min(arc.start, arc.start + arc.sweep);
        const double hi = std::max(arc.start, arc.start + arc.sweep);
        for (double axis = std::ceil(lo / kHalfPi) * kHalfPi; axis <= hi; axis += kHalfPi) {
            expand({arc.center.x + arc.radius * std::cos(axis),
                    arc.center.y + arc.radius * std::sin(axis)});
        }
    }
};

/// Uniform-scale world-to-viewport map with the y axis pointing up.
struct Frame {
    double scale;
    double ox;
    double oy;

    Vec2 to_px(Vec2 w) const { return {ox + scale * w.x, oy - scale * w.y}; }
};

Frame make_frame(const Bounds& world, const RenderOptions& opts) {
    const double usable_w = opts.width_px * (1.0 - 2.0 * opts.margin_fraction);
    const double usable_h = opts.height_px * (1.0 - 2.0 * opts.margin_fraction);
    const double span_x = std::max(world.max_x - world.min_x, 1e-300);
    const double span_y = std::max(world.max_y - world.min_y, 1e-300);
    const double scale = std::min(usable_w / span_x, usable_h / span_y);
    const double cx = 0.5 * (world.min_x + world.max_x);
    const double cy = 0.5 * (world.min_y + world.max_y);
    return {scale, 0.5 * opts.width_px - scale * cx, 0.5 * opts.height_px + scale * cy};
}

// Quarter-turn (90 degrees counterclockwise) applied to world geometry
// before projection, so swapped input axes keep their orientation.
Vec2 turned(Vec2 w) { return {-w.y, w.x}; }
Arc turned(const Arc& arc) { return {turned(arc.center), arc.radius, arc.start + kHalfPi, arc.sweep}; }

std::string px(double v) { return fmt_fixed(v, 6); }

void open_svg(std::ostream& out, const RenderOptions& opts) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width_px
        << "\" height=\"" << opts.height_px << "\" viewBox=\"0 0 " << opts.width_px << " "
        << opts.height_px << "\">\n";
}

void emit_circle(std::ostream& out, const Frame& f, const char* cls, Vec2 center, double radius,
                 const char* color, double width, const char* dash) {
    const Vec2 c = f.to_px(center);
    out << "<circle class=\"" << cls << "\" cx=\"" << px(c.x) << "\" cy=\"" << px(c.y)
        << "\" r=\"" << px(f.scale * radius) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"" << px(width) << "\"";
    if (dash != nullptr) {
        out << " stroke-dasharray=\"" << dash << "\"";
    }
    out << "/>\n";
}

void emit_marker(std::ostream& out, const Frame& f, const char* cls, Vec2 at, const char* color) {
    const Vec2 c = f.to_px(at);
    out << "<circle class=\"" << cls << "\" cx=\"" << px(c.x) << "\" cy=\"" << px(c.y)
        << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
}

void append_arc_segment(std::ostream& out, const Frame& f, const Arc& arc) {
    const Vec2 end = f.to_px(arc.endpoint());
    const double radius = f.scale * arc.radius;
    // The y flip reverses orientation: a counterclockwise world sweep runs
    // in SVG's negative-angle direction.
    const int large = std::fabs(arc.sweep) > kPi ? 1 : 0;
    const int sweep_flag = arc.sweep > 0.0 ? 0 : 1;
    out << " A " << px(radius) << " " << px(radius) << " 0 " << large << " " << sweep_flag << " "
        << px(end.x) << " " << px(end.y);
}

void emit_arc_path(std::ostream& out, const Frame& f, const char* cls, const Arc& arc,
                   const char* color, double width) {
    const Vec2 start = f.to_px(arc.start_point());
    out << "<path class=\"" << cls << "\" d=\"M " << px(start.x) << " " << px(start.y);
    append_arc_segment(out, f, arc);
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << px(width) << "\"/>\n";
}

void emit_label(std::ostream& out, const Frame& f, Vec2 at, Vec2 px_offset,
                const std::string& text) {
    const Vec2 c = f.to_px(at);
    out << "<text class=\"label\" x=\"" << px(c.x + px_offset.x) << "\" y=\""
        << px(c.y + px_offset.y) << "\" font-family=\"sans-serif\" font-size=\"15\" fill=\"#111\">"
        << text << "</text>\n";
}

void emit_native_ellipse(std::ostream& out, const Frame& f, double rx, double ry) {
    const Vec2 c = f.to_px({0.0, 0.0});
    out << "<ellipse class=\"ellipse-true\" cx=\"" << px(c.x) << "\" cy=\"" << px(c.y)
        << "\" rx=\"" << px(f.scale * rx) << "\" ry=\"" << px(f.scale * ry)
        << "\" fill=\"none\" stroke=\"" << kEllipseColor << "\" stroke-width=\"1.2\"/>\n";
}

}  // namespace

void validate(const RenderOptions& opts) {
    if (opts.width_px < 64 || opts.height_px < 64) {
        throw std::invalid_argument("render: width_px and height_px must be at least 64");
    }
    if (!(opts.margin_fraction >= 0.0 && opts.margin_fraction <= 0.4)) {
        throw std::invalid_argument("render: margin_fraction must lie in [0, 0.4]");
    }
}

std::string render_construction(const OvalConstruction& c, const RenderOptions& opts) {
    validate(opts);
    const bool turn = opts.quarter_turn;
    const auto pt = [&](Vec2 w) { return turn ? turned(w) : w; };
    const auto ar = [&](const Arc& a) { return turn ? turned(a) : a; };

    const double a = c.spec.a;
    const double b = c.spec.b;
    const OvalPath path = full_oval(c);
    const Layer layers = opts.layers;

    // World bounds over everything the requested layers draw; an empty layer
    // set keeps the ellipse box as the reference frame.
    Bounds world;
    world.expand(pt({-a, -b}));
    world.expand(pt({a, b}));
    if (has_layer(layers, Layer::oval)) {
        for (const Arc& arc : path.quarter) {
            world.expand_arc(ar(arc));
        }
    }
    if (has_layer(layers, Layer::osculating)) {
        world.expand_circle(pt(c.minor_center), c.minor_radius);
        world.expand_circle(pt(c.major_center), c.major_radius);
    }
    if (has_layer(layers, Layer::auxiliary)) {
        world.expand_circle(pt(c.minor_center), c.aux_minor_radius);
        world.expand_circle(pt(c.major_center), c.aux_major_radius);
    }
    const Frame frame = make_frame(world, opts);

    std::ostringstream out;
    open_svg(out, opts);

    if (has_layer(layers, Layer::ellipse)) {
        if (turn) {
            emit_native_ellipse(out, frame, b, a);
        } else {
            emit_native_ellipse(out, frame, a, b);
        }
    }
    if (has_layer(layers, Layer::osculating)) {
        emit_circle(out, frame, "osculating", pt(c.minor_center), c.minor_radius, kGuideColor,
                    0.9, "6 4");
        emit_circle(out, frame, "osculating", pt(c.major_center), c.major_radius, kGuideColor,
                    0.9, "6 4");
    }
    if (has_layer(layers, Layer::auxiliary)) {
        emit_circle(out, frame, "auxiliary", pt(c.minor_center), c.aux_minor_radius, kGuideColor,
                    0.9, "2 3");
        emit_circle(out, frame, "auxiliary", pt(c.major_center), c.aux_major_radius, kGuideColor,
                    0.9, "2 3");
    }
    if (has_layer(layers, Layer::oval)) {
        if (c.degenerate()) {
            // The three arcs are one circle; draw it as such.
            emit_circle(out, frame, "oval-circle", pt({0.0, 0.0}), a, kIntermediateColor, 2.4,
                        nullptr);
        } else {
            emit_arc_path(out, frame, "arc-major", ar(path.quarter[0]), kMajorColor, 2.4);
            emit_arc_path(out, frame, "arc-intermediate", ar(path.quarter[1]), kIntermediateColor,
                          2.4);
            emit_arc_path(out, frame, "arc-minor", ar(path.quarter[2]), kMinorColor, 2.4);
        }
    }
    if (has_layer(layers, Layer::centers)) {
        emit_marker(out, frame, "center-marker", pt(c.minor_center), kMarkerColor);
        emit_marker(out, frame, "center-marker", pt(c.major_center), kMarkerColor);
        emit_marker(out, frame, "center-marker", pt(c.intermediate_center), kMarkerColor);
    }
    if (has_layer(layers, Layer::junctions) && !c.degenerate()) {
        emit_marker(out, frame, "junction-marker", pt(c.junction_major), kJunctionColor);
        emit_marker(out, frame, "junction-marker", pt(c.junction_minor), kJunctionColor);
    }
    if (has_layer(layers, Layer::labels)) {
        emit_label(out, frame, pt(c.minor_center), {7.0, -7.0}, "e");
        emit_label(out, frame, pt(c.major_center), {7.0, -7.0}, "g");
        emit_label(out, frame, pt(c.intermediate_center), {7.0, -7.0}, "k");
        // Angle names sit just outside the midpoint of their arcs.
        for (int i = 0; i < 3; ++i) {
            const Arc arc = path.quarter[static_cast<std::size_t>(i)];
            const double mid = arc.start + 0.5 * arc.sweep;
            const Vec2 at{arc.center.x + 1.05 * arc.radius * std::cos(mid),
                          arc.center.y + 1.05 * arc.radius * std::sin(mid)};
            static const char* names[3] = {"γ", "β", "δ"};
            emit_label(out, frame, pt(at), {0.0, 0.0}, names[i]);
        }
    }

    out << "</svg>\n";
    return out.str();
}

std::string render_overlay(const EllipseSpec& spec, const RenderOptions& opts) {
    validate(opts);
    const bool turn = opts.quarter_turn;
    const auto pt = [&](Vec2 w) { return turn ? turned(w) : w; };
    const auto ar = [&](const Arc& a) { return turn ? turned(a) : a; };

    const OvalConstruction c = construct(spec);
    const OvalPath path = full_oval(c);

    Bounds world;
    world.expand(pt({-spec.a, -spec.b}));
    world.expand(pt({spec.a, spec.b}));
    for (const Arc& arc : path.arcs) {
        world.expand_arc(ar(arc));
    }
    const Frame frame = make_frame(world, opts);

    std::ostringstream out;
    open_svg(out, opts);

    // Sampled true ellipse underneath.
    const int samples = std::max(opts.ellipse_samples, 256);
    out << "<polygon class=\"ellipse-sampled\" points=\"";
    for (int i = 0; i < samples; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(samples);
        const Vec2 w = pt({spec.a * std::cos(t), spec.b * std::sin(t)});
        const Vec2 p = frame.to_px(w);
        if (i > 0) {
            out << ' ';
        }
        out << px(p.x) << ',' << px(p.y);
    }
    out << "\" fill=\"none\" stroke=\"" << kEllipseColor << "\" stroke-width=\"1.2\"/>\n";

    // The oval as a single closed path of eight arc segments.
    const Vec2 start = frame.to_px(ar(path.arcs[0]).start_point());
    out << "<path class=\"oval-path\" d=\"M " << px(start.x) << " " << px(start.y);
    for (const Arc& arc : path.arcs) {
        append_arc_segment(out, frame, ar(arc));
    }
    out << " Z\" fill=\"none\" stroke=\"" << kIntermediateColor << "\" stroke-width=\"2.4\"/>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace oval8
