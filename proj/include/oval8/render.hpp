// SVG diagrams: the construction figure (osculating and auxiliary circles,
// centers, quarter arcs) and the full oval overlaid on the true ellipse.
#pragma once

#include <string>

#include "oval8/oval.hpp"

namespace oval8 {

enum class Layer : unsigned {
    none = 0,
    ellipse = 1u << 0,
    oval = 1u << 1,
    osculating = 1u << 2,
    auxiliary = 1u << 3,
    centers = 1u << 4,
    junctions = 1u << 5,
    labels = 1u << 6,
};

constexpr Layer operator|(Layer a, Layer b) {
    return static_cast<Layer>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_layer(Layer set, Layer flag) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

inline constexpr Layer kAllLayers = Layer::ellipse | Layer::oval | Layer::osculating |
                                    Layer::auxiliary | Layer::centers | Layer::junctions |
                                    Layer::labels;

/// Colors follow the construction convention: minor arc blue, intermediate
/// green, major red.  They are fixed so golden-file comparisons stay stable.
struct RenderOptions {
    int width_px = 900;
    int height_px = 700;
    double margin_fraction = 0.06;
    Layer layers = kAllLayers;
    /// Rotate the drawing 90 degrees counterclockwise; used when the input
    /// axes arrived swapped so the picture keeps the caller's orientation.
    bool quarter_turn = false;
    /// Point count for the sampled ellipse in overlay mode (minimum 256).
    int ellipse_samples = 256;
};

/// Throws std::invalid_argument when sizes are below 64 px or the margin is
/// outside [0, 0.4].
void validate(const RenderOptions& opts);

/// Construction figure: true ellipse, three colored quarter arcs, the two
/// osculating and two auxiliary circles, center and junction markers, and
/// text labels -- each behind its layer flag.  Deterministic output; arcs
/// are native SVG path arc segments.
std::string render_construction(const OvalConstruction& c, const RenderOptions& opts);

/// Full 8-arc oval (one closed path) over a sampled ellipse outline.
std::string render_overlay(const EllipseSpec& spec, const RenderOptions& opts);

}  // namespace oval8
