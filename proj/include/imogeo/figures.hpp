#pragma once

#include <optional>
#include <string>

#include "imogeo/construction.hpp"
#include "imogeo/scenario.hpp"

namespace imogeo {

/// Axis-aligned rectangle in model coordinates.
struct Box {
  Rational xmin;
  Rational xmax;
  Rational ymin;
  Rational ymax;

  bool contains(const Point2& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }
  Rational width() const { return xmax - xmin; }
  Rational height() const { return ymax - ymin; }
  Point2 center() const { return Point2{(xmin + xmax) / Rational(2), (ymin + ymax) / Rational(2)}; }
};

struct RenderSpec {
  DerivedScene scene;
  std::optional<ProbePoint> probe;
  std::optional<ImageResult> result;
  int width = 800;
  int height = 600;
  /// Padding on each side, as a fraction of the content extent.
  Rational margin = Rational(1, 20);
  bool show_radical_axis = true;
  bool labels = true;
};

/// Convenience: derive the scene, construct the image for `probe` (if any).
RenderSpec make_render_spec(const ScenarioConfig& cfg, const std::optional<ProbePoint>& probe);

/**
 * Uniform-scale map from model to pixel coordinates, y axis flipped:
 * pixel = (tx + scale * x, ty - scale * y).
 */
struct Viewport {
  Rational scale;
  Rational tx;
  Rational ty;
  /// Circles plus every named point close enough to be worth showing, padded.
  Box content;
  /// The whole canvas in model coordinates.
  Box visible;

  Point2 to_pixel(const Point2& p) const { return Point2{tx + scale * p.x, ty - scale * p.y}; }
};

/// Throws std::invalid_argument when width or height is below 64 pixels.
Viewport layout(const RenderSpec& spec);

/// Where a named point is drawn: itself when inside the content box,
/// otherwise the exit point of the ray from the content center.
Point2 clip_to_content(const Viewport& view, const Point2& p);

/// Byte-deterministic SVG 1.1 document.
std::string render_svg(const RenderSpec& spec);

/// Fixed six-digit serialization used for every SVG coordinate.
inline std::string svg_number(const Rational& value) { return value.to_decimal(6); }

}  // namespace imogeo
