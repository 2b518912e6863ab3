#include "imogeo/figures.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace imogeo {

namespace {

using Segment = std::pair<Point2, Point2>;

// Fixed styling, in pixels unless noted.
constexpr long kStrokeThin = 1;
constexpr long kStrokeCircle = 2;
constexpr long kPointRadius = 3;
constexpr long kDashOn = 4;
constexpr long kDashOff = 2;
constexpr long kFontSize = 14;
constexpr const char* kFont = "DejaVu Sans, Arial, sans-serif";

// Liang-Barsky, exact.
std::optional<Segment> clip_segment(const Point2& p0, const Point2& p1, const Box& box) {
  const Rational dx = p1.x - p0.x;
  const Rational dy = p1.y - p0.y;
  Rational t0(0);
  Rational t1(1);
  const std::pair<Rational, Rational> edges[] = {
      {-dx, p0.x - box.xmin},
      {dx, box.xmax - p0.x},
      {-dy, p0.y - box.ymin},
      {dy, box.ymax - p0.y},
  };
  for (const auto& [p, q] : edges) {
    if (p.is_zero()) {
      if (q.sign() < 0) return std::nullopt;
      continue;
    }
    const Rational r = q / p;
    if (p.sign() < 0) {
      if (r > t1) return std::nullopt;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return std::nullopt;
      if (r < t1) t1 = r;
    }
  }
  return Segment{Point2{p0.x + t0 * dx, p0.y + t0 * dy}, Point2{p0.x + t1 * dx, p0.y + t1 * dy}};
}

std::optional<Segment> clip_line(const Line& line, const Box& box) {
  if (line.is_vertical()) {
    const Rational x = -line.gamma() / line.alpha();
    return clip_segment(Point2{x, box.ymin}, Point2{x, box.ymax}, box);
  }
  auto y_at = [&line](const Rational& x) { return -(line.alpha() * x + line.gamma()) / line.beta(); };
  return clip_segment(Point2{box.xmin, y_at(box.xmin)}, Point2{box.xmax, y_at(box.xmax)}, box);
}

// The two outermost of three collinear points.
Segment span_of(const Point2& a, const Point2& b, const Point2& c) {
  const bool by_x = a.x != b.x || a.x != c.x;
  auto key = [by_x](const Point2& p) { return by_x ? p.x : p.y; };
  const Point2* lo = &a;
  const Point2* hi = &a;
  for (const Point2* p : {&b, &c}) {
    if (key(*p) < key(*lo)) lo = p;
    if (key(*p) > key(*hi)) hi = p;
  }
  return {*lo, *hi};
}

class SvgWriter {
 public:
  explicit SvgWriter(const Viewport& view) : view_(view) {}

  std::string& out() { return out_; }

  /// Pixel length expressed in model units.
  std::string px(long pixels) const { return svg_number(Rational(pixels) / view_.scale); }

  void line(const std::string& id, const std::string& cls, const Segment& seg, const char* stroke,
            long width, const std::string& extra = {}) {
    out_ += "    <line id=\"" + id + "\" class=\"" + cls + "\" x1=\"" + svg_number(seg.first.x) + "\" y1=\"" +
            svg_number(seg.first.y) + "\" x2=\"" + svg_number(seg.second.x) + "\" y2=\"" +
            svg_number(seg.second.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width) + "\"" + extra +
            "/>\n";
  }

  /// False when the line misses the canvas entirely.
  bool full_line(const std::string& id, const std::string& cls, const Line& l, const char* stroke, long width,
                 const std::string& extra = {}) {
    auto seg = clip_line(l, view_.visible);
    if (seg) line(id, cls, *seg, stroke, width, extra);
    return seg.has_value();
  }

  void circle(const std::string& id, const Circle& k, const char* stroke) {
    out_ += "    <circle id=\"" + id + "\" class=\"circle\" cx=\"" + svg_number(k.center().x) + "\" cy=\"" +
            svg_number(k.center().y) + "\" r=\"" + svg_number(k.radius()) + "\" stroke=\"" + stroke +
            "\" stroke-width=\"" + px(kStrokeCircle) + "\"/>\n";
  }

  void marker(const std::string& name, const Point2& p, bool clipped) {
    out_ += "    <circle id=\"pt-" + name + "\" class=\"point" + (clipped ? " clipped" : "") + "\" cx=\"" +
            svg_number(p.x) + "\" cy=\"" + svg_number(p.y) + "\" r=\"" + px(kPointRadius) +
            "\" fill=\"#000000\" stroke=\"none\"/>\n";
  }

  void label(const std::string& id, const std::string& text, const Point2& p) {
    const std::string k = svg_number(Rational(1) / view_.scale);
    out_ += "    <text id=\"label-" + id + "\" class=\"label\" transform=\"translate(" + svg_number(p.x) + " " +
            svg_number(p.y) + ") scale(" + k + " -" + k + ")\" dx=\"5\" dy=\"-6\" font-family=\"" + kFont +
            "\" font-size=\"" + std::to_string(kFontSize) + "\" fill=\"#000000\" stroke=\"none\">" + text +
            "</text>\n";
  }

 private:
  const Viewport& view_;
  std::string out_;
};

struct NamedPoint {
  std::string id;
  std::string text;
  Point2 point;
};

}  // namespace

RenderSpec make_render_spec(const ScenarioConfig& cfg, const std::optional<ProbePoint>& probe) {
  RenderSpec spec{.scene = derive(cfg)};
  spec.probe = probe;
  if (probe) spec.result = construct_image_geometric(spec.scene, *probe);
  return spec;
}

Viewport layout(const RenderSpec& spec) {
  if (spec.width < 64 || spec.height < 64) {
    throw std::invalid_argument("render size must be at least 64x64 pixels");
  }
  const DerivedScene& scene = spec.scene;
  const Rational rmax = max(scene.config.r1, scene.config.r2);
  const Box circles{scene.A.x, scene.D.x, -rmax, rmax};
  // Points further out than one circle-box extent are clipped, not fitted.
  const Box reach{circles.xmin - circles.width(), circles.xmax + circles.width(), circles.ymin - circles.height(),
                  circles.ymax + circles.height()};

  Box content = circles;
  auto include = [&](const Point2& p) {
    if (!reach.contains(p)) return;
    content.xmin = min(content.xmin, p.x);
    content.xmax = max(content.xmax, p.x);
    content.ymin = min(content.ymin, p.y);
    content.ymax = max(content.ymax, p.y);
  };
  if (spec.probe) include(spec.probe->point());
  if (spec.result && spec.result->Pprime.is_finite()) include(spec.result->Pprime.point());

  const Rational pad = spec.margin * max(content.width(), content.height());
  const Box padded{content.xmin - pad, content.xmax + pad, content.ymin - pad, content.ymax + pad};

  const Rational w(spec.width);
  const Rational h(spec.height);
  const Rational scale = min(w / padded.width(), h / padded.height());
  const Point2 mid = padded.center();
  const Rational tx = w / Rational(2) - scale * mid.x;
  const Rational ty = h / Rational(2) + scale * mid.y;
  const Box visible{-tx / scale, (w - tx) / scale, (ty - h) / scale, ty / scale};
  return Viewport{scale, tx, ty, padded, visible};
}

Point2 clip_to_content(const Viewport& view, const Point2& p) {
  const Box& box = view.content;
  if (box.contains(p)) return p;
  const Point2 c = box.center();
  const Rational dx = p.x - c.x;
  const Rational dy = p.y - c.y;
  Rational t(1);
  if (p.x > box.xmax) t = min(t, (box.xmax - c.x) / dx);
  if (p.x < box.xmin) t = min(t, (box.xmin - c.x) / dx);
  if (p.y > box.ymax) t = min(t, (box.ymax - c.y) / dy);
  if (p.y < box.ymin) t = min(t, (box.ymin - c.y) / dy);
  return Point2{c.x + t * dx, c.y + t * dy};
}

std::string render_svg(const RenderSpec& spec) {
  const Viewport view = layout(spec);
  const DerivedScene& scene = spec.scene;
  const std::string width = std::to_string(spec.width);
  const std::string height = std::to_string(spec.height);

  SvgWriter svg(view);
  std::string& out = svg.out();
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
         "\" viewBox=\"0 0 " + width + " " + height + "\">\n";
  out += "  <title>Image of a probe under the two-circle construction (a=" + scene.config.a.to_string() +
         ", r1=" + scene.config.r1.to_string() + ", r2=" + scene.config.r2.to_string() + ")</title>\n";
  out += "  <defs>\n    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
         "markerHeight=\"8\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#000000\"/></marker>\n"
         "  </defs>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + width + "\" height=\"" + height + "\" fill=\"#ffffff\"/>\n";
  out += "  <g id=\"model\" transform=\"matrix(" + svg_number(view.scale) + " 0 0 " + svg_number(-view.scale) + " " +
         svg_number(view.tx) + " " + svg_number(view.ty) + ")\" fill=\"none\" stroke-linecap=\"round\">\n";

  svg.full_line("axis", "axis", scene.axis, "#000000", kStrokeThin);
  if (spec.show_radical_axis) {
    svg.full_line("radical-axis", "radical-axis", Line::vertical(scene.radical_axis_x), "#7f7f7f", kStrokeThin,
                  " stroke-dasharray=\"" + svg.px(kDashOn) + " " + svg.px(kDashOff) + "\"");
  }
  svg.circle("k1", scene.k1, "#1f77b4");
  svg.circle("k2", scene.k2, "#d62728");

  std::vector<NamedPoint> named = {
      {"A", "A", scene.A}, {"B", "B", scene.B}, {"C", "C", scene.C}, {"D", "D", scene.D}};
  std::vector<std::string> notes;

  if (spec.probe) {
    const ProbePoint& probe = *spec.probe;
    svg.full_line("line-p", "probe-line", probe_line(scene.config, probe.p), "#2ca02c", kStrokeThin);
    const ExtendedScalar image_x = locus_x(scene.config, probe.p);
    if (image_x.is_finite()) {
      if (!svg.full_line("line-pprime", "image-line", Line::vertical(image_x.value()), "#9467bd", kStrokeThin)) {
        notes.push_back("line p′ at x = " + image_x.value().to_decimal(6) + " lies outside the view");
      }
    } else {
      notes.emplace_back("touching circles: no finite image line");
    }

    if (spec.result) {
      const ImageResult& r = *spec.result;
      const Point2 p = clip_to_content(view, probe.point());
      const auto [cm_lo, cm_hi] = span_of(p, scene.C, r.M);
      if (auto seg = clip_segment(cm_lo, cm_hi, view.visible)) svg.line("chord-CM", "chord", *seg, "#8c564b", kStrokeThin);
      const auto [bn_lo, bn_hi] = span_of(p, scene.B, r.N);
      if (auto seg = clip_segment(bn_lo, bn_hi, view.visible)) svg.line("chord-BN", "chord", *seg, "#8c564b", kStrokeThin);
      svg.full_line("line-AM", "construction-line", r.lineAM, "#ff7f0e", kStrokeThin);
      svg.full_line("line-DN", "construction-line", r.lineDN, "#ff7f0e", kStrokeThin);

      named.push_back({"M", "M", r.M});
      named.push_back({"N", "N", r.N});
      if (r.Pprime.is_finite()) {
        named.push_back({"Pprime", "P′", r.Pprime.point()});
        if (!view.content.contains(r.Pprime.point())) {
          notes.push_back("P′ = (" + r.Pprime.point().x.to_decimal(6) + ", " +
                          r.Pprime.point().y.to_decimal(6) + ") lies outside the view");
        }
      } else {
        notes.emplace_back("P′ at infinity");
      }
      if (r.classification.has(CaseFlag::TouchingCircles)) notes.emplace_back("AM ∥ DN");
      if (r.classification.has(CaseFlag::OnRadicalAxis) && image_x.is_finite()) {
        notes.emplace_back("p on the radical axis: p′ = p");
      }
    }
    named.insert(named.begin() + 4, NamedPoint{"P", "P", probe.point()});
  }

  const Point2 center = view.content.center();
  for (const NamedPoint& np : named) {
    const Point2 drawn = clip_to_content(view, np.point);
    const bool clipped = drawn != np.point;
    if (clipped) {
      const Point2 tail{center.x + (drawn.x - center.x) * Rational(9, 10),
                        center.y + (drawn.y - center.y) * Rational(9, 10)};
      svg.line("arrow-" + np.id, "offscreen", Segment{tail, drawn}, "#000000", kStrokeThin,
               " marker-end=\"url(#arrow)\"");
    }
    svg.marker(np.id, drawn, clipped);
  }
  if (spec.labels) {
    for (const NamedPoint& np : named) svg.label(np.id, np.text, clip_to_content(view, np.point));
  }
  out += "  </g>\n";

  long baseline = 20;
  for (const std::string& note : notes) {
    out += "  <text class=\"caption\" x=\"10\" y=\"" + std::to_string(baseline) + "\" font-family=\"" +
           std::string(kFont) + "\" font-size=\"" + std::to_string(kFontSize) + "\" fill=\"#000000\">" + note +
           "</text>\n";
    baseline += 18;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace imogeo
