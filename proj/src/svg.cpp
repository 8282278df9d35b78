#include "haulplan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace haulplan {
namespace {

constexpr const char* kPalette[] = {"#d62728", "#2ca02c", "#e6b800", "#9467bd",
                                    "#1f77b4", "#ff7f0e", "#17becf", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// World meters to drawing units.
struct Canvas {
  std::optional<PixelTransform> px;

  Vec2 map(Vec2 w) const {
    if (px) return px->to_pixel(w);
    return {w.x, -w.y};
  }
  double scale(double meters) const { return px ? meters / px->meters_per_pixel() : meters; }
};

struct Bounds {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Vec2 p, double pad = 0.0) {
    x0 = std::min(x0, p.x - pad);
    y0 = std::min(y0, p.y - pad);
    x1 = std::max(x1, p.x + pad);
    y1 = std::max(y1, p.y + pad);
  }
  bool empty() const { return !(x1 >= x0); }
};

}  // namespace

std::string render_svg(const Scenario& scenario, const ResultSet& result) {
  Canvas canvas;
  if (scenario.calibration) canvas.px = calibrate(*scenario.calibration);

  Bounds box;
  for (const auto& r : result.routes) {
    for (const VariantResult* v : {&r.turntable, &r.no_turntable}) {
      for (const auto& p : v->polyline) box.add(canvas.map({p.x, p.y}));
    }
  }
  const double tt_radius = canvas.scale(0.5 * scenario.turntable.diameter);
  for (const auto& d : scenario.dump_points) box.add(canvas.map({d.pose.x, d.pose.y}), tt_radius);
  for (const auto& p : scenario.entry_exit_pairs) {
    box.add(canvas.map({p.entry.x, p.entry.y}));
    box.add(canvas.map({p.exit.x, p.exit.y}));
  }
  if (box.empty()) box = Bounds{0.0, 0.0, 1.0, 1.0};
  if (canvas.px) {
    // Keep the image origin in view so the backdrop lines up.
    box.add({0.0, 0.0});
  }
  const double margin = std::max(10.0, 0.05 * std::max(box.x1 - box.x0, box.y1 - box.y0));
  const double vx = box.x0 - margin;
  const double vy = box.y0 - margin;
  const double vw = box.x1 - box.x0 + 2 * margin;
  const double vh = box.y1 - box.y0 + 2 * margin;
  const double stroke = std::max(vw, vh) / 400.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" "
      << "viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\">\n";
  if (!scenario.name.empty()) svg << "  <title>" << xml_escape(scenario.name) << "</title>\n";
  if (canvas.px && !scenario.image_ref.empty()) {
    svg << "  <image x=\"0\" y=\"0\" href=\"" << xml_escape(scenario.image_ref) << "\"/>\n";
  }

  svg << "  <g class=\"turntables\" fill=\"#cccccc\" fill-opacity=\"0.6\" stroke=\"#555555\" "
         "stroke-width=\""
      << num(stroke) << "\">\n";
  for (const auto& d : scenario.dump_points) {
    const Vec2 c = canvas.map({d.pose.x, d.pose.y});
    svg << "    <circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(tt_radius)
        << "\"><title>" << xml_escape(d.label) << "</title></circle>\n";
  }
  svg << "  </g>\n";

  std::size_t colour = 0;
  for (const auto& r : result.routes) {
    const char* stroke_colour = kPalette[colour++ % std::size(kPalette)];
    svg << "  <g class=\"route\" data-route=\"" << xml_escape(r.route_id) << "\" stroke=\""
        << stroke_colour << "\" fill=\"none\" stroke-width=\"" << num(stroke) << "\">\n";
    for (const VariantResult* v : {&r.turntable, &r.no_turntable}) {
      if (v->polyline.empty()) continue;
      svg << "    <polyline class=\"" << to_string(v->variant) << "\"";
      if (v->variant == Variant::NoTurntable) {
        svg << " stroke-dasharray=\"" << num(4 * stroke) << ',' << num(3 * stroke) << "\"";
      }
      svg << " points=\"";
      bool first = true;
      for (const auto& p : v->polyline) {
        const Vec2 q = canvas.map({p.x, p.y});
        svg << (first ? "" : " ") << num(q.x) << ',' << num(q.y);
        first = false;
      }
      svg << "\"/>\n";
    }
    if (r.no_turntable.trip) {
      if (const auto* rv = std::get_if<ReverseApproach>(&r.no_turntable.trip->manoeuvre)) {
        const Vec2 c = canvas.map(rv->reverse_point.position());
        svg << "    <circle class=\"cusp\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
            << "\" r=\"" << num(3 * stroke) << "\" fill=\"" << stroke_colour << "\"/>\n";
      }
    }
    svg << "  </g>\n";
  }

  svg << "  <g class=\"labels\" font-size=\"" << num(6 * stroke) << "\" fill=\"#000000\">\n";
  for (const auto& p : scenario.entry_exit_pairs) {
    const Vec2 e = canvas.map({p.entry.x, p.entry.y});
    svg << "    <text x=\"" << num(e.x) << "\" y=\"" << num(e.y) << "\">" << xml_escape(p.label)
        << "</text>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace haulplan
