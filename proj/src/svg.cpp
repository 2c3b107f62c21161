#include "rotset/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "rotset/vec2.hpp"

namespace rotset {

namespace {

constexpr double kView = 800.0;

struct Frame {
  double x0, y0, x1, y1;  // data bounds after padding

  double px(double x) const { return (x - x0) / (x1 - x0) * kView; }
  double py(double y) const { return kView - (y - y0) / (y1 - y0) * kView; }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void expand(double& lo, double& hi, double v) {
  lo = std::min(lo, v);
  hi = std::max(hi, v);
}

std::string polygon_points(const ConvexRegion& r, const Frame& fr) {
  std::string pts;
  for (const Vec2& p : r.vertices()) {
    if (!pts.empty()) pts += ' ';
    pts += num(fr.px(p.x)) + "," + num(fr.py(p.y));
  }
  return pts;
}

void draw_region(std::ostringstream& os, const ConvexRegion& r, const Frame& fr,
                 const std::string& stroke, const std::string& fill, double width) {
  if (r.empty()) return;
  if (r.size() == 1) {
    const Vec2 p = r.vertices()[0];
    os << "<circle cx=\"" << num(fr.px(p.x)) << "\" cy=\"" << num(fr.py(p.y))
       << "\" r=\"4\" stroke=\"" << stroke << "\" fill=\""
       << (fill == "none" ? stroke : fill) << "\"/>\n";
    return;
  }
  if (r.size() == 2) {
    const Vec2 a = r.vertices()[0], b = r.vertices()[1];
    os << "<line x1=\"" << num(fr.px(a.x)) << "\" y1=\"" << num(fr.py(a.y)) << "\" x2=\""
       << num(fr.px(b.x)) << "\" y2=\"" << num(fr.py(b.y)) << "\" stroke=\"" << stroke
       << "\" stroke-width=\"" << num(width) << "\"/>\n";
    return;
  }
  os << "<polygon points=\"" << polygon_points(r, fr) << "\" stroke=\"" << stroke
     << "\" fill=\"" << fill << "\" stroke-width=\"" << num(width)
     << (fill != "none" ? "\" fill-opacity=\"0.35" : "") << "\"/>\n";
}

double nice_step(double span) {
  const double raw = span / 8.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double mult : {1.0, 2.0, 5.0}) {
    if (raw <= mult * mag) return mult * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_report_svg(const Report& rep) {
  struct Layer {
    ConvexRegion region;
    std::string stroke;
    std::string fill;
    std::string label;
  };
  std::vector<Layer> layers;
  const auto add = [&](const std::string& prefix, const std::string& stroke,
                       const std::string& fill, const std::string& label) {
    if (rep.has(prefix + ".count")) {
      const ConvexRegion r = rep.get_region(prefix);
      if (!r.empty()) layers.push_back({r, stroke, fill, label});
    }
  };
  add("estimate.outer", "#78909c", "none", "outer estimate");
  add("estimate.inner", "#1565c0", "#90caf9", "inner estimate");
  add("classical.outer", "#78909c", "none", "classical outer");
  add("classical.inner", "#1565c0", "#90caf9", "classical inner");
  add("zaction.outer", "#8d6e63", "none", "zaction outer");
  add("zaction.inner", "#2e7d32", "#a5d6a7", "zaction inner");
  add("theorem.image_inner", "#c62828", "none", "projected image");

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  for (const Layer& l : layers) {
    for (const Vec2& p : l.region.vertices()) {
      expand(x0, x1, p.x);
      expand(y0, y1, p.y);
    }
  }
  if (layers.empty()) {
    x0 = y0 = -1.0;
    x1 = y1 = 1.0;
  }
  if (x1 - x0 < 1e-9) {
    x0 -= 0.5;
    x1 += 0.5;
  }
  if (y1 - y0 < 1e-9) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double padx = 0.1 * (x1 - x0), pady = 0.1 * (y1 - y0);
  const Frame fr{x0 - padx, y0 - pady, x1 + padx, y1 + pady};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
     << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  // Axis ticks.
  const double step = nice_step(std::max(fr.x1 - fr.x0, fr.y1 - fr.y0));
  os << "<g stroke=\"#bdbdbd\" stroke-width=\"0.5\" font-size=\"11\" font-family=\"monospace\">\n";
  for (double x = std::ceil(fr.x0 / step) * step; x <= fr.x1 + 1e-12; x += step) {
    os << "<line x1=\"" << num(fr.px(x)) << "\" y1=\"0\" x2=\"" << num(fr.px(x))
       << "\" y2=\"800\"/>\n";
    os << "<text x=\"" << num(fr.px(x) + 2) << "\" y=\"795\" stroke=\"none\" fill=\"#616161\">"
       << num(x) << "</text>\n";
  }
  for (double y = std::ceil(fr.y0 / step) * step; y <= fr.y1 + 1e-12; y += step) {
    os << "<line x1=\"0\" y1=\"" << num(fr.py(y)) << "\" x2=\"800\" y2=\"" << num(fr.py(y))
       << "\"/>\n";
    os << "<text x=\"5\" y=\"" << num(fr.py(y) - 3) << "\" stroke=\"none\" fill=\"#616161\">"
       << num(y) << "</text>\n";
  }
  os << "</g>\n";

  // Pulled-back infinity line, clipped to the viewport frame.
  if (rep.has("hypothesis.line")) {
    const auto coeffs = rep.get_doubles("hypothesis.line");
    if (coeffs.size() == 3) {
      const double u = coeffs[0], v = coeffs[1], w = coeffs[2];
      std::vector<Vec2> hits;
      const auto try_point = [&](double x, double y) {
        if (x >= fr.x0 - 1e-9 && x <= fr.x1 + 1e-9 && y >= fr.y0 - 1e-9 && y <= fr.y1 + 1e-9) {
          hits.push_back({x, y});
        }
      };
      if (v != 0.0) {
        try_point(fr.x0, -(u * fr.x0 + w) / v);
        try_point(fr.x1, -(u * fr.x1 + w) / v);
      }
      if (u != 0.0) {
        try_point(-(v * fr.y0 + w) / u, fr.y0);
        try_point(-(v * fr.y1 + w) / u, fr.y1);
      }
      if (hits.size() >= 2) {
        os << "<line x1=\"" << num(fr.px(hits[0].x)) << "\" y1=\"" << num(fr.py(hits[0].y))
           << "\" x2=\"" << num(fr.px(hits[1].x)) << "\" y2=\"" << num(fr.py(hits[1].y))
           << "\" stroke=\"#d84315\" stroke-width=\"1.5\" stroke-dasharray=\"8 4\"/>\n";
      }
    }
  }

  for (const Layer& l : layers) {
    draw_region(os, l.region, fr, l.stroke, l.fill, 1.5);
  }

  // Legend.
  os << "<g font-size=\"13\" font-family=\"monospace\">\n";
  double ly = 20.0;
  for (const Layer& l : layers) {
    os << "<rect x=\"620\" y=\"" << num(ly - 10) << "\" width=\"12\" height=\"12\" fill=\""
       << (l.fill == "none" ? "#ffffff" : l.fill) << "\" stroke=\"" << l.stroke << "\"/>\n"
       << "<text x=\"638\" y=\"" << num(ly) << "\" fill=\"#212121\">" << l.label << "</text>\n";
    ly += 18.0;
  }
  if (rep.has("hypothesis.line")) {
    os << "<line x1=\"620\" y1=\"" << num(ly - 5) << "\" x2=\"632\" y2=\"" << num(ly - 5)
       << "\" stroke=\"#d84315\" stroke-dasharray=\"4 2\"/>\n"
       << "<text x=\"638\" y=\"" << num(ly) << "\" fill=\"#212121\">infinity-line pullback</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace rotset
