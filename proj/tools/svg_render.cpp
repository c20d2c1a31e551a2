#include "svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace flopkit::tools {

namespace {

double parse_rational_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct P {
  double x = 0, y = 0;
};

// Intersections of the line a*x + b*y = n with the closed window rectangle;
// the two extreme hits when the line crosses it, nothing otherwise.
std::vector<P> clip_line(double a, double b, double n, double x0, double y0,
                         double x1, double y1) {
  constexpr double eps = 1e-9;
  std::vector<P> hits;
  const auto add = [&](double x, double y) {
    if (x < x0 - eps || x > x1 + eps || y < y0 - eps || y > y1 + eps) return;
    for (const P& p : hits)
      if (std::abs(p.x - x) < eps && std::abs(p.y - y) < eps) return;
    hits.push_back({x, y});
  };
  if (std::abs(b) > eps) {
    add(x0, (n - a * x0) / b);
    add(x1, (n - a * x1) / b);
  }
  if (std::abs(a) > eps) {
    add((n - b * y0) / a, y0);
    add((n - b * y1) / a, y1);
  }
  if (hits.size() < 2) return {};
  // Keep the two most distant hits (corner passes can produce duplicates).
  std::pair<P, P> best{hits[0], hits[0]};
  double best_d = -1;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      const double dx = hits[i].x - hits[j].x, dy = hits[i].y - hits[j].y;
      const double d = dx * dx + dy * dy;
      if (d > best_d) {
        best_d = d;
        best = {hits[i], hits[j]};
      }
    }
  }
  if (best_d < eps) return {};
  return {best.first, best.second};
}

std::string polyline(const std::string& cls, double width, const P& p, const P& q) {
  return "<polyline class=\"" + cls + "\" stroke-width=\"" + fmt(width) +
         "\" points=\"" + fmt(p.x) + "," + fmt(p.y) + " " + fmt(q.x) + "," +
         fmt(q.y) + "\"/>\n";
}

std::string svg_open(double x, double y, double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         fmt(x) + " " + fmt(y) + " " + fmt(w) + " " + fmt(h) +
         "\">\n"
         "<style>polyline{stroke:#1a1a1a;fill:none;stroke-linecap:round}"
         "rect{fill:none;stroke:#9a9a9a;stroke-width:1}</style>\n";
}

std::string render_1d(const nlohmann::json& j, double scale) {
  const double lo = parse_rational_string(j["window"]["lo"][0].get<std::string>());
  const double hi = parse_rational_string(j["window"]["hi"][0].get<std::string>());
  constexpr double height = 40, axis_y = 20, tick_top = 4, tick_bottom = 36;

  std::string out = svg_open(lo * scale, 0, (hi - lo) * scale, height);
  out += polyline("axis", 1.0, {lo * scale, axis_y}, {hi * scale, axis_y});
  for (const auto& w : j["walls"]) {
    const double x = scale * static_cast<double>(w["level"].get<long long>()) /
                     static_cast<double>(w["normal"][0].get<long long>());
    const int label = w.value("label", 1);
    out += polyline("label-" + std::to_string(label), 4.0 / label, {x, tick_top},
                    {x, tick_bottom});
  }
  return out + "</svg>\n";
}

std::string render_2d(const nlohmann::json& j, double scale) {
  const double x0 = parse_rational_string(j["window"]["lo"][0].get<std::string>());
  const double y0 = parse_rational_string(j["window"]["lo"][1].get<std::string>());
  const double x1 = parse_rational_string(j["window"]["hi"][0].get<std::string>());
  const double y1 = parse_rational_string(j["window"]["hi"][1].get<std::string>());

  std::string out = svg_open(x0 * scale, y0 * scale, (x1 - x0) * scale, (y1 - y0) * scale);
  out += "<rect x=\"" + fmt(x0 * scale) + "\" y=\"" + fmt(y0 * scale) + "\" width=\"" +
         fmt((x1 - x0) * scale) + "\" height=\"" + fmt((y1 - y0) * scale) + "\"/>\n";
  // SVG's y axis points down; reflect within the window's own range.
  const auto flip = [&](const P& p) { return P{p.x * scale, (y0 + y1 - p.y) * scale}; };
  for (const auto& w : j["walls"]) {
    const auto seg = clip_line(static_cast<double>(w["normal"][0].get<long long>()),
                               static_cast<double>(w["normal"][1].get<long long>()),
                               static_cast<double>(w["level"].get<long long>()), x0, y0,
                               x1, y1);
    if (seg.size() == 2) out += polyline("wall", 1.5, flip(seg[0]), flip(seg[1]));
  }
  return out + "</svg>\n";
}

}  // namespace

std::string render_arrangement_svg(const std::string& arrangement_json, double scale) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(arrangement_json);
  } catch (const nlohmann::json::exception&) {
    throw std::runtime_error("malformed arrangement document");
  }
  if (!j.contains("dimension") || !j.contains("walls") || !j.contains("window"))
    throw std::runtime_error("malformed arrangement document");
  if (!(scale > 0)) throw std::runtime_error("scale must be positive");
  const int dim = j["dimension"].get<int>();
  if (dim == 1) return render_1d(j, scale);
  if (dim == 2) return render_2d(j, scale);
  throw std::runtime_error("unsupported dimension");
}

}  // namespace flopkit::tools
