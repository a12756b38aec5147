#include "majorana/plot.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace majorana {

namespace {

constexpr int kCircleSamples = 180;
constexpr double kMargin = 24;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

struct View {
  bool back;
  double cx, cy, r;

  Eigen::Vector2d screen(const Eigen::Vector3d& p, bool* visible) const {
    const Eigen::Vector2d q = project(p, back, visible);
    return {cx + r * q.x(), cy - r * q.y()};
  }
};

void draw_frame(std::ostringstream& os, const View& v, const char* title) {
  os << "<circle cx=\"" << fmt(v.cx) << "\" cy=\"" << fmt(v.cy) << "\" r=\"" << fmt(v.r)
     << "\" fill=\"#f4f6fb\" stroke=\"#333\" stroke-width=\"1.2\"/>\n";
  // Equator seen edge-on from the side.
  os << "<line x1=\"" << fmt(v.cx - v.r) << "\" y1=\"" << fmt(v.cy) << "\" x2=\"" << fmt(v.cx + v.r) << "\" y2=\""
     << fmt(v.cy) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  os << "<text x=\"" << fmt(v.cx) << "\" y=\"" << fmt(v.cy - v.r - 8)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
}

void draw_circle(std::ostringstream& os, const View& v, const PlotCircle& c) {
  const double norm = c.normal.norm();
  if (norm == 0) return;
  const Eigen::Vector3d n = c.normal / norm;
  const double h = c.offset / norm;
  if (std::abs(h) >= 1) return;
  const double rho = std::sqrt(1 - h * h);
  Eigen::Vector3d e1 = n.unitOrthogonal();
  Eigen::Vector3d e2 = n.cross(e1);
  std::vector<std::vector<Eigen::Vector2d>> runs(1);
  for (int i = 0; i <= kCircleSamples; ++i) {
    const double t = 2 * std::numbers::pi * i / kCircleSamples;
    const Eigen::Vector3d p = h * n + rho * (std::cos(t) * e1 + std::sin(t) * e2);
    bool visible = false;
    const Eigen::Vector2d s = v.screen(p, &visible);
    if (visible) {
      runs.back().push_back(s);
    } else if (!runs.back().empty()) {
      runs.emplace_back();
    }
  }
  for (const auto& run : runs) {
    if (run.size() < 2) continue;
    os << "<polyline fill=\"none\" stroke=\"#2a7\" stroke-width=\"1\" points=\"";
    for (size_t i = 0; i < run.size(); ++i) os << (i ? " " : "") << fmt(run[i].x()) << "," << fmt(run[i].y());
    os << "\"/>\n";
  }
}

void draw_marker(std::ostringstream& os, const View& v, const PlotMarker& m) {
  bool visible = false;
  const Eigen::Vector2d s = v.screen(to_cartesian(m.point), &visible);
  if (!visible) return;
  os << "<circle cx=\"" << fmt(s.x()) << "\" cy=\"" << fmt(s.y()) << "\" r=\"5\" fill=\"#c22\" stroke=\"#600\"/>\n";
  if (m.multiplicity > 1) {
    os << "<text x=\"" << fmt(s.x() + 7) << "\" y=\"" << fmt(s.y() - 7)
       << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#600\">" << m.multiplicity << "</text>\n";
  }
}

}  // namespace

Eigen::Vector2d project(const Eigen::Vector3d& p, bool back, bool* visible) {
  if (visible) *visible = back ? p.y() >= 0 : p.y() <= 0;
  return {back ? -p.x() : p.x(), p.z()};
}

PlotSpec make_plot_spec(const ClusteredRoots& sites, const CircleSignature* circles) {
  PlotSpec spec;
  for (const auto& s : sites.sites) spec.markers.push_back({to_sphere(s.point), s.multiplicity});
  if (circles) {
    for (const auto& c : circles->circles) {
      const Eigen::Vector3d a = to_cartesian(c.through[0]);
      const Eigen::Vector3d b = to_cartesian(c.through[1]);
      const Eigen::Vector3d d = to_cartesian(c.through[2]);
      const Eigen::Vector3d n = (b - a).cross(d - a);
      spec.circles.push_back({n, n.dot(a)});
    }
  }
  return spec;
}

std::string render_svg(const PlotSpec& spec) {
  const double r = spec.radius;
  const double width = 4 * r + 4 * kMargin;
  const double height = 2 * r + 3 * kMargin;
  const View front{false, kMargin + r, 2 * kMargin + r, r};
  const View back{true, 3 * kMargin + 3 * r, 2 * kMargin + r, r};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  for (const View* v : {&front, &back}) {
    draw_frame(os, *v, v->back ? "back" : "front");
    for (const auto& c : spec.circles) draw_circle(os, *v, c);
    for (const auto& m : spec.markers) draw_marker(os, *v, m);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace majorana
