/*******************************************************************************
* Copyright 2026 the mlspace authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*******************************************************************************/

#include "mlspace/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mlspace/functionals.hpp"

namespace mlspace {

namespace {

constexpr double kCanvas = 640.0;   // square canvas, CSS pixels
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Frame {
  double radius;  // world box is [-radius, radius]^2

  double sx(double x) const {
    return kMargin + (x + radius) / (2.0 * radius) * (kCanvas - 2.0 * kMargin);
  }
  double sy(double y) const {
    return kMargin + (radius - y) / (2.0 * radius) * (kCanvas - 2.0 * kMargin);
  }
};

void line(std::ostringstream& out, const Frame& fr, const Vec& a, const Vec& b,
          const std::string& cls, const std::string& role, const std::string& extra = "") {
  out << "  <line class=\"" << cls << "\" data-role=\"" << role << "\" x1=\"" << px(fr.sx(a[0]))
      << "\" y1=\"" << px(fr.sy(a[1])) << "\" x2=\"" << px(fr.sx(b[0])) << "\" y2=\""
      << px(fr.sy(b[1])) << "\"" << extra << "/>\n";
}

void marker(std::ostringstream& out, const Frame& fr, const Vec& p, const std::string& cls,
            const std::string& role, int index, const std::string& label) {
  const double cx = fr.sx(p[0]);
  const double cy = fr.sy(p[1]);
  out << "  <g class=\"" << cls << "\" data-role=\"" << role << "\" data-index=\"" << index
      << "\" data-x=\"" << num(p[0]) << "\" data-y=\"" << num(p[1]) << "\">\n";
  if (role == "point") {
    out << "    <circle cx=\"" << px(cx) << "\" cy=\"" << px(cy) << "\" r=\"5\"/>\n";
  } else if (role == "conenorm_l") {
    out << "    <rect x=\"" << px(cx - 4.5) << "\" y=\"" << px(cy - 4.5)
        << "\" width=\"9\" height=\"9\"/>\n";
  } else {
    out << "    <rect x=\"" << px(cx - 4.5) << "\" y=\"" << px(cy - 4.5)
        << "\" width=\"9\" height=\"9\" transform=\"rotate(45 " << px(cx) << " " << px(cy)
        << ")\"/>\n";
  }
  out << "    <title>" << label << " = (" << num(p[0]) << ", " << num(p[1]) << ")</title>\n";
  out << "  </g>\n";
}

}  // namespace

std::string render_ray_plot(const RayConeSpace& sp, const std::vector<Vec>& points) {
  if (sp.dim() != 2) {
    throw std::invalid_argument("render_ray_plot: the space must be two-dimensional");
  }
  if (points.size() > 16) {
    throw std::invalid_argument("render_ray_plot: at most 16 points are supported");
  }
  for (const Vec& p : points) {
    if (p.size() != 2) {
      throw std::invalid_argument("render_ray_plot: every point must be two-dimensional");
    }
  }

  // Cone projections first: the frame has to enclose the images as well.
  std::vector<Vec> img_l, img_r;
  img_l.reserve(points.size());
  img_r.reserve(points.size());
  for (const Vec& p : points) {
    img_l.push_back(cone_norm_q(sp, p, 'l'));
    img_r.push_back(cone_norm_q(sp, p, 'r'));
  }

  double extent = 1.0;
  auto grow = [&extent](const Vec& v) {
    extent = std::max({extent, std::fabs(v[0]), std::fabs(v[1])});
  };
  for (const Vec& p : points) grow(p);
  for (const Vec& p : img_l) grow(p);
  for (const Vec& p : img_r) grow(p);
  const Frame fr{1.25 * extent};
  const double diag = 2.0 * fr.radius;  // long enough to leave the world box

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)kCanvas << "\" height=\""
      << (int)kCanvas << "\" viewBox=\"0 0 " << (int)kCanvas << " " << (int)kCanvas << "\">\n";
  out << "  <desc>two-dimensional ray/cone space: facet boundaries, distinguished ray, "
      << points.size() << " marked points with cone-projection images</desc>\n";
  out << "  <style>\n"
         "    .bg{fill:#ffffff;stroke:#c8c8c8;}\n"
         "    .axis{stroke:#d0d0d0;stroke-width:1;}\n"
         "    .facet{stroke:#1f77b4;stroke-width:2;}\n"
         "    .facet-inactive{stroke:#9ecae1;stroke-width:1.5;stroke-dasharray:6 4;}\n"
         "    .ray{stroke:#d62728;stroke-width:2.5;}\n"
         "    .link{stroke:#bbbbbb;stroke-width:1;}\n"
         "    .pt circle{fill:#2ca02c;stroke:#145214;stroke-width:1;}\n"
         "    .ql rect{fill:#ff7f0e;stroke:#8c4606;stroke-width:1;}\n"
         "    .qr rect{fill:#9467bd;stroke:#4a2e66;stroke-width:1;}\n"
         "    text{font-family:monospace;font-size:12px;fill:#333333;}\n"
         "  </style>\n";
  out << "  <rect class=\"bg\" x=\"0.5\" y=\"0.5\" width=\"" << (int)kCanvas - 1 << "\" height=\""
      << (int)kCanvas - 1 << "\"/>\n";

  // Coordinate axes.
  line(out, fr, {-fr.radius, 0.0}, {fr.radius, 0.0}, "axis", "axis");
  line(out, fr, {0.0, -fr.radius}, {0.0, fr.radius}, "axis", "axis");

  // Facet boundary half-lines. Each facet normal a contributes the boundary
  // line a.z = 0; the half-line lying on the cone edge is drawn solid, a
  // redundant facet (no boundary direction inside the cone) dashed in full.
  const auto& rows = sp.facet_normals();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Vec& a = rows[i];
    Vec d = {-a[1], a[0]};
    const double len = std::hypot(d[0], d[1]);
    if (len == 0.0) continue;
    d[0] *= diag / len;
    d[1] *= diag / len;
    const Vec md = {-d[0], -d[1]};
    const std::string meta = " data-index=\"" + std::to_string(i) + "\" data-x=\"" + num(a[0]) +
                             "\" data-y=\"" + num(a[1]) + "\"";
    if (sp.cone_member(d)) {
      line(out, fr, {0.0, 0.0}, d, "facet", "facet", meta);
    } else if (sp.cone_member(md)) {
      line(out, fr, {0.0, 0.0}, md, "facet", "facet", meta);
    } else {
      line(out, fr, md, d, "facet-inactive", "facet", meta);
    }
  }

  // Distinguished ray.
  {
    Vec r = sp.ray_direction();
    const double len = std::hypot(r[0], r[1]);
    Vec tip = {r[0] * diag / len, r[1] * diag / len};
    out << "  <line class=\"ray\" data-role=\"ray\" data-x=\"" << num(r[0]) << "\" data-y=\""
        << num(r[1]) << "\" x1=\"" << px(fr.sx(0)) << "\" y1=\"" << px(fr.sy(0)) << "\" x2=\""
        << px(fr.sx(tip[0])) << "\" y2=\"" << px(fr.sy(tip[1])) << "\"/>\n";
  }

  // Points and their cone-projection images, linked by thin guide lines.
  for (std::size_t i = 0; i < points.size(); ++i) {
    line(out, fr, points[i], img_l[i], "link", "link_l");
    line(out, fr, points[i], img_r[i], "link", "link_r");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int idx = static_cast<int>(i);
    marker(out, fr, img_l[i], "ql", "conenorm_l", idx, "Q_l(z" + std::to_string(i) + ")");
    marker(out, fr, img_r[i], "qr", "conenorm_r", idx, "Q_r(z" + std::to_string(i) + ")");
    marker(out, fr, points[i], "pt", "point", idx, "z" + std::to_string(i));
  }

  out << "  <text x=\"12\" y=\"20\">circle: input point; square: initial-variant image; "
         "diamond: specific-variant image</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace mlspace
