#pragma once

#include "tmdim/topology.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <tuple>

namespace tmdim {

struct SvgStyle {
  double size = 480;  // longer side of the domain, in px
  double margin = 16;
};

/// Faces as rectangles, l-edges colored by kind (interior red, cross-cut
/// blue, ray green), mono-vertices as filled dots, free vertices as squares.
inline std::string render_svg(const TMesh& mesh, const SvgStyle& style = {}) {
  require_valid(mesh);
  const Topology topo = extract_topology(mesh);
  const auto &xk = mesh.x_knots(), &yk = mesh.y_knots();
  const double x0 = xk.front().get_d(), y0 = yk.front().get_d();
  const double w = xk.back().get_d() - x0, h = yk.back().get_d() - y0;
  const double scale = style.size / std::max(w, h);
  const double width = w * scale + 2 * style.margin, height = h * scale + 2 * style.margin;
  auto px = [&](int ix) { return style.margin + (xk[ix].get_d() - x0) * scale; };
  auto py = [&](int iy) { return height - style.margin - (yk[iy].get_d() - y0) * scale; };

  std::string out;
  char buf[256];
  auto emit = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
  };
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  emit("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.2f\" height=\"%.2f\" viewBox=\"0 0 %.2f %.2f\">\n",
       width, height, width, height);
  out += "<g id=\"faces\" fill=\"#f4f4f4\" stroke=\"#555555\" stroke-width=\"1\">\n";
  // sorted so the drawing does not depend on the face storage order
  auto faces = mesh.faces();
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return std::tie(a.iy0, a.ix0) < std::tie(b.iy0, b.ix0); });
  for (const auto& f : faces)
    emit("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>\n", px(f.ix0), py(f.iy1), px(f.ix1) - px(f.ix0),
         py(f.iy0) - py(f.iy1));
  out += "</g>\n";

  out += "<g id=\"ledges\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (const auto& l : topo.ledges) {
    const char* color = l.kind == LEdgeKind::InteriorLEdge ? "#d62728" : l.kind == LEdgeKind::CrossCut ? "#1f77b4" : "#2ca02c";
    const auto& a = topo.vertices[l.vertices.front()].at;
    const auto& b = topo.vertices[l.vertices.back()].at;
    emit("<line class=\"%s\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\"/>\n", to_string(l.kind), px(a.ix),
         py(a.iy), px(b.ix), py(b.iy), color);
  }
  out += "</g>\n";

  out += "<g id=\"vertices\">\n";
  for (const auto& v : topo.vertices) {
    if (v.mono)
      emit("<circle class=\"mono\" cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#000000\"/>\n", px(v.at.ix), py(v.at.iy));
    else if (v.free)
      emit("<rect class=\"free\" x=\"%.2f\" y=\"%.2f\" width=\"8\" height=\"8\" fill=\"#ffffff\" stroke=\"#000000\"/>\n",
           px(v.at.ix) - 4, py(v.at.iy) - 4);
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace tmdim
