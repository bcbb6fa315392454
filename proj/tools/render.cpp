#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gasket::cli {

namespace {

const double kHeight = std::sqrt(3.0) / 2.0;

std::string num(double v) {
  if (std::fabs(v) < 5e-7) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double svg_x(const Point& p) { return to_double(p.cartesian_x()); }
double svg_y(const Point& p) { return kHeight - p.cartesian_y(); }

std::string coords(const Point& p) { return num(svg_x(p)) + "," + num(svg_y(p)); }

double stroke_for(int level, double requested) {
  if (requested > 0) return requested;
  return std::max(0.0008, 0.012 * std::pow(0.6, level));
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 " + num(kHeight) +
         "\" width=\"800\" height=\"" + num(800 * kHeight) + "\">\n";
}

std::string outline(const CellGraph& cell, const SvgStyle& style) {
  std::string pts;
  for (const auto& p : cell.boundary) pts += (pts.empty() ? "" : " ") + coords(p);
  return "<polygon points=\"" + pts + "\" fill=\"none\" stroke=\"" + style.outline + "\" stroke-width=\"0.002\"/>\n";
}

}  // namespace

std::string render_edges_svg(const ExplicitGraph& g, const std::vector<int>& edge_ids, const SvgStyle& style) {
  std::string out = header() + outline(*g.cell(), style);
  out += "<g stroke=\"" + style.stroke + "\" stroke-width=\"" + num(stroke_for(g.level(), style.width)) +
         "\" stroke-linecap=\"round\">\n";
  for (int e : edge_ids) {
    auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
    const Point& p = g.coords()[static_cast<std::size_t>(a)];
    const Point& q = g.coords()[static_cast<std::size_t>(b)];
    out += "<line x1=\"" + num(svg_x(p)) + "\" y1=\"" + num(svg_y(p)) + "\" x2=\"" + num(svg_x(q)) + "\" y2=\"" +
           num(svg_y(q)) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_forest_svg(const SpanningForest& forest, const SvgStyle& style) {
  return render_edges_svg(*forest.host, forest.edge_ids(), style);
}

std::string render_path_svg(const ExplicitGraph& g, const std::vector<int>& path, const SvgStyle& style) {
  std::string out = header() + outline(*g.cell(), style);
  std::string pts;
  for (int v : path) pts += (pts.empty() ? "" : " ") + coords(g.coords()[static_cast<std::size_t>(v)]);
  out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"" +
         num(stroke_for(g.level(), style.width)) + "\" stroke-linejoin=\"round\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string render_cells_svg(const CellGraph& cell, const std::vector<Word>& cells, const SvgStyle& style) {
  std::string out = header() + outline(cell, style);
  out += "<g fill=\"" + style.fill + "\" stroke=\"none\">\n";
  for (const auto& w : cells) {
    AffineMap m = word_map(cell, w);
    std::string pts;
    for (const auto& p : cell.boundary) pts += (pts.empty() ? "" : " ") + coords(m.apply(p));
    out += "<polygon points=\"" + pts + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace gasket::cli
