#pragma once

#include <string>
#include <vector>

#include "gasket/geometry.hpp"

namespace gasket::cli {

struct SvgStyle {
  std::string stroke = "#1d3557";
  std::string fill = "#e63946";
  std::string outline = "#9aa5b1";
  double width = 0;  // 0: chosen from the level
};

// View box [0,1] x [0,sqrt(3)/2], y flipped so u3 is at the top. Coordinates
// are printed with six decimals, so equal input gives identical bytes.
std::string render_edges_svg(const ExplicitGraph& g, const std::vector<int>& edge_ids, const SvgStyle& style = {});
std::string render_forest_svg(const SpanningForest& forest, const SvgStyle& style = {});
std::string render_path_svg(const ExplicitGraph& g, const std::vector<int>& path, const SvgStyle& style = {});
std::string render_cells_svg(const CellGraph& cell, const std::vector<Word>& cells, const SvgStyle& style = {});

}  // namespace gasket::cli
