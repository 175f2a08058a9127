#pragma once

#include "meander/meander.hpp"
#include "meander/noncrossing.hpp"

#include <array>
#include <string>
#include <string_view>

namespace meander
{

struct RenderOptions
{
  int width = 640;
  int height = 320;
  double stroke_width = 2.0;
  bool color_by_component = true;
  bool labels = true;

  /// Throws std::invalid_argument on non-positive dimensions or stroke.
  void validate() const;
};

/// Fixed palette cycled by component index.
inline constexpr std::array<std::string_view, 12> component_palette = {
  "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
  "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#ad494a",
};

/// SVG arc diagram: 2n points on a horizontal line, upper arcs above and
/// lower arcs below as half-ellipses. Every arc is a <path class="arc">
/// whose stroke is its curve's palette color (or black when coloring is
/// off).
std::string render_meander(MeanderSystem const &m, RenderOptions const &options = {});

/// SVG disc: points 1..n counter-clockwise on a circle, with the convex
/// hull of each block drawn as a polygon, chord or dot.
std::string render_partition_disc(NoncrossingPartition const &p, RenderOptions const &options = {});

/// Graphviz description of the Hasse diagram, one node per partition with
/// its grade as rank, one undirected edge per cover.
std::string hasse_dot(HasseGraph const &graph);
std::string hasse_dot(int n, int max_order = HasseGraph::default_hasse_cap);

} // namespace meander
