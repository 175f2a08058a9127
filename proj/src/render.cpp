#include "meander/render.hpp"

#include "meander/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace meander
{

namespace
{

constexpr double margin = 24.0;

/// Two decimals, so output is byte-stable across runs.
std::string num(double v)
{
  if (std::abs(v) < 0.005)
    v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void open_svg(std::ostringstream &out, RenderOptions const &options)
{
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"#ffffff\"/>\n";
}

} // namespace

void RenderOptions::validate() const
{
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("render dimensions must be positive");
  if (!(stroke_width > 0.0))
    throw std::invalid_argument("stroke width must be positive");
}

std::string render_meander(MeanderSystem const &m, RenderOptions const &options)
{
  options.validate();
  int const n = m.order();
  int const points = 2 * n;
  double const spacing = (options.width - 2 * margin) / std::max(1, points - 1);
  double const baseline = options.height / 2.0;
  auto x_at = [&](int position) { return margin + (position - 1) * spacing; };

  // The outermost possible arc spans all points; squash arcs vertically
  // when it would not fit in the half-height.
  double const widest = (points - 1) * spacing / 2.0;
  double const room = baseline - margin;
  double const squash = widest > room ? room / widest : 1.0;

  auto const curve = component_of(m);
  auto color_of = [&](int even_label) -> std::string {
    if (!options.color_by_component)
      return "#000000";
    auto const c = static_cast<std::size_t>(curve[static_cast<std::size_t>(even_label - 1)]);
    return std::string(component_palette[c % component_palette.size()]);
  };

  std::ostringstream out;
  open_svg(out, options);
  out << "  <line class=\"axis\" x1=\"0\" y1=\"" << num(baseline) << "\" x2=\"" << options.width << "\" y2=\""
      << num(baseline) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  auto emit_arc = [&](int i, int odd_label, bool above) {
    int const a = std::min(2 * i, 2 * odd_label - 1);
    int const b = std::max(2 * i, 2 * odd_label - 1);
    double const rx = (x_at(b) - x_at(a)) / 2.0;
    double const ry = rx * squash;
    out << "  <path class=\"arc\" data-half=\"" << (above ? "upper" : "lower") << "\" d=\"M " << num(x_at(a)) << ' '
        << num(baseline) << " A " << num(rx) << ' ' << num(ry) << " 0 0 " << (above ? 1 : 0) << ' ' << num(x_at(b))
        << ' ' << num(baseline) << "\" fill=\"none\" stroke=\"" << color_of(i) << "\" stroke-width=\""
        << num(options.stroke_width) << "\"/>\n";
  };
  for (int i = 1; i <= n; ++i)
    emit_arc(i, m.upper()(i), true);
  for (int i = 1; i <= n; ++i)
    emit_arc(i, m.lower()(i), false);

  for (int p = 1; p <= points; ++p) {
    out << "  <circle class=\"point\" cx=\"" << num(x_at(p)) << "\" cy=\"" << num(baseline) << "\" r=\""
        << num(options.stroke_width * 1.5) << "\" fill=\"#000000\"/>\n";
  }
  if (options.labels) {
    for (int p = 1; p <= points; ++p) {
      out << "  <text class=\"label\" x=\"" << num(x_at(p)) << "\" y=\"" << num(baseline + 16.0)
          << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
          << format_marked_point(MarkedPoint::at_position(p)) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_partition_disc(NoncrossingPartition const &p, RenderOptions const &options)
{
  options.validate();
  int const n = p.order();
  double const cx = options.width / 2.0;
  double const cy = options.height / 2.0;
  double const radius = std::max(1.0, std::min(options.width, options.height) / 2.0 - margin);

  // Point 1 at the top, then counter-clockwise on screen.
  auto angle = [&](int i) { return std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * (i - 1) / n; };
  auto x_at = [&](int i, double r) { return cx + r * std::cos(angle(i)); };
  auto y_at = [&](int i, double r) { return cy - r * std::sin(angle(i)); };

  std::ostringstream out;
  open_svg(out, options);
  out << "  <circle class=\"disc\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(radius)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  for (auto const &block : p.blocks()) {
    if (block.size() >= 3) {
      out << "  <polygon class=\"hull\" points=\"";
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k > 0)
          out << ' ';
        out << num(x_at(block[k], radius)) << ',' << num(y_at(block[k], radius));
      }
      out << "\" fill=\"#000000\" stroke=\"#000000\" stroke-width=\"" << num(options.stroke_width) << "\"/>\n";
    } else if (block.size() == 2) {
      out << "  <line class=\"hull\" x1=\"" << num(x_at(block[0], radius)) << "\" y1=\""
          << num(y_at(block[0], radius)) << "\" x2=\"" << num(x_at(block[1], radius)) << "\" y2=\""
          << num(y_at(block[1], radius)) << "\" stroke=\"#000000\" stroke-width=\""
          << num(options.stroke_width * 2.0) << "\"/>\n";
    } else {
      out << "  <circle class=\"hull\" cx=\"" << num(x_at(block[0], radius)) << "\" cy=\""
          << num(y_at(block[0], radius)) << "\" r=\"" << num(options.stroke_width * 3.0)
          << "\" fill=\"#000000\"/>\n";
    }
  }

  if (options.labels) {
    for (int i = 1; i <= n; ++i) {
      out << "  <text class=\"label\" x=\"" << num(x_at(i, radius + 14.0)) << "\" y=\""
          << num(y_at(i, radius + 14.0) + 4.0)
          << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string hasse_dot(HasseGraph const &graph)
{
  auto const &vertices = graph.vertices();
  std::ostringstream out;
  out << "graph hasse_" << graph.order() << " {\n"
      << "  rankdir=BT;\n"
      << "  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << format_partition(vertices[v]) << "\", rank=" << grade(vertices[v])
        << "];\n";
  }
  for (int g = 0; g < graph.order(); ++g) {
    out << "  { rank=same;";
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (grade(vertices[v]) == g)
        out << " v" << v << ';';
    }
    out << " }\n";
  }
  for (auto const &[lower, upper] : graph.edges())
    out << "  v" << lower << " -- v" << upper << ";\n";
  out << "}\n";
  return out.str();
}

std::string hasse_dot(int n, int max_order) { return hasse_dot(HasseGraph(n, max_order)); }

} // namespace meander
