#pragma once

#include "meander/permutation.hpp"

#include <string>
#include <vector>

namespace meander
{

/// One of the 2n crossing points. Odd point i sits at line position
/// 2i - 1 and even point i' at 2i.
struct MarkedPoint
{
  int label = 1;
  bool even = false;

  int position() const { return even ? 2 * label : 2 * label - 1; }
  static MarkedPoint at_position(int position);

  friend bool operator==(MarkedPoint const &, MarkedPoint const &) = default;
};

std::string format_marked_point(MarkedPoint p);

/// A side of a face between two consecutive corners. Interior sides carry
/// an edge label in 1..n and a direction: +1 when the labelled edge runs
/// along the face's counter-clockwise traversal, -1 when against it.
/// Boundary sides have label 0.
struct FaceSide
{
  int label = 0;
  int direction = 0;

  bool interior() const { return label != 0; }
};

/// A disc whose boundary alternates marked points and sides. sides[k] runs
/// from corners[k] to corners[(k + 1) % size].
struct Face
{
  enum class Origin
  {
    Cycle,
    DualCycle,
  };

  Origin origin = Origin::Cycle;
  std::vector<MarkedPoint> corners;
  std::vector<FaceSide> sides;
};

/// Oriented surface glued from one disc per cycle of sigma and one per
/// cycle of its dual sigma^-1 s. Interior edge i runs from i' to the odd
/// point sigma(i) and is shared by exactly one face of each kind.
class CombinatorialSurface
{
public:
  explicit CombinatorialSurface(Permutation sigma);

  int order() const { return sigma_.order(); }
  Permutation const &permutation() const { return sigma_; }
  std::vector<Face> const &faces() const { return faces_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int cycle_face_count() const;
  int vertex_count() const { return static_cast<int>(vertex_points_.size()); }
  int edge_count() const;
  int interior_edge_count() const;

  /// vertex_of(f, k) is the glued vertex of corner k of face f.
  int vertex_of(int face, int corner) const;

  /// Marked point carried by a glued vertex.
  MarkedPoint vertex_point(int vertex) const { return vertex_points_[static_cast<std::size_t>(vertex)]; }

private:
  void glue();

  Permutation sigma_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> corner_vertex_;
  std::vector<MarkedPoint> vertex_points_;
};

CombinatorialSurface build_surface(Permutation const &sigma);

/// V - E + F of the glued complex.
int euler_characteristic(CombinatorialSurface const &surface);

/// (d(e, sigma) + d(sigma, s) - d(e, s)) / 2.
int genus(Permutation const &sigma);

struct BoundaryTrace
{
  int components = 0;
  /// Marked points around the boundary starting at odd point 1, following
  /// the faces' orientation. Filled only when there is one component.
  std::vector<MarkedPoint> order;
};

BoundaryTrace boundary_components(CombinatorialSurface const &surface);

/// Faces are connected through shared interior edges.
bool is_connected(CombinatorialSurface const &surface);

} // namespace meander
