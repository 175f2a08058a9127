#include "meander/surface.hpp"

#include "meander/noncrossing.hpp"

#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace meander
{

namespace
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

[[noreturn]] void internal_failure(char const *what)
{
  std::fprintf(stderr, "meander: surface invariant violated: %s\n", what);
  std::abort();
}

MarkedPoint odd_point(int label) { return {label, false}; }
MarkedPoint even_point(int label) { return {label, true}; }

} // namespace

MarkedPoint MarkedPoint::at_position(int position)
{
  return position % 2 == 0 ? even_point(position / 2) : odd_point((position + 1) / 2);
}

std::string format_marked_point(MarkedPoint p)
{
  return p.even ? std::to_string(p.label) + "'" : "^" + std::to_string(p.label);
}

CombinatorialSurface::CombinatorialSurface(Permutation sigma)
  : sigma_(std::move(sigma))
{
  int const n = sigma_.order();

  // Cycle (c1 ... ck) of sigma: corners ^c1, c1', ^c2, ..., ck'. The side
  // ci' -> ^c(i+1) is edge ci, oriented with the traversal.
  for (auto const &cycle : cycles(sigma_).cycles) {
    Face face;
    face.origin = Face::Origin::Cycle;
    for (int c : cycle) {
      face.corners.push_back(odd_point(c));
      face.sides.push_back({});
      face.corners.push_back(even_point(c));
      face.sides.push_back({c, +1});
    }
    faces_.push_back(std::move(face));
  }

  // Cycle (c1 ... ck) of the dual: corners c1', ^(c1+1), c2', ... where
  // c(i-1) + 1 = sigma(ci). The side ^sigma(ci) -> ci' is edge ci, which
  // runs from ci' to ^sigma(ci), against the traversal.
  auto const dual = dual_permutation(sigma_);
  for (auto const &cycle : cycles(dual).cycles) {
    Face face;
    face.origin = Face::Origin::DualCycle;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int const c = cycle[k];
      int const next = cycle[(k + 1) % cycle.size()];
      face.corners.push_back(even_point(c));
      face.sides.push_back({});
      face.corners.push_back(odd_point(c == n ? 1 : c + 1));
      face.sides.push_back({next, -1});
    }
    faces_.push_back(std::move(face));
  }

  glue();
}

void CombinatorialSurface::glue()
{
  int const n = sigma_.order();

  std::vector<std::size_t> offset;
  std::size_t corner_total = 0;
  for (auto const &face : faces_) {
    offset.push_back(corner_total);
    corner_total += face.corners.size();
  }

  // For each label, the (tail, head) corners of its edge in each face kind.
  struct Occurrence
  {
    std::size_t tail = 0;
    std::size_t head = 0;
    int direction = 0;
    int count = 0;
  };
  std::vector<Occurrence> forward(static_cast<std::size_t>(n + 1));
  std::vector<Occurrence> backward(static_cast<std::size_t>(n + 1));

  for (std::size_t f = 0; f < faces_.size(); ++f) {
    auto const &face = faces_[f];
    std::size_t const size = face.corners.size();
    for (std::size_t k = 0; k < size; ++k) {
      auto const &side = face.sides[k];
      if (!side.interior())
        continue;
      std::size_t const from = offset[f] + k;
      std::size_t const to = offset[f] + (k + 1) % size;
      auto &slot = side.direction > 0 ? forward[static_cast<std::size_t>(side.label)]
                                      : backward[static_cast<std::size_t>(side.label)];
      slot.tail = side.direction > 0 ? from : to;
      slot.head = side.direction > 0 ? to : from;
      slot.direction = side.direction;
      ++slot.count;
    }
  }

  UnionFind corners(corner_total);
  for (int label = 1; label <= n; ++label) {
    auto const &a = forward[static_cast<std::size_t>(label)];
    auto const &b = backward[static_cast<std::size_t>(label)];
    if (a.count != 1 || b.count != 1)
      internal_failure("edge label not shared by exactly two oppositely oriented sides");
    corners.unite(a.tail, b.tail);
    corners.unite(a.head, b.head);
  }

  std::vector<int> vertex_of_root(corner_total, -1);
  corner_vertex_.resize(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (std::size_t k = 0; k < faces_[f].corners.size(); ++k) {
      std::size_t const root = corners.find(offset[f] + k);
      auto const point = faces_[f].corners[k];
      if (vertex_of_root[root] == -1) {
        vertex_of_root[root] = static_cast<int>(vertex_points_.size());
        vertex_points_.push_back(point);
      } else if (!(vertex_points_[static_cast<std::size_t>(vertex_of_root[root])] == point)) {
        internal_failure("gluing identified two different marked points");
      }
      corner_vertex_[f].push_back(vertex_of_root[root]);
    }
  }
}

int CombinatorialSurface::cycle_face_count() const
{
  int count = 0;
  for (auto const &face : faces_)
    count += face.origin == Face::Origin::Cycle ? 1 : 0;
  return count;
}

int CombinatorialSurface::interior_edge_count() const { return order(); }

int CombinatorialSurface::edge_count() const
{
  // Interior sides pair up; boundary sides stay single.
  int boundary = 0;
  for (auto const &face : faces_) {
    for (auto const &side : face.sides)
      boundary += side.interior() ? 0 : 1;
  }
  return interior_edge_count() + boundary;
}

int CombinatorialSurface::vertex_of(int face, int corner) const
{
  return corner_vertex_[static_cast<std::size_t>(face)][static_cast<std::size_t>(corner)];
}

CombinatorialSurface build_surface(Permutation const &sigma) { return CombinatorialSurface(sigma); }

int euler_characteristic(CombinatorialSurface const &surface)
{
  return surface.vertex_count() - surface.edge_count() + surface.face_count();
}

int genus(Permutation const &sigma)
{
  int const n = sigma.order();
  auto const e = Permutation::identity(n);
  auto const s = successor(n);
  int const defect = cayley_distance(e, sigma) + cayley_distance(sigma, s) - cayley_distance(e, s);
  if (defect < 0 || defect % 2 != 0)
    internal_failure("genus defect is negative or odd");
  return defect / 2;
}

BoundaryTrace boundary_components(CombinatorialSurface const &surface)
{
  auto const vertices = static_cast<std::size_t>(surface.vertex_count());
  std::vector<int> next(vertices, -1);
  auto const &faces = surface.faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::size_t const size = faces[f].corners.size();
    for (std::size_t k = 0; k < size; ++k) {
      if (faces[f].sides[k].interior())
        continue;
      int const from = surface.vertex_of(static_cast<int>(f), static_cast<int>(k));
      int const to = surface.vertex_of(static_cast<int>(f), static_cast<int>((k + 1) % size));
      if (next[static_cast<std::size_t>(from)] != -1)
        internal_failure("boundary vertex with two outgoing boundary sides");
      next[static_cast<std::size_t>(from)] = to;
    }
  }

  BoundaryTrace trace;
  std::vector<bool> seen(vertices, false);
  for (std::size_t v = 0; v < vertices; ++v) {
    if (seen[v] || next[v] == -1)
      continue;
    ++trace.components;
    for (auto w = v; !seen[w]; w = static_cast<std::size_t>(next[w])) {
      seen[w] = true;
      if (next[w] == -1)
        internal_failure("open boundary path");
    }
  }

  if (trace.components == 1) {
    int start = -1;
    for (std::size_t v = 0; v < vertices; ++v) {
      if (surface.vertex_point(static_cast<int>(v)) == MarkedPoint{1, false})
        start = static_cast<int>(v);
    }
    int v = start;
    do {
      trace.order.push_back(surface.vertex_point(v));
      v = next[static_cast<std::size_t>(v)];
    } while (v != start);
  }
  return trace;
}

bool is_connected(CombinatorialSurface const &surface)
{
  auto const &faces = surface.faces();
  UnionFind components(faces.size());
  std::vector<int> first_face(static_cast<std::size_t>(surface.order() + 1), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (auto const &side : faces[f].sides) {
      if (!side.interior())
        continue;
      auto &first = first_face[static_cast<std::size_t>(side.label)];
      if (first == -1)
        first = static_cast<int>(f);
      else
        components.unite(static_cast<std::size_t>(first), f);
    }
  }
  for (std::size_t f = 1; f < faces.size(); ++f) {
    if (components.find(f) != components.find(0))
      return false;
  }
  return true;
}

} // namespace meander
