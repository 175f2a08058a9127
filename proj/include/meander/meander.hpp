#pragma once

#include "meander/noncrossing.hpp"
#include "meander/permutation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace meander
{

/// A system of closed curves crossing a horizontal line at 2n points.
/// Above the line, even point i' is joined to odd point upper(i); below,
/// i' is joined to lower(i). Both halves must be noncrossing, i.e. both
/// permutations lie in the interval from e to s.
class MeanderSystem
{
public:
  /// Throws NotInLattice if either half is not noncrossing and
  /// OrderMismatch if the orders differ.
  MeanderSystem(Permutation upper, Permutation lower);

  int order() const { return upper_.order(); }
  Permutation const &upper() const { return upper_; }
  Permutation const &lower() const { return lower_; }

  friend bool operator==(MeanderSystem const &, MeanderSystem const &) = default;

private:
  Permutation upper_;
  Permutation lower_;
};

/// Number of closed curves: the cycle count of upper^-1 lower.
int components(MeanderSystem const &m);

/// component_of(m)[i - 1] is the curve (0-based, numbered by first even
/// point) passing through i'. Both arcs at i' belong to that curve.
std::vector<int> component_of(MeanderSystem const &m);

/// A single closed curve, i.e. the halves are at distance n - 1.
bool is_meander(MeanderSystem const &m);

/// Dualizes both halves. Preserves the component count.
MeanderSystem simultaneous_dual(MeanderSystem const &m);

/// Largest order enumerate_meanders accepts unless overridden.
inline constexpr int default_meander_cap = 10;

struct EnumerationOptions
{
  bool count_only = true;
  int jobs = 1;
  int max_order = default_meander_cap;
};

struct MeanderEnumeration
{
  int order = 0;
  unsigned long long count = 0;
  /// Ordered (upper, lower) pairs; upper varies slowest, both in
  /// enumerate_nc order. Empty when counting only.
  std::vector<std::pair<Permutation, Permutation>> pairs;

  /// {"order":n,"count":M} plus "pairs" as [upper, lower] cycle notation
  /// when pairs were collected.
  std::string to_json(bool include_pairs) const;
};

/// Counts ordered pairs of noncrossing partitions forming one closed
/// curve. The result does not depend on options.jobs.
MeanderEnumeration enumerate_meanders(int n, EnumerationOptions const &options = {});

/// Shortest path length between two lattice elements using only cover
/// edges of the Hasse diagram. Throws NotInLattice for other inputs.
int lattice_distance_bfs(Permutation const &from, Permutation const &to, HasseGraph const &graph);
int lattice_distance_bfs(Permutation const &from, Permutation const &to);

/// Vertices of a shortest path inside the lattice; consecutive entries
/// differ by left multiplication by a transposition.
struct GeodesicPath
{
  std::vector<Permutation> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Builds a geodesic that never leaves the lattice, by induction on n:
/// rotate with simultaneous duals until the lower half fixes n, split the
/// singleton {n} off the upper half if needed, then recurse on order n - 1.
GeodesicPath lattice_geodesic(Permutation const &from, Permutation const &to);

/// If b = t a for a transposition t, returns t's two moved points.
std::optional<std::pair<int, int>> transposition_factor(Permutation const &a, Permutation const &b);

} // namespace meander
