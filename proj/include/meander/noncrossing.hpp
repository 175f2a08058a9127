#pragma once

#include "meander/permutation.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace meander
{

/// Thrown when a permutation is required to lie in the lattice of
/// noncrossing partitions but does not.
class NotInLattice : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed the configured size limit.
class ResourceCapExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using Block = std::vector<int>;

/// A partition of {1..n} whose blocks do not cross when the points are
/// placed counter-clockwise on a circle. Stored canonically: each block
/// sorted, blocks sorted by their minimum, so value equality is
/// mathematical equality.
class NoncrossingPartition
{
public:
  /// All singletons.
  explicit NoncrossingPartition(int n = 1);

  /// Validates and canonicalizes. Throws std::invalid_argument if blocks
  /// do not partition {1..n} or if two blocks cross.
  NoncrossingPartition(int n, std::vector<Block> blocks);

  static NoncrossingPartition bottom(int n) { return NoncrossingPartition(n); }
  static NoncrossingPartition top(int n);

  int order() const { return n_; }
  std::vector<Block> const &blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// block_of()[i - 1] is the index of the block containing i.
  std::vector<int> block_of() const;

  friend bool operator==(NoncrossingPartition const &, NoncrossingPartition const &) = default;
  friend auto operator<=>(NoncrossingPartition const &, NoncrossingPartition const &) = default;

private:
  int n_;
  std::vector<Block> blocks_;
};

/// True iff the blocks have no crossing quadruple i < j < k < l with i, k
/// in one block and j, l in another. Throws std::invalid_argument if the
/// blocks do not partition {1..n}.
bool is_noncrossing(int n, std::vector<Block> const &blocks);

/// Each block {b1 < ... < bk} becomes the cycle (b1 ... bk).
Permutation to_permutation(NoncrossingPartition const &p);

enum class IntervalFailure
{
  CycleNotIncreasing,
  CrossingOrbits,
};

std::string_view describe(IntervalFailure failure);

/// The partition whose blocks are the orbits of sigma, provided every
/// cycle is increasing from its minimum and the orbits do not cross.
std::optional<NoncrossingPartition> try_from_permutation(Permutation const &sigma,
                                                         IntervalFailure *why = nullptr);

/// As try_from_permutation, but throws NotInLattice on failure.
NoncrossingPartition from_permutation(Permutation const &sigma);

/// True iff d(e, sigma) + d(sigma, s) = n - 1, i.e. sigma lies on a
/// geodesic from the identity to the successor.
bool in_interval(Permutation const &sigma);

/// Kreweras-type complement: the partition of sigma^-1 s.
NoncrossingPartition dual(NoncrossingPartition const &p);

/// Inverse of dual: the partition of s sigma^-1.
NoncrossingPartition undual(NoncrossingPartition const &q);

/// Permutation-level duals, valid for any sigma.
Permutation dual_permutation(Permutation const &sigma);
Permutation undual_permutation(Permutation const &sigma);

/// Every block of p is contained in a block of q.
bool refines(NoncrossingPartition const &p, NoncrossingPartition const &q);

/// q covers p: p refines q and q has exactly one block fewer.
bool covers(NoncrossingPartition const &q, NoncrossingPartition const &p);

/// n minus the number of blocks.
int grade(NoncrossingPartition const &p);

NoncrossingPartition join(NoncrossingPartition const &p, NoncrossingPartition const &q);
NoncrossingPartition meet(NoncrossingPartition const &p, NoncrossingPartition const &q);

/// Largest order enumerate_nc accepts unless overridden.
inline constexpr int default_partition_cap = 14;

/// All noncrossing partitions of order n: by block count descending, then
/// lexicographic on the canonical block lists.
std::vector<NoncrossingPartition> enumerate_nc(int n, int max_order = default_partition_cap);

/// Catalan number C_n (exact for n <= 35).
unsigned long long catalan(int n);

/// "{1,3,4,7}{2}{5,6}{8}".
std::string format_partition(NoncrossingPartition const &p);

/// Inverse of format_partition; whitespace is ignored and blocks may come
/// in any order.
NoncrossingPartition parse_partition(std::string_view text, int n);

/// Hasse diagram of the refinement order on all noncrossing partitions of
/// order n. Edges are stored as (lower, upper) vertex indices.
class HasseGraph
{
public:
  explicit HasseGraph(int n, int max_order = default_hasse_cap);

  static constexpr int default_hasse_cap = 10;

  int order() const { return n_; }
  std::vector<NoncrossingPartition> const &vertices() const { return vertices_; }
  std::vector<std::pair<int, int>> const &edges() const { return edges_; }
  std::vector<std::vector<int>> const &adjacency() const { return adjacency_; }

  std::optional<int> index_of(NoncrossingPartition const &p) const;

  /// Breadth-first distances from one vertex, treating edges as undirected.
  std::vector<int> distances_from(int source) const;

  /// nlohmann-compatible text: {"order":n,"vertices":[...],"edges":[[i,j],...]}.
  std::string to_json() const;

private:
  int n_;
  std::vector<NoncrossingPartition> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::string, int> index_;
};

HasseGraph hasse(int n, int max_order = HasseGraph::default_hasse_cap);

} // namespace meander
