#include "meander/meander.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "json.hpp"

namespace meander
{

namespace
{

[[noreturn]] void internal_failure(char const *what)
{
  std::fprintf(stderr, "meander: internal invariant violated: %s\n", what);
  std::abort();
}

void require_in_lattice(Permutation const &sigma, char const *role)
{
  if (!in_interval(sigma))
    throw NotInLattice(std::string(role) + " " + format_permutation(sigma) +
                       " is not a noncrossing partition permutation");
}

} // namespace

MeanderSystem::MeanderSystem(Permutation upper, Permutation lower)
  : upper_(std::move(upper)), lower_(std::move(lower))
{
  if (upper_.order() != lower_.order())
    throw OrderMismatch(upper_.order(), lower_.order());
  require_in_lattice(upper_, "upper half");
  require_in_lattice(lower_, "lower half");
}

int components(MeanderSystem const &m) { return cycle_count(inverse(m.upper()) * m.lower()); }

std::vector<int> component_of(MeanderSystem const &m)
{
  // From i' follow the lower arc to ^lower(i), then the upper arc back to
  // an even point: one step of upper^-1 lower.
  auto const step = inverse(m.upper()) * m.lower();
  std::vector<int> label(static_cast<std::size_t>(m.order()), -1);
  int next = 0;
  for (int start = 1; start <= m.order(); ++start) {
    if (label[static_cast<std::size_t>(start - 1)] != -1)
      continue;
    for (int i = start; label[static_cast<std::size_t>(i - 1)] == -1; i = step(i))
      label[static_cast<std::size_t>(i - 1)] = next;
    ++next;
  }
  return label;
}

bool is_meander(MeanderSystem const &m) { return components(m) == 1; }

MeanderSystem simultaneous_dual(MeanderSystem const &m)
{
  return MeanderSystem(dual_permutation(m.upper()), dual_permutation(m.lower()));
}

std::string MeanderEnumeration::to_json(bool include_pairs) const
{
  nlohmann::ordered_json doc;
  doc["order"] = order;
  doc["count"] = count;
  if (include_pairs) {
    auto &list = doc["pairs"] = nlohmann::ordered_json::array();
    for (auto const &[upper, lower] : pairs)
      list.push_back({format_permutation(upper), format_permutation(lower)});
  }
  return doc.dump();
}

namespace
{

/// Lattice permutations packed as 0-based byte tables for the pair loop.
struct PackedLattice
{
  int n = 0;
  std::vector<Permutation> members;
  std::vector<std::uint8_t> forward;
  std::vector<std::uint8_t> backward;

  std::uint8_t const *image(std::size_t k) const { return forward.data() + k * static_cast<std::size_t>(n); }
  std::uint8_t const *preimage(std::size_t k) const { return backward.data() + k * static_cast<std::size_t>(n); }
};

PackedLattice pack_lattice(int n)
{
  PackedLattice lattice;
  lattice.n = n;
  for (auto const &p : enumerate_nc(n, n))
    lattice.members.push_back(to_permutation(p));
  std::size_t const stride = static_cast<std::size_t>(n);
  lattice.forward.resize(lattice.members.size() * stride);
  lattice.backward.resize(lattice.members.size() * stride);
  for (std::size_t k = 0; k < lattice.members.size(); ++k) {
    auto const &sigma = lattice.members[k];
    for (int i = 1; i <= n; ++i) {
      lattice.forward[k * stride + static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(sigma(i) - 1);
      lattice.backward[k * stride + static_cast<std::size_t>(sigma(i) - 1)] = static_cast<std::uint8_t>(i - 1);
    }
  }
  return lattice;
}

/// True iff upper^-1 lower is a single n-cycle: the orbit of point 0 has
/// length n.
inline bool single_curve(std::uint8_t const *upper_inverse, std::uint8_t const *lower, int n)
{
  int length = 0;
  std::uint8_t i = 0;
  do {
    i = upper_inverse[lower[i]];
    ++length;
  } while (i != 0);
  return length == n;
}

struct Shard
{
  unsigned long long count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

void run_shard(PackedLattice const &lattice, std::size_t begin, std::size_t end, bool collect, Shard &shard)
{
  std::size_t const size = lattice.members.size();
  for (std::size_t u = begin; u < end; ++u) {
    auto const *upper_inverse = lattice.preimage(u);
    for (std::size_t l = 0; l < size; ++l) {
      if (!single_curve(upper_inverse, lattice.image(l), lattice.n))
        continue;
      ++shard.count;
      if (collect)
        shard.pairs.emplace_back(u, l);
    }
  }
}

} // namespace

MeanderEnumeration enumerate_meanders(int n, EnumerationOptions const &options)
{
  if (n < 1)
    throw std::invalid_argument("order must be positive");
  if (n > options.max_order)
    throw ResourceCapExceeded("order " + std::to_string(n) + " exceeds the meander enumeration cap of " +
                              std::to_string(options.max_order));
  if (n > 255)
    throw ResourceCapExceeded("order " + std::to_string(n) + " is beyond the packed representation");

  auto const lattice = pack_lattice(n);
  std::size_t const size = lattice.members.size();
  std::size_t const jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  std::size_t const shard_count = std::min(jobs, size);

  // Contiguous ranges of the upper index; concatenating shards in order
  // reproduces the sequential pair order.
  std::vector<Shard> shards(shard_count);
  std::vector<std::thread> workers;
  for (std::size_t s = 0; s < shard_count; ++s) {
    std::size_t const begin = size * s / shard_count;
    std::size_t const end = size * (s + 1) / shard_count;
    if (shard_count == 1)
      run_shard(lattice, begin, end, !options.count_only, shards[s]);
    else
      workers.emplace_back(run_shard, std::cref(lattice), begin, end, !options.count_only, std::ref(shards[s]));
  }
  for (auto &w : workers)
    w.join();

  MeanderEnumeration result;
  result.order = n;
  for (auto const &shard : shards) {
    result.count += shard.count;
    for (auto const &[u, l] : shard.pairs)
      result.pairs.emplace_back(lattice.members[u], lattice.members[l]);
  }
  return result;
}

int lattice_distance_bfs(Permutation const &from, Permutation const &to, HasseGraph const &graph)
{
  if (from.order() != to.order())
    throw OrderMismatch(from.order(), to.order());
  if (graph.order() != from.order())
    throw OrderMismatch(graph.order(), from.order());
  auto const source = graph.index_of(from_permutation(from));
  auto const target = graph.index_of(from_permutation(to));
  if (!source || !target)
    internal_failure("lattice element missing from the Hasse diagram");
  return graph.distances_from(*source)[static_cast<std::size_t>(*target)];
}

int lattice_distance_bfs(Permutation const &from, Permutation const &to)
{
  require_in_lattice(from, "source");
  require_in_lattice(to, "target");
  return lattice_distance_bfs(from, to, HasseGraph(from.order(), from.order()));
}

std::optional<std::pair<int, int>> transposition_factor(Permutation const &a, Permutation const &b)
{
  if (a.order() != b.order())
    throw OrderMismatch(a.order(), b.order());
  auto const t = b * inverse(a);
  std::vector<int> moved;
  for (int i = 1; i <= t.order(); ++i) {
    if (!t.fixes(i))
      moved.push_back(i);
  }
  if (moved.size() != 2)
    return std::nullopt;
  return std::pair{moved[0], moved[1]};
}

namespace
{

std::vector<Permutation> geodesic_vertices(Permutation const &from, Permutation const &to)
{
  int const n = from.order();
  if (n == 1 || from == to)
    return {from};

  // Rotate until the lower half has the singleton {n}. The innermost arc
  // of the lower matching guarantees this within 2n steps.
  Permutation upper = from;
  Permutation lower = to;
  int rotations = 0;
  while (!lower.fixes(n)) {
    if (++rotations >= 2 * n)
      internal_failure("no rotation brings a singleton to position n");
    upper = dual_permutation(upper);
    lower = dual_permutation(lower);
  }

  std::vector<Permutation> path;
  if (upper.fixes(n)) {
    for (auto const &p : geodesic_vertices(upper.restricted(), lower.restricted()))
      path.push_back(p.extended());
  } else {
    // Split {n} off the upper block containing it.
    auto const split = Permutation::transposition(n, upper(n), n) * upper;
    path.push_back(upper);
    for (auto &p : geodesic_vertices(split, lower))
      path.push_back(std::move(p));
  }

  for (auto &p : path) {
    for (int k = 0; k < rotations; ++k)
      p = undual_permutation(p);
  }
  return path;
}

} // namespace

GeodesicPath lattice_geodesic(Permutation const &from, Permutation const &to)
{
  if (from.order() != to.order())
    throw OrderMismatch(from.order(), to.order());
  require_in_lattice(from, "source");
  require_in_lattice(to, "target");
  return GeodesicPath{geodesic_vertices(from, to)};
}

} // namespace meander
