#include "meander/noncrossing.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace meander
{

namespace
{

/// labels[i - 1] = block index of i; throws unless blocks partition {1..n}.
std::vector<int> label_points(int n, std::vector<Block> const &blocks)
{
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw std::invalid_argument("partition has an empty block");
    for (int v : blocks[b]) {
      if (v < 1 || v > n)
        throw std::invalid_argument("partition element " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
      if (labels[static_cast<std::size_t>(v - 1)] != -1)
        throw std::invalid_argument("partition element " + std::to_string(v) + " repeated");
      labels[static_cast<std::size_t>(v - 1)] = static_cast<int>(b);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (labels[static_cast<std::size_t>(i - 1)] == -1)
      throw std::invalid_argument("partition does not cover " + std::to_string(i));
  }
  return labels;
}

/// Scans points left to right keeping a stack of open blocks. A block that
/// reappears while another block is open above it crosses that block.
/// Returns the crossing pair, if any.
std::optional<std::pair<int, int>> find_crossing(std::vector<int> const &labels, int block_count)
{
  std::vector<int> last(static_cast<std::size_t>(block_count), 0);
  for (std::size_t i = 0; i < labels.size(); ++i)
    last[static_cast<std::size_t>(labels[i])] = static_cast<int>(i);

  std::vector<bool> started(static_cast<std::size_t>(block_count), false);
  std::vector<int> open;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int const b = labels[i];
    if (started[static_cast<std::size_t>(b)]) {
      if (open.back() != b)
        return std::pair{b, open.back()};
    } else {
      started[static_cast<std::size_t>(b)] = true;
      open.push_back(b);
    }
    if (last[static_cast<std::size_t>(b)] == static_cast<int>(i))
      open.pop_back();
  }
  return std::nullopt;
}

std::vector<Block> canonical_blocks(std::vector<Block> blocks)
{
  for (auto &block : blocks)
    std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

/// Blocks from a labelling with arbitrary label values.
std::vector<Block> blocks_from_labels(std::vector<int> const &labels)
{
  std::vector<int> slot(labels.size(), -1);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto const l = static_cast<std::size_t>(labels[i]);
    if (slot[l] == -1) {
      slot[l] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[l])].push_back(static_cast<int>(i) + 1);
  }
  return blocks;
}

class DisjointSets
{
public:
  explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size))
  {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x)
  {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto &p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

private:
  std::vector<int> parent_;
};

[[noreturn]] void internal_failure(char const *what)
{
  std::fprintf(stderr, "meander: internal invariant violated: %s\n", what);
  std::abort();
}

void require_same_order(NoncrossingPartition const &p, NoncrossingPartition const &q)
{
  if (p.order() != q.order())
    throw OrderMismatch(p.order(), q.order());
}

} // namespace

NoncrossingPartition::NoncrossingPartition(int n)
  : n_(n)
{
  if (n < 1)
    throw std::invalid_argument("partition order must be positive");
  for (int i = 1; i <= n; ++i)
    blocks_.push_back({i});
}

NoncrossingPartition::NoncrossingPartition(int n, std::vector<Block> blocks)
  : n_(n)
{
  if (n < 1)
    throw std::invalid_argument("partition order must be positive");
  auto const labels = label_points(n, blocks);
  if (find_crossing(labels, static_cast<int>(blocks.size())))
    throw std::invalid_argument("partition blocks cross");
  blocks_ = canonical_blocks(std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::top(int n)
{
  Block all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return NoncrossingPartition(n, {std::move(all)});
}

std::vector<int> NoncrossingPartition::block_of() const
{
  std::vector<int> result(static_cast<std::size_t>(n_));
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int v : blocks_[b])
      result[static_cast<std::size_t>(v - 1)] = static_cast<int>(b);
  }
  return result;
}

bool is_noncrossing(int n, std::vector<Block> const &blocks)
{
  auto const labels = label_points(n, blocks);
  return !find_crossing(labels, static_cast<int>(blocks.size()));
}

Permutation to_permutation(NoncrossingPartition const &p)
{
  std::vector<int> images(static_cast<std::size_t>(p.order()));
  for (auto const &block : p.blocks()) {
    for (std::size_t k = 0; k < block.size(); ++k)
      images[static_cast<std::size_t>(block[k] - 1)] = block[(k + 1) % block.size()];
  }
  return Permutation(std::move(images));
}

std::string_view describe(IntervalFailure failure)
{
  switch (failure) {
  case IntervalFailure::CycleNotIncreasing:
    return "not an interval permutation: a cycle is not increasing";
  case IntervalFailure::CrossingOrbits:
    return "not an interval permutation: orbits cross";
  }
  return "not an interval permutation";
}

std::optional<NoncrossingPartition> try_from_permutation(Permutation const &sigma, IntervalFailure *why)
{
  auto decomposition = cycles(sigma);
  for (auto const &cycle : decomposition.cycles) {
    if (!std::is_sorted(cycle.begin(), cycle.end())) {
      if (why)
        *why = IntervalFailure::CycleNotIncreasing;
      return std::nullopt;
    }
  }
  if (!is_noncrossing(sigma.order(), decomposition.cycles)) {
    if (why)
      *why = IntervalFailure::CrossingOrbits;
    return std::nullopt;
  }
  return NoncrossingPartition(sigma.order(), std::move(decomposition.cycles));
}

NoncrossingPartition from_permutation(Permutation const &sigma)
{
  IntervalFailure why{};
  auto p = try_from_permutation(sigma, &why);
  if (!p)
    throw NotInLattice(std::string(describe(why)) + ": " + format_permutation(sigma));
  return std::move(*p);
}

bool in_interval(Permutation const &sigma)
{
  int const n = sigma.order();
  auto const s = successor(n);
  return cayley_distance(Permutation(n), sigma) + cayley_distance(sigma, s) == n - 1;
}

Permutation dual_permutation(Permutation const &sigma)
{
  return compose(inverse(sigma), successor(sigma.order()));
}

Permutation undual_permutation(Permutation const &sigma)
{
  return compose(successor(sigma.order()), inverse(sigma));
}

NoncrossingPartition dual(NoncrossingPartition const &p)
{
  auto q = try_from_permutation(dual_permutation(to_permutation(p)));
  if (!q)
    internal_failure("dual left the noncrossing lattice");
  return std::move(*q);
}

NoncrossingPartition undual(NoncrossingPartition const &q)
{
  auto p = try_from_permutation(undual_permutation(to_permutation(q)));
  if (!p)
    internal_failure("undual left the noncrossing lattice");
  return std::move(*p);
}

bool refines(NoncrossingPartition const &p, NoncrossingPartition const &q)
{
  require_same_order(p, q);
  auto const owner = q.block_of();
  for (auto const &block : p.blocks()) {
    int const b = owner[static_cast<std::size_t>(block.front() - 1)];
    for (int v : block) {
      if (owner[static_cast<std::size_t>(v - 1)] != b)
        return false;
    }
  }
  return true;
}

bool covers(NoncrossingPartition const &q, NoncrossingPartition const &p)
{
  return refines(p, q) && grade(q) == grade(p) + 1;
}

int grade(NoncrossingPartition const &p) { return p.order() - p.block_count(); }

NoncrossingPartition join(NoncrossingPartition const &p, NoncrossingPartition const &q)
{
  require_same_order(p, q);
  int const n = p.order();
  DisjointSets sets(n);
  for (auto const *part : {&p, &q}) {
    for (auto const &block : part->blocks()) {
      for (int v : block)
        sets.unite(block.front() - 1, v - 1);
    }
  }

  // Union-find keeps the relation transitively closed; each pass merges
  // one crossing pair of classes until none remain.
  while (true) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      labels[static_cast<std::size_t>(i)] = sets.find(i);
    auto const crossing = find_crossing(labels, n);
    if (!crossing)
      return NoncrossingPartition(n, blocks_from_labels(labels));
    sets.unite(crossing->first, crossing->second);
  }
}

NoncrossingPartition meet(NoncrossingPartition const &p, NoncrossingPartition const &q)
{
  require_same_order(p, q);
  return undual(join(dual(p), dual(q)));
}

namespace
{

/// Grows partitions one point at a time. Point i may join block B only if
/// no other block straddles max(B), i.e. has elements on both sides of it.
class PartitionGenerator
{
public:
  explicit PartitionGenerator(int n) : n_(n) {}

  std::vector<NoncrossingPartition> run()
  {
    grow(1);
    return std::move(out_);
  }

private:
  bool can_extend(std::size_t b) const
  {
    int const top = blocks_[b].back();
    for (std::size_t c = 0; c < blocks_.size(); ++c) {
      if (c != b && blocks_[c].front() < top && blocks_[c].back() > top)
        return false;
    }
    return true;
  }

  void grow(int i)
  {
    if (i > n_) {
      out_.emplace_back(n_, blocks_);
      return;
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (!can_extend(b))
        continue;
      blocks_[b].push_back(i);
      grow(i + 1);
      blocks_[b].pop_back();
    }
    blocks_.push_back({i});
    grow(i + 1);
    blocks_.pop_back();
  }

  int n_;
  std::vector<Block> blocks_;
  std::vector<NoncrossingPartition> out_;
};

std::string label_key(NoncrossingPartition const &p)
{
  std::string key;
  for (int b : p.block_of())
    key.push_back(static_cast<char>(b));
  return key;
}

} // namespace

std::vector<NoncrossingPartition> enumerate_nc(int n, int max_order)
{
  if (n < 1)
    throw std::invalid_argument("order must be positive");
  if (n > max_order)
    throw ResourceCapExceeded("order " + std::to_string(n) + " exceeds the partition enumeration cap of " +
                              std::to_string(max_order));
  auto result = PartitionGenerator(n).run();
  std::sort(result.begin(), result.end(), [](auto const &a, auto const &b) {
    if (a.block_count() != b.block_count())
      return a.block_count() > b.block_count();
    return a.blocks() < b.blocks();
  });
  return result;
}

unsigned long long catalan(int n)
{
  // C_{k+1} = C_k * 2(2k+1) / (k+2); the division is exact.
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k)
    c = c * 2 * static_cast<unsigned long long>(2 * k + 1) / static_cast<unsigned long long>(k + 2);
  return c;
}

std::string format_partition(NoncrossingPartition const &p)
{
  std::string out;
  for (auto const &block : p.blocks()) {
    out.push_back('{');
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k > 0)
        out.push_back(',');
      out += std::to_string(block[k]);
    }
    out.push_back('}');
  }
  return out;
}

NoncrossingPartition parse_partition(std::string_view text, int n)
{
  auto fail = [&](std::string const &what) -> ParseError {
    std::ostringstream ss;
    ss << "cannot parse partition \"" << text << "\": " << what;
    return ParseError(ss.str());
  };

  std::vector<Block> blocks;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '{')
      throw fail("expected '{'");
    ++pos;
    Block block;
    while (true) {
      skip_space();
      if (pos >= text.size())
        throw fail("unterminated block");
      if (text[pos] == '}') {
        ++pos;
        break;
      }
      std::size_t const begin = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (begin == pos)
        throw fail(std::string("unexpected character '") + text[pos] + "'");
      if (pos - begin > 9)
        throw fail("element out of range");
      block.push_back(std::stoi(std::string(text.substr(begin, pos - begin))));
      skip_space();
      if (pos < text.size() && text[pos] == ',')
        ++pos;
    }
    if (block.empty())
      throw fail("empty block");
    blocks.push_back(std::move(block));
    skip_space();
  }

  try {
    auto const labels = label_points(n, blocks);
    if (find_crossing(labels, static_cast<int>(blocks.size())))
      throw fail("blocks cross");
  } catch (std::invalid_argument const &e) {
    if (dynamic_cast<ParseError const *>(&e))
      throw;
    throw fail(e.what());
  }
  return NoncrossingPartition(n, std::move(blocks));
}

HasseGraph::HasseGraph(int n, int max_order)
  : n_(n)
{
  if (n > max_order)
    throw ResourceCapExceeded("order " + std::to_string(n) + " exceeds the Hasse diagram cap of " +
                              std::to_string(max_order));
  vertices_ = enumerate_nc(n, max_order);
  index_.reserve(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    index_.emplace(label_key(vertices_[v]), static_cast<int>(v));

  adjacency_.resize(vertices_.size());
  // Covers from below: merge two blocks of p whenever the result is still
  // noncrossing. Each cover pair arises from exactly one merge.
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    auto const &blocks = vertices_[v].blocks();
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        std::vector<Block> merged;
        merged.reserve(blocks.size() - 1);
        for (std::size_t c = 0; c < blocks.size(); ++c) {
          if (c == b)
            continue;
          merged.push_back(blocks[c]);
          if (c == a)
            merged.back().insert(merged.back().end(), blocks[b].begin(), blocks[b].end());
        }
        if (!is_noncrossing(n, merged))
          continue;
        auto const upper = index_of(NoncrossingPartition(n, std::move(merged)));
        if (!upper)
          internal_failure("merged partition missing from the vertex index");
        edges_.emplace_back(static_cast<int>(v), *upper);
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto const &[lower, upper] : edges_) {
    adjacency_[static_cast<std::size_t>(lower)].push_back(upper);
    adjacency_[static_cast<std::size_t>(upper)].push_back(lower);
  }
}

std::optional<int> HasseGraph::index_of(NoncrossingPartition const &p) const
{
  if (p.order() != n_)
    return std::nullopt;
  auto const it = index_.find(label_key(p));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::vector<int> HasseGraph::distances_from(int source) const
{
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int const v = queue.front();
    queue.pop_front();
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::string HasseGraph::to_json() const
{
  nlohmann::ordered_json doc;
  doc["order"] = n_;
  auto &vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (auto const &p : vertices_)
    vertices.push_back(format_partition(p));
  auto &edges = doc["edges"] = nlohmann::ordered_json::array();
  for (auto const &[lower, upper] : edges_)
    edges.push_back({lower, upper});
  return doc.dump();
}

HasseGraph hasse(int n, int max_order) { return HasseGraph(n, max_order); }

} // namespace meander
