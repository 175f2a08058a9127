#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle
{

std::map<std::vector<int>, int> cayley_bfs(int n)
{
  std::vector<int> start(static_cast<std::size_t>(n));
  std::iota(start.begin(), start.end(), 1);
  std::map<std::vector<int>, int> dist{{start, 0}};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto const cur = queue.front();
    queue.pop_front();
    int const d = dist[cur];
    // Left multiplication by (a b) swaps the values a and b in one-line form.
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        auto next = cur;
        for (auto &v : next) {
          if (v == a)
            v = b;
          else if (v == b)
            v = a;
        }
        if (dist.emplace(next, d + 1).second)
          queue.push_back(std::move(next));
      }
    }
  }
  return dist;
}

std::vector<std::vector<Block>> all_set_partitions(int n)
{
  std::vector<std::vector<Block>> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    int const blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> p(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i)
      p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.push_back(std::move(p));
  };
  auto rec = [&](auto &&self, int i, int used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 1);
  return out;
}

bool naive_noncrossing(int n, std::vector<Block> const &blocks)
{
  std::vector<int> label(static_cast<std::size_t>(n + 1), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b])
      label[static_cast<std::size_t>(v)] = static_cast<int>(b);
  }
  auto L = [&](int x) { return label[static_cast<std::size_t>(x)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (L(i) == L(k) && L(j) == L(l) && L(i) != L(j))
            return false;
  return true;
}

unsigned long long catalan_recurrence(int n)
{
  std::vector<unsigned long long> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i <= m; ++i)
      c[static_cast<std::size_t>(m + 1)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
  }
  return c[static_cast<std::size_t>(n)];
}

namespace
{

struct Dsu
{
  std::vector<int> parent;
  explicit Dsu(int size) : parent(static_cast<std::size_t>(size)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x)
  {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<std::pair<int, int>> arcs_of(Permutation const &half)
{
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= half.order(); ++i) {
    int const even = 2 * i;
    int const odd = 2 * half(i) - 1;
    arcs.emplace_back(std::min(even, odd), std::max(even, odd));
  }
  return arcs;
}

} // namespace

int traced_components(Permutation const &upper, Permutation const &lower)
{
  int const points = 2 * upper.order();
  Dsu dsu(points + 1);
  for (auto const *half : {&upper, &lower}) {
    for (auto const &[a, b] : arcs_of(*half))
      dsu.unite(a, b);
  }
  std::set<int> roots;
  for (int p = 1; p <= points; ++p)
    roots.insert(dsu.find(p));
  return static_cast<int>(roots.size());
}

bool arcs_noncrossing(Permutation const &half)
{
  auto const arcs = arcs_of(half);
  for (auto const &[a, b] : arcs) {
    for (auto const &[c, d] : arcs) {
      if (a < c && c < b && b < d)
        return false;
    }
  }
  return true;
}

NoncrossingPartition common_refinement(NoncrossingPartition const &p, NoncrossingPartition const &q)
{
  std::vector<Block> blocks;
  for (auto const &a : p.blocks()) {
    for (auto const &b : q.blocks()) {
      Block both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      if (!both.empty())
        blocks.push_back(std::move(both));
    }
  }
  return NoncrossingPartition(p.order(), std::move(blocks));
}

bool is_refinement(NoncrossingPartition const &p, NoncrossingPartition const &q)
{
  for (auto const &a : p.blocks()) {
    bool contained = false;
    for (auto const &b : q.blocks())
      contained = contained || std::includes(b.begin(), b.end(), a.begin(), a.end());
    if (!contained)
      return false;
  }
  return true;
}

NoncrossingPartition brute_join(NoncrossingPartition const &p, NoncrossingPartition const &q,
                                std::vector<NoncrossingPartition> const &all)
{
  std::vector<NoncrossingPartition> upper;
  for (auto const &r : all) {
    if (is_refinement(p, r) && is_refinement(q, r))
      upper.push_back(r);
  }
  for (auto const &r : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](auto const &u) { return is_refinement(r, u); }))
      return r;
  }
  throw std::logic_error("no least upper bound");
}

NoncrossingPartition brute_meet(NoncrossingPartition const &p, NoncrossingPartition const &q,
                                std::vector<NoncrossingPartition> const &all)
{
  std::vector<NoncrossingPartition> lower;
  for (auto const &r : all) {
    if (is_refinement(r, p) && is_refinement(r, q))
      lower.push_back(r);
  }
  for (auto const &r : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](auto const &l) { return is_refinement(l, r); }))
      return r;
  }
  throw std::logic_error("no greatest lower bound");
}

} // namespace oracle
