#include "doctest.h"

#include "meander/meander.hpp"
#include "oracles/oracles.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

using namespace meander;

namespace
{

Permutation P(char const *text, int n) { return parse_permutation(text, n); }

std::vector<Permutation> lattice(int n)
{
  std::vector<Permutation> out;
  for (auto const &p : enumerate_nc(n))
    out.push_back(to_permutation(p));
  return out;
}

} // namespace

TEST_CASE("a half is drawable without crossings exactly when it lies in the interval, n <= 6")
{
  for (int n = 1; n <= 6; ++n) {
    for (auto const &sigma : all_permutations(n))
      REQUIRE(oracle::arcs_noncrossing(sigma) == in_interval(sigma));
  }
}

TEST_CASE("meander system construction")
{
  CHECK_NOTHROW(MeanderSystem(P("(1 2)", 2), Permutation(2)));
  CHECK_THROWS_AS(MeanderSystem(P("(1 3)(2 4)", 4), Permutation(4)), NotInLattice);
  CHECK_THROWS_AS(MeanderSystem(Permutation(4), P("(1 3 2)", 4)), NotInLattice);
  CHECK_THROWS_AS(MeanderSystem(Permutation(3), Permutation(4)), OrderMismatch);
}

TEST_CASE("components examples")
{
  for (int n = 1; n <= 5; ++n) {
    for (auto const &sigma : lattice(n))
      CHECK(components(MeanderSystem(sigma, sigma)) == n);
  }
  auto const m = MeanderSystem(P("(1 2)", 2), Permutation(2));
  CHECK(components(m) == 1);
  CHECK(oracle::traced_components(m.upper(), m.lower()) == 1);

  auto const all3 = lattice(3);
  int single = 0;
  for (auto const &u : all3) {
    for (auto const &l : all3)
      single += is_meander(MeanderSystem(u, l)) ? 1 : 0;
  }
  CHECK(single == 8);
}

TEST_CASE("is_meander examples")
{
  CHECK(is_meander(MeanderSystem(Permutation(1), Permutation(1))));
  std::vector<std::pair<Permutation, Permutation>> found;
  auto const all2 = lattice(2);
  for (auto const &u : all2) {
    for (auto const &l : all2) {
      if (is_meander(MeanderSystem(u, l)))
        found.emplace_back(u, l);
    }
  }
  REQUIRE(found.size() == 2);
  CHECK(std::count(found.begin(), found.end(), std::pair{Permutation(2), P("(1 2)", 2)}) == 1);
  CHECK(std::count(found.begin(), found.end(), std::pair{P("(1 2)", 2), Permutation(2)}) == 1);
  CHECK_FALSE(is_meander(MeanderSystem(successor(3), successor(3))));
}

TEST_CASE("components agree with explicit curve tracing, n <= 5")
{
  for (int n = 1; n <= 5; ++n) {
    auto const all = lattice(n);
    for (auto const &u : all) {
      for (auto const &l : all) {
        MeanderSystem const m(u, l);
        REQUIRE(components(m) == oracle::traced_components(u, l));
        auto const curve = component_of(m);
        REQUIRE(*std::max_element(curve.begin(), curve.end()) + 1 == components(m));
      }
    }
  }
}

TEST_CASE("enumerate_meanders counts")
{
  // Frozen from the curve-tracing oracle.
  unsigned long long const expected[] = {1, 2, 8, 42, 262, 1828};
  for (int n = 1; n <= 6; ++n) {
    auto const all = lattice(n);
    unsigned long long traced = 0;
    for (auto const &u : all) {
      for (auto const &l : all)
        traced += oracle::traced_components(u, l) == 1 ? 1 : 0;
    }
    CHECK(traced == expected[n - 1]);
    CHECK(enumerate_meanders(n).count == expected[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_meanders(11), ResourceCapExceeded);
  CHECK_THROWS_AS(enumerate_meanders(0), std::invalid_argument);
}

TEST_CASE("enumeration is independent of the number of jobs")
{
  EnumerationOptions options;
  options.count_only = false;
  auto const serial = enumerate_meanders(5, options);
  CHECK(serial.pairs.size() == 262);
  for (int jobs : {2, 3, 7, 64}) {
    options.jobs = jobs;
    auto const parallel = enumerate_meanders(5, options);
    CHECK(parallel.count == serial.count);
    CHECK(parallel.pairs == serial.pairs);
  }

  std::set<std::pair<Permutation, Permutation>> listed(serial.pairs.begin(), serial.pairs.end());
  for (auto const &[u, l] : serial.pairs) {
    REQUIRE(listed.count({l, u}) == 1);
    REQUIRE(is_meander(MeanderSystem(u, l)));
  }
}

TEST_CASE("enumeration JSON")
{
  EnumerationOptions options;
  options.count_only = false;
  auto const result = enumerate_meanders(2, options);
  CHECK(result.to_json(true) == R"j({"order":2,"count":2,"pairs":[["e","(1 2)"],["(1 2)","e"]]})j");
  CHECK(result.to_json(false) == R"({"order":2,"count":2})");
  auto const text = enumerate_meanders(3, options).to_json(true);
  CHECK(nlohmann::ordered_json::parse(text).dump() == text);
}

TEST_CASE("lattice distance by breadth-first search")
{
  for (int n = 1; n <= 6; ++n) {
    CHECK(lattice_distance_bfs(Permutation(n), successor(n)) == n - 1);
    CHECK(lattice_distance_bfs(successor(n), successor(n)) == 0);
  }
  CHECK_THROWS_AS(lattice_distance_bfs(P("(1 3)(2 4)", 4), Permutation(4)), NotInLattice);
}

TEST_CASE("curves, transposition distance and lattice distance agree, n <= 6")
{
  for (int n = 1; n <= 6; ++n) {
    HasseGraph const graph(n);
    auto const &vertices = graph.vertices();
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      auto const bfs = graph.distances_from(static_cast<int>(a));
      auto const u = to_permutation(vertices[a]);
      for (std::size_t b = 0; b < vertices.size(); ++b) {
        auto const l = to_permutation(vertices[b]);
        int const k = components(MeanderSystem(u, l));
        REQUIRE(cayley_distance(u, l) == n - k);
        REQUIRE(bfs[b] == n - k);
      }
    }
  }
  CHECK(lattice_distance_bfs(P("(1 2)", 4), P("(3 4)", 4)) == 2);
}

TEST_CASE("simultaneous dual")
{
  for (int n = 1; n <= 4; ++n) {
    auto const all = lattice(n);
    for (auto const &u : all) {
      for (auto const &l : all) {
        MeanderSystem const m(u, l);
        auto const d = simultaneous_dual(m);
        REQUIRE(components(d) == components(m));
        REQUIRE(cayley_distance(d.upper(), d.lower()) == cayley_distance(u, l));
        auto r = m;
        for (int k = 0; k < 2 * n; ++k)
          r = simultaneous_dual(r);
        REQUIRE(r == m);
      }
    }
  }
}

TEST_CASE("transposition_factor")
{
  auto const f = transposition_factor(P("(1 2)", 3), P("(1 2 3)", 3));
  REQUIRE(f);
  CHECK(Permutation::transposition(3, f->first, f->second) * P("(1 2)", 3) == P("(1 2 3)", 3));
  CHECK_FALSE(transposition_factor(Permutation(3), Permutation(3)));
  CHECK_FALSE(transposition_factor(Permutation(3), successor(3)));
}

TEST_CASE("lattice geodesics")
{
  auto const chain = lattice_geodesic(successor(3), Permutation(3));
  CHECK(chain.length() == 2);
  CHECK(chain.vertices.front() == successor(3));
  CHECK(chain.vertices.back() == Permutation(3));

  auto const same = lattice_geodesic(P("(1 2)", 3), P("(1 2)", 3));
  CHECK(same.length() == 0);

  CHECK_THROWS_AS(lattice_geodesic(P("(1 3)(2 4)", 4), Permutation(4)), NotInLattice);

  for (int n = 1; n <= 6; ++n) {
    HasseGraph const graph(n);
    std::set<std::pair<int, int>> edges;
    for (auto const &[a, b] : graph.edges()) {
      edges.emplace(a, b);
      edges.emplace(b, a);
    }
    auto const all = lattice(n);
    for (auto const &u : all) {
      for (auto const &l : all) {
        auto const path = lattice_geodesic(u, l);
        REQUIRE(path.vertices.front() == u);
        REQUIRE(path.vertices.back() == l);
        REQUIRE(path.length() == n - cycle_count(inverse(u) * l));
        for (std::size_t k = 0; k < path.vertices.size(); ++k) {
          REQUIRE(in_interval(path.vertices[k]));
          if (k == 0)
            continue;
          REQUIRE(transposition_factor(path.vertices[k - 1], path.vertices[k]));
          auto const a = graph.index_of(from_permutation(path.vertices[k - 1]));
          auto const b = graph.index_of(from_permutation(path.vertices[k]));
          REQUIRE(edges.count({*a, *b}) == 1);
        }
      }
    }
  }
}
