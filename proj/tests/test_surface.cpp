#include "doctest.h"

#include "meander/noncrossing.hpp"
#include "meander/surface.hpp"

using namespace meander;

namespace
{

Permutation P(char const *text, int n) { return parse_permutation(text, n); }

} // namespace

TEST_CASE("genus-two example: two cycle discs and one dual disc")
{
  auto const sigma = P("(1 5)(2 4 3 6)", 6);
  CHECK(cycle_count(dual_permutation(sigma)) == 1);

  auto const surface = build_surface(sigma);
  CHECK(surface.face_count() == 3);
  CHECK(surface.cycle_face_count() == 2);
  CHECK(surface.vertex_count() == 12);
  CHECK(surface.edge_count() == 18);
  CHECK(euler_characteristic(surface) == -3);
  CHECK(genus(sigma) == 2);
  CHECK(cayley_distance(Permutation(6), sigma) == 4);
  CHECK(cayley_distance(sigma, successor(6)) == 5);
}

TEST_CASE("faces of the endpoints")
{
  for (int n = 1; n <= 6; ++n) {
    auto const e = build_surface(Permutation(n));
    CHECK(e.cycle_face_count() == n);
    CHECK(e.face_count() == n + 1);
    auto const s = build_surface(successor(n));
    CHECK(s.cycle_face_count() == 1);
    CHECK(s.face_count() == n + 1);
    CHECK(euler_characteristic(e) == 1);
    CHECK(euler_characteristic(s) == 1);
  }
}

TEST_CASE("minimal crossing has genus one")
{
  auto const sigma = P("(1 3)(2 4)", 4);
  CHECK(euler_characteristic(build_surface(sigma)) == -1);
  CHECK(genus(sigma) == 1);
}

TEST_CASE("face structure: each label glued once with opposite orientations")
{
  for (auto const &sigma : all_permutations(5)) {
    auto const surface = build_surface(sigma);
    std::vector<int> forward(6, 0), backward(6, 0);
    int boundary = 0;
    for (auto const &face : surface.faces()) {
      REQUIRE(face.corners.size() == face.sides.size());
      REQUIRE(face.corners.size() % 2 == 0);
      for (auto const &side : face.sides) {
        if (!side.interior())
          ++boundary;
        else if (side.direction > 0)
          ++forward[static_cast<std::size_t>(side.label)];
        else
          ++backward[static_cast<std::size_t>(side.label)];
      }
    }
    CHECK(boundary == 10);
    for (int i = 1; i <= 5; ++i) {
      REQUIRE(forward[static_cast<std::size_t>(i)] == 1);
      REQUIRE(backward[static_cast<std::size_t>(i)] == 1);
    }
    REQUIRE(surface.face_count() == cycle_count(sigma) + cycle_count(dual_permutation(sigma)));
    REQUIRE(surface.vertex_count() == 10);
    REQUIRE(surface.edge_count() == 15);
  }
}

TEST_CASE("boundary is one circle through the marked points in order")
{
  for (int n = 1; n <= 6; ++n) {
    std::vector<MarkedPoint> expected;
    for (int i = 1; i <= n; ++i) {
      expected.push_back({i, false});
      expected.push_back({i, true});
    }
    for (auto const &sigma : all_permutations(n)) {
      auto const surface = build_surface(sigma);
      auto const trace = boundary_components(surface);
      REQUIRE(trace.components == 1);
      REQUIRE(trace.order == expected);
      REQUIRE(is_connected(surface));
    }
  }
}

TEST_CASE("genus agrees with Euler characteristic and vanishes exactly on the interval, n <= 7")
{
  for (int n = 1; n <= 7; ++n) {
    for (auto const &sigma : all_permutations(n)) {
      int const defect = cayley_distance(Permutation(n), sigma) + cayley_distance(sigma, successor(n)) - (n - 1);
      REQUIRE(defect % 2 == 0);
      int const g = genus(sigma);
      REQUIRE(euler_characteristic(build_surface(sigma)) == 1 - 2 * g);
      REQUIRE((g == 0) == in_interval(sigma));
    }
  }
}

TEST_CASE("marked point helpers")
{
  CHECK(MarkedPoint::at_position(1) == MarkedPoint{1, false});
  CHECK(MarkedPoint::at_position(6) == MarkedPoint{3, true});
  CHECK(MarkedPoint{4, false}.position() == 7);
  CHECK(format_marked_point({2, false}) == "^2");
  CHECK(format_marked_point({2, true}) == "2'");
}
