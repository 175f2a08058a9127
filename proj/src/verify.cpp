#include "meander/verify.hpp"

#include "meander/meander.hpp"
#include "meander/noncrossing.hpp"
#include "meander/surface.hpp"

#include <random>
#include <sstream>

namespace meander
{

namespace
{

CheckResult finish(std::string name, long long checked, long long failures, std::string const &first_failure)
{
  std::ostringstream detail;
  detail << checked << " checked, " << failures << " mismatches";
  if (failures > 0)
    detail << "; first: " << first_failure;
  return {std::move(name), failures == 0, detail.str()};
}

CheckResult check_interval(int n)
{
  long long checked = 0, failures = 0;
  std::string first;
  for (auto const &sigma : all_permutations(n)) {
    ++checked;
    if (in_interval(sigma) != try_from_permutation(sigma).has_value()) {
      if (failures++ == 0)
        first = format_permutation(sigma);
    }
  }
  return finish("interval membership", checked, failures, first);
}

CheckResult check_genus(int n)
{
  long long checked = 0, failures = 0;
  std::string first;
  for (auto const &sigma : all_permutations(n)) {
    ++checked;
    auto const surface = build_surface(sigma);
    bool const ok = 1 - euler_characteristic(surface) == 2 * genus(sigma) &&
                    boundary_components(surface).components == 1 && (genus(sigma) == 0) == in_interval(sigma);
    if (!ok && failures++ == 0)
      first = format_permutation(sigma);
  }
  return finish("surface genus", checked, failures, first);
}

CheckResult check_pairs(int n, HasseGraph const &graph)
{
  auto const &vertices = graph.vertices();
  std::vector<Permutation> labels;
  for (auto const &p : vertices)
    labels.push_back(to_permutation(p));

  long long checked = 0, failures = 0;
  std::string first;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    auto const bfs = graph.distances_from(static_cast<int>(a));
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      ++checked;
      int const curves = components(MeanderSystem(labels[a], labels[b]));
      bool const ok = curves == n - cayley_distance(labels[a], labels[b]) && curves == n - bfs[b];
      if (!ok && failures++ == 0)
        first = format_permutation(labels[a]) + " / " + format_permutation(labels[b]);
    }
  }
  return finish("curves = n - d = n - lattice distance", checked, failures, first);
}

CheckResult check_geodesics(HasseGraph const &graph)
{
  std::vector<Permutation> labels;
  for (auto const &p : graph.vertices())
    labels.push_back(to_permutation(p));

  long long checked = 0, failures = 0;
  std::string first;
  for (auto const &from : labels) {
    for (auto const &to : labels) {
      ++checked;
      auto const path = lattice_geodesic(from, to);
      bool ok = path.vertices.front() == from && path.vertices.back() == to &&
                path.length() == cayley_distance(from, to);
      for (std::size_t k = 0; ok && k < path.vertices.size(); ++k) {
        ok = in_interval(path.vertices[k]);
        if (ok && k > 0)
          ok = transposition_factor(path.vertices[k - 1], path.vertices[k]).has_value();
      }
      if (!ok && failures++ == 0)
        first = format_permutation(from) + " -> " + format_permutation(to);
    }
  }
  return finish("lattice geodesics", checked, failures, first);
}

/// Every upper bound of p and q lies above the join; every lower bound
/// below the meet.
bool bounds_hold(NoncrossingPartition const &p, NoncrossingPartition const &q,
                 std::vector<NoncrossingPartition> const &all)
{
  auto const j = join(p, q);
  auto const m = meet(p, q);
  if (!refines(p, j) || !refines(q, j) || !refines(m, p) || !refines(m, q))
    return false;
  for (auto const &r : all) {
    if (refines(p, r) && refines(q, r) && !refines(j, r))
      return false;
    if (refines(r, p) && refines(r, q) && !refines(r, m))
      return false;
  }
  return true;
}

CheckResult check_lattice(std::vector<NoncrossingPartition> const &all)
{
  long long checked = 0, failures = 0;
  std::string first;
  auto record = [&](NoncrossingPartition const &p, NoncrossingPartition const &q) {
    ++checked;
    if (!bounds_hold(p, q, all) && failures++ == 0)
      first = format_partition(p) + " , " + format_partition(q);
  };

  // All pairs while that stays cheap, a fixed sample beyond.
  if (all.size() <= 132) {
    for (auto const &p : all) {
      for (auto const &q : all)
        record(p, q);
    }
  } else {
    std::mt19937 rng(20061);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 500; ++k)
      record(all[pick(rng)], all[pick(rng)]);
  }
  return finish("join/meet are least upper and greatest lower bounds", checked, failures, first);
}

} // namespace

std::vector<CheckResult> verify_order(int n, int max_order)
{
  if (n < 1)
    throw std::invalid_argument("order must be positive");
  if (n > max_order)
    throw ResourceCapExceeded("order " + std::to_string(n) + " exceeds the verify cap of " +
                              std::to_string(max_order));

  HasseGraph const graph(n, n);
  return {
    check_interval(n),
    check_genus(n),
    check_pairs(n, graph),
    check_geodesics(graph),
    check_lattice(graph.vertices()),
  };
}

} // namespace meander
