#pragma once

#include <string>
#include <vector>

namespace meander
{

struct CheckResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr int default_verify_cap = 7;

/// Exhaustive self-consistency scans at order n:
///  - interval membership by distances agrees with the noncrossing test
///    for every permutation of S_n;
///  - genus from distances agrees with the glued surface;
///  - for every ordered lattice pair, curves = n - d = n - Hasse distance;
///  - constructed geodesics stay in the lattice with exact length;
///  - join and meet are the least upper and greatest lower bounds.
std::vector<CheckResult> verify_order(int n, int max_order = default_verify_cap);

} // namespace meander
