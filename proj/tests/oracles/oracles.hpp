#pragma once

// Brute-force references for the test suites. Nothing here calls the
// library algorithm it is used to check.

#include "meander/noncrossing.hpp"
#include "meander/permutation.hpp"

#include <map>
#include <vector>

namespace oracle
{

using meander::Block;
using meander::NoncrossingPartition;
using meander::Permutation;

/// Graph distance from the identity in the Cayley graph of S_n generated
/// by transpositions, by breadth-first search over left multiplications.
std::map<std::vector<int>, int> cayley_bfs(int n);

/// Every set partition of {1..n} (restricted growth strings).
std::vector<std::vector<Block>> all_set_partitions(int n);

/// Direct quadruple scan for i < j < k < l with i ~ k, j ~ l across blocks.
bool naive_noncrossing(int n, std::vector<Block> const &blocks);

/// C_0 = 1, C_{m+1} = sum C_i C_{m-i}.
unsigned long long catalan_recurrence(int n);

/// Number of closed curves traced from explicit arcs on 2n line positions:
/// above, (2i, 2 upper(i) - 1); below, (2i, 2 lower(i) - 1). Uses
/// union-find on positions.
int traced_components(Permutation const &upper, Permutation const &lower);

/// True iff the arcs of one half-plane pairwise do not interleave.
bool arcs_noncrossing(Permutation const &half);

/// Blocks are all nonempty pairwise intersections.
NoncrossingPartition common_refinement(NoncrossingPartition const &p, NoncrossingPartition const &q);

/// Least upper bound / greatest lower bound by scanning a full lattice.
NoncrossingPartition brute_join(NoncrossingPartition const &p, NoncrossingPartition const &q,
                                std::vector<NoncrossingPartition> const &all);
NoncrossingPartition brute_meet(NoncrossingPartition const &p, NoncrossingPartition const &q,
                                std::vector<NoncrossingPartition> const &all);

/// Subset test written without the library's refinement routine.
bool is_refinement(NoncrossingPartition const &p, NoncrossingPartition const &q);

} // namespace oracle
