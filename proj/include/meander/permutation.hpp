#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meander
{

/// Thrown when two objects of different order are combined.
class OrderMismatch : public std::invalid_argument
{
public:
  OrderMismatch(int lhs, int rhs);
};

/// Thrown by the text parsers on malformed input.
class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of {1..n}. Values are 1-based throughout: `perm(i)` is the
/// image of i. Composition follows the left-action convention, so
/// `a * b` applies b first and then a; with this convention
/// (1 2)(2 3) = (1 2 3).
class Permutation
{
public:
  /// Identity of order n.
  explicit Permutation(int n = 1);

  /// One-line notation: images[i - 1] is the image of i. Throws
  /// std::invalid_argument unless images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  /// Product of the given cycles (disjoint or not, applied right to left).
  static Permutation from_cycles(int n, std::vector<std::vector<int>> const &cycles);

  static Permutation identity(int n) { return Permutation(n); }

  /// The successor function i -> i + 1, n -> 1.
  static Permutation successor(int n);

  /// The transposition exchanging a and b.
  static Permutation transposition(int n, int a, int b);

  int order() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<int const> images() const { return images_; }

  bool is_identity() const;
  bool fixes(int i) const { return (*this)(i) == i; }

  Permutation inverse() const;

  /// Same permutation on {1..n+1} with n+1 fixed.
  Permutation extended() const;

  /// Restriction to {1..n-1}; requires the permutation to fix n.
  Permutation restricted() const;

  friend Permutation operator*(Permutation const &a, Permutation const &b);

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<int> images_;
};

/// compose(a, b) maps i to a(b(i)).
Permutation compose(Permutation const &a, Permutation const &b);
Permutation inverse(Permutation const &a);
Permutation successor(int n);

/// Disjoint cycles including fixed points. Each cycle starts at its
/// smallest element; cycles are sorted by their first element.
struct CycleDecomposition
{
  std::vector<std::vector<int>> cycles;

  int count() const { return static_cast<int>(cycles.size()); }

  friend bool operator==(CycleDecomposition const &, CycleDecomposition const &) = default;
};

CycleDecomposition cycles(Permutation const &a);

/// Number of orbits of a, fixed points included.
int cycle_count(Permutation const &a);

/// Distance in the Cayley graph of S_n generated by all transpositions:
/// n minus the number of cycles of a^-1 b.
int cayley_distance(Permutation const &a, Permutation const &b);

/// Distance from the identity, n minus the number of cycles.
int reflection_length(Permutation const &a);

/// Accepts cycle notation ("(1 5)(2,4,3,6)", "e", "()") or one-line
/// notation ("5 4 6 3 1 2").
Permutation parse_permutation(std::string_view text, int n);

/// Canonical cycle notation with fixed points omitted; identity is "e".
std::string format_permutation(Permutation const &a);

/// Every permutation of {1..n} in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(int n);

} // namespace meander

template<>
struct std::hash<meander::Permutation>
{
  std::size_t operator()(meander::Permutation const &p) const noexcept;
};
