#include "meander/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace meander
{

namespace
{

std::string order_mismatch_message(int lhs, int rhs)
{
  std::ostringstream ss;
  ss << "order mismatch: " << lhs << " vs " << rhs;
  return ss.str();
}

void require_same_order(Permutation const &a, Permutation const &b)
{
  if (a.order() != b.order())
    throw OrderMismatch(a.order(), b.order());
}

void check_bijection(std::vector<int> const &images)
{
  int const n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation image out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

} // namespace

OrderMismatch::OrderMismatch(int lhs, int rhs)
  : std::invalid_argument(order_mismatch_message(lhs, rhs))
{}

Permutation::Permutation(int n)
{
  if (n < 1)
    throw std::invalid_argument("permutation order must be positive");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images)
  : images_(std::move(images))
{
  if (images_.empty())
    throw std::invalid_argument("permutation order must be positive");
  check_bijection(images_);
}

Permutation Permutation::from_cycles(int n, std::vector<std::vector<int>> const &cycles)
{
  Permutation result(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    auto const &cycle = *it;
    if (cycle.size() < 2)
      continue;
    std::vector<int> step(result.images_.size());
    std::iota(step.begin(), step.end(), 1);
    std::vector<bool> used(result.images_.size(), false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int const from = cycle[k];
      int const to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n)
        throw std::invalid_argument("cycle element " + std::to_string(from) + " out of range");
      if (used[static_cast<std::size_t>(from - 1)])
        throw std::invalid_argument("cycle element " + std::to_string(from) + " repeated");
      used[static_cast<std::size_t>(from - 1)] = true;
      step[static_cast<std::size_t>(from - 1)] = to;
    }
    result = Permutation(std::move(step)) * result;
  }
  return result;
}

Permutation Permutation::successor(int n)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    images[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b)
{
  if (a < 1 || a > n || b < 1 || b > n || a == b)
    throw std::invalid_argument("invalid transposition");
  Permutation t(n);
  std::swap(t.images_[static_cast<std::size_t>(a - 1)], t.images_[static_cast<std::size_t>(b - 1)]);
  return t;
}

bool Permutation::is_identity() const
{
  for (int i = 1; i <= order(); ++i) {
    if (!fixes(i))
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result(order());
  for (int i = 1; i <= order(); ++i)
    result.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return result;
}

Permutation Permutation::extended() const
{
  Permutation result(order() + 1);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

Permutation Permutation::restricted() const
{
  if (order() < 2 || !fixes(order()))
    throw std::invalid_argument("restriction requires a permutation fixing its largest point");
  std::vector<int> images(images_.begin(), images_.end() - 1);
  return Permutation(std::move(images));
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  require_same_order(a, b);
  Permutation result(a.order());
  for (int i = 1; i <= a.order(); ++i)
    result.images_[static_cast<std::size_t>(i - 1)] = a(b(i));
  return result;
}

Permutation compose(Permutation const &a, Permutation const &b) { return a * b; }

Permutation inverse(Permutation const &a) { return a.inverse(); }

Permutation successor(int n) { return Permutation::successor(n); }

CycleDecomposition cycles(Permutation const &a)
{
  CycleDecomposition result;
  std::vector<bool> seen(static_cast<std::size_t>(a.order()), false);
  // Scanning starts in increasing order, so each cycle begins at its
  // minimum and cycles come out sorted by minimum.
  for (int start = 1; start <= a.order(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = a(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      cycle.push_back(i);
    }
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

int cycle_count(Permutation const &a)
{
  int const n = a.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;
    ++count;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = a(i))
      seen[static_cast<std::size_t>(i - 1)] = true;
  }
  return count;
}

int cayley_distance(Permutation const &a, Permutation const &b)
{
  require_same_order(a, b);
  return a.order() - cycle_count(a.inverse() * b);
}

int reflection_length(Permutation const &a) { return a.order() - cycle_count(a); }

namespace
{

class PermutationParser
{
public:
  PermutationParser(std::string_view text, int n) : text_(text), n_(n) {}

  Permutation parse()
  {
    if (n_ < 1)
      throw ParseError("order must be positive");
    skip_space();
    if (at_end())
      throw ParseError("empty permutation text");
    if (text_[pos_] == '(' || text_[pos_] == 'e')
      return parse_cycles();
    return parse_one_line();
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    std::ostringstream ss;
    ss << "cannot parse permutation \"" << text_ << "\": " << what;
    throw ParseError(ss.str());
  }

  void claim(int v, std::vector<bool> &used) const
  {
    if (v < 1 || v > n_)
      fail("element " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    if (used[static_cast<std::size_t>(v - 1)])
      fail("element " + std::to_string(v) + " repeated");
    used[static_cast<std::size_t>(v - 1)] = true;
  }

  Permutation parse_cycles()
  {
    if (text_[pos_] == 'e') {
      ++pos_;
      skip_space();
      if (!at_end())
        fail("trailing characters after identity");
      return Permutation(n_);
    }

    std::vector<int> images(static_cast<std::size_t>(n_));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n_), false);

    while (!at_end()) {
      if (text_[pos_] != '(')
        fail("expected '('");
      ++pos_;
      std::vector<std::string> tokens;
      bool separated = false;
      std::string token;
      while (true) {
        if (at_end())
          fail("unterminated cycle");
        char const c = text_[pos_++];
        if (std::isdigit(static_cast<unsigned char>(c))) {
          token.push_back(c);
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == ')') {
          if (c != ')')
            separated = true;
          if (!token.empty())
            tokens.push_back(std::move(token));
          token.clear();
          if (c == ')')
            break;
        } else {
          fail(std::string("unexpected character '") + c + "'");
        }
      }

      std::vector<int> cycle;
      // Compact notation such as (1347) is read digit by digit when every
      // element is a single digit.
      if (!separated && tokens.size() == 1 && n_ <= 9 && tokens[0].size() > 1) {
        for (char c : tokens[0])
          cycle.push_back(c - '0');
      } else {
        for (auto const &t : tokens) {
          if (t.size() > 9)
            fail("element " + t + " out of range 1.." + std::to_string(n_));
          cycle.push_back(std::stoi(t));
        }
      }
      for (int v : cycle)
        claim(v, used);
      for (std::size_t k = 0; k < cycle.size(); ++k)
        images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
      skip_space();
    }
    return Permutation(std::move(images));
  }

  Permutation parse_one_line()
  {
    std::vector<int> images;
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    while (!at_end()) {
      std::size_t const begin = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (begin == pos_)
        fail(std::string("unexpected character '") + text_[pos_] + "'");
      std::string const t(text_.substr(begin, pos_ - begin));
      if (t.size() > 9)
        fail("element " + t + " out of range 1.." + std::to_string(n_));
      int const v = std::stoi(t);
      claim(v, used);
      images.push_back(v);
      skip_space();
      if (!at_end() && text_[pos_] == ',') {
        ++pos_;
        skip_space();
      }
    }
    if (static_cast<int>(images.size()) != n_)
      fail("one-line notation needs exactly " + std::to_string(n_) + " images");
    return Permutation(std::move(images));
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_permutation(std::string_view text, int n) { return PermutationParser(text, n).parse(); }

std::string format_permutation(Permutation const &a)
{
  std::string out;
  for (auto const &cycle : cycles(a).cycles) {
    if (cycle.size() < 2)
      continue;
    out.push_back('(');
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0)
        out.push_back(' ');
      out += std::to_string(cycle[k]);
    }
    out.push_back(')');
  }
  return out.empty() ? "e" : out;
}

std::vector<Permutation> all_permutations(int n)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

} // namespace meander

std::size_t std::hash<meander::Permutation>::operator()(meander::Permutation const &p) const noexcept
{
  std::size_t h = static_cast<std::size_t>(p.order());
  for (int v : p.images())
    h = h * 31 + static_cast<std::size_t>(v);
  return h;
}
