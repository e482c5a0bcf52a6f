#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubsing {

/// A permutation of {1,...,n} in one-line notation.  Positions and values are
/// 1-based at the interface; storage is a plain vector of values.
class Permutation {
 public:
  /// Throws ParseError(NonBijection) unless `one_line` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// w(i) for 1 <= i <= n.  Unchecked.
  int operator()(int i) const noexcept { return entries_[static_cast<std::size_t>(i - 1)]; }
  /// w(i) with bounds checking.
  int at(int i) const;

  std::span<const int> one_line() const noexcept { return entries_; }

  /// Packs the permutation into 64 bits (4 bits per entry); requires n <= 16.
  std::uint64_t pack() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> one_line, Unchecked) : entries_(std::move(one_line)) {}
  friend Permutation make_unchecked(std::vector<int>);

  std::vector<int> entries_;
};

/// Builds a permutation the caller has already validated.
Permutation make_unchecked(std::vector<int> one_line);

/// The transposition t_{a,b} exchanging positions a < b.
struct Transposition {
  int a;
  int b;

  /// Normalizes the pair so that a < b; throws PreconditionError if a == b or a < 1.
  static Transposition of(int i, int j);
  /// The simple reflection s_i = t_{i,i+1}.
  static Transposition simple(int i) { return of(i, i + 1); }

  bool touches(int i) const noexcept { return a == i || b == i; }
  bool commutes_with(const Transposition& o) const noexcept {
    return a != o.a && a != o.b && b != o.a && b != o.b;
  }

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// A strictly increasing list of positions.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws PreconditionError unless `positions` is strictly increasing and >= 1.
  explicit IndexSet(std::vector<int> positions);
  IndexSet(std::initializer_list<int> positions);

  /// Every position of {1..n}.
  static IndexSet full(int n);

  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  bool contains(int p) const;
  int operator[](std::size_t i) const noexcept { return positions_[i]; }
  std::span<const int> positions() const noexcept { return positions_; }
  auto begin() const noexcept { return positions_.begin(); }
  auto end() const noexcept { return positions_.end(); }

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> positions_;
};

Permutation identity(int n);

/// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);

/// Number of inversions.
int length(const Permutation& w);

/// Right action w*t_{a,b}: exchanges the entries in positions a and b.
Permutation apply_transposition_right(const Permutation& w, const Transposition& t);

/// x(i) = w(sigma^{-1}(i)) where sigma maps cycle[0] -> cycle[1] -> ... -> cycle[0].
/// The entry of w at cycle[j] moves to position cycle[j+1].
Permutation apply_cycle(const Permutation& w, std::span<const int> cycle);

/// The permutation of {1..|Z|} order-isomorphic to x restricted to the positions Z.
Permutation flatten(const Permutation& x, const IndexSet& z);
/// Flattens an arbitrary sequence of distinct integers.
Permutation flatten_values(std::span<const int> values);

/// The permutation agreeing with x off Z, reusing the values x takes on Z so that
/// flatten(result, Z) == u.
Permutation unflatten(const Permutation& x, const IndexSet& z, const Permutation& u);

/// True when positions z (ascending) of w form an occurrence of p.
bool is_occurrence(const Permutation& w, std::span<const int> positions, const Permutation& p);

/// All occurrences of the pattern p in w, in lexicographic order of positions.
std::vector<IndexSet> pattern_occurrences(const Permutation& w, const Permutation& p);
bool contains_pattern(const Permutation& w, const Permutation& p);

/// Accepts "6,8,4,7,5,3,1,2", "[6 8 4 7 5 3 1 2]" and mixed separators.
Permutation parse_one_line(std::string_view text);
/// Canonical rendering "[6,8,4,7,5,3,1,2]".
std::string format_one_line(const Permutation& w);
std::string format_transposition(const Transposition& t);

/// Every permutation of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubsing

template <>
struct std::hash<schubsing::Permutation> {
  std::size_t operator()(const schubsing::Permutation& w) const noexcept;
};
