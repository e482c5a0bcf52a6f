#pragma once

// Independent reference implementations for tests.  Nothing here calls the library's
// Bruhat, length or pattern code, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "schubsing/permutation.hpp"

namespace schubsing::testing {

inline std::vector<int> entries(const Permutation& w) { return {w.one_line().begin(), w.one_line().end()}; }

inline int naive_length(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j] ? 1 : 0;
  }
  return inv;
}

inline int naive_length(const Permutation& w) { return naive_length(entries(w)); }

inline std::vector<int> naive_swap(std::vector<int> v, int a, int b) {
  std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
  return v;
}

/// Upward Bruhat closure of x generated by x -> xt with l(xt) = l(x) + 1.
inline std::set<std::vector<int>> upset_by_covers(const std::vector<int>& x) {
  std::set<std::vector<int>> seen{x};
  std::vector<std::vector<int>> frontier{x};
  const int n = static_cast<int>(x.size());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& y : frontier) {
      const int ly = naive_length(y);
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          auto z = naive_swap(y, a, b);
          if (naive_length(z) == ly + 1 && seen.insert(z).second) next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Subsets of positions whose values are order-isomorphic to p, by bitmask scan.
inline std::vector<std::vector<int>> naive_occurrences(const Permutation& w, const Permutation& p) {
  std::vector<std::vector<int>> out;
  const int n = w.size();
  const int k = p.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> pos;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) pos.push_back(i + 1);
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k && ok; ++j) ok = (w(pos[i]) < w(pos[j])) == (p(i + 1) < p(j + 1));
    }
    if (ok) out.push_back(pos);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

/// Walks down from w through random length-decreasing transpositions.
inline Permutation random_below(const Permutation& w, std::mt19937_64& rng, int steps) {
  std::vector<int> v = entries(w);
  const int n = w.size();
  std::uniform_int_distribution<int> pos(1, n);
  for (int s = 0; s < steps; ++s) {
    const int a = pos(rng);
    const int b = pos(rng);
    if (a < b && v[static_cast<std::size_t>(a - 1)] > v[static_cast<std::size_t>(b - 1)]) v = naive_swap(v, a, b);
  }
  return Permutation(std::move(v));
}

}  // namespace schubsing::testing
