#pragma once

#include <utility>
#include <vector>

#include "schubsing/permutation.hpp"

namespace schubsing {

/// r_w(p,q) = #{i <= p : w(i) >= q} for 0 <= p <= n, 1 <= q <= n+1.
int rank(const Permutation& w, int p, int q);

/// The difference function d_{x,w}(p,q) = r_w(p,q) - r_x(p,q), stored eagerly on the
/// full grid 0 <= p <= n, 1 <= q <= n+1.  Row 0 and column n+1 are identically zero.
class DiffTable {
 public:
  DiffTable(const Permutation& x, const Permutation& w);

  int n() const noexcept { return n_; }
  const Permutation& x() const noexcept { return x_; }
  const Permutation& w() const noexcept { return w_; }

  /// d_{x,w}(p,q); throws PreconditionError outside the grid.
  int at(int p, int q) const;
  int operator()(int p, int q) const noexcept { return cells_[index(p, q)]; }

  /// Dual difference d'_{x,w}(p,q) = r'_w(p,q) - r'_x(p,q), r'_w(p,q) = #{i >= p : w(i) <= q}.
  int dual(int p, int q) const;

  int min() const noexcept;

  /// Smallest value on the lattice rectangle [p0,p1] x [q0,q1]; an empty rectangle
  /// reports a large sentinel so that "min >= 1" holds vacuously.
  int min_over(int p0, int p1, int q0, int q1) const noexcept;

 private:
  std::size_t index(int p, int q) const noexcept {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n_ + 2) + static_cast<std::size_t>(q);
  }

  int n_;
  Permutation x_;
  Permutation w_;
  std::vector<int> cells_;
};

/// Inclusive rectangle of the permutation-matrix grid: rows are positions, columns values.
struct Region {
  int row_lo;
  int row_hi;
  int col_lo;
  int col_hi;
};

/// x <= w in Bruhat order, decided by the sign of d_{x,w}.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// x < w strictly.
bool bruhat_less(const Permutation& x, const Permutation& w);

using ReflectionSet = std::vector<Transposition>;

/// R(x,w) = { t : x < xt <= w } in lexicographic order, computed from the shading of
/// d_{x,w}: t_{a,b} belongs iff x(a) < x(b) and d_{x,w} >= 1 on [a,b-1] x [x(a)+1,x(b)],
/// the lattice cells where d_{xt,w} = d_{x,w} - 1.
/// Throws PreconditionError unless x <= w.
ReflectionSet reflection_set(const Permutation& x, const Permutation& w);
ReflectionSet reflection_set(const DiffTable& table);

/// R(x,w) straight from the definition: every t with l(xt) > l(x) and xt <= w.
ReflectionSet reflection_set_direct(const Permutation& x, const Permutation& w);

/// Delta(x,w): positions touched by some member of R(x,w).
IndexSet delta(const Permutation& x, const Permutation& w);
IndexSet delta_of(const ReflectionSet& r);

/// (fl_Delta(x), fl_Delta(w)).  Throws PreconditionError when Delta is empty (x == w).
std::pair<Permutation, Permutation> tilde_restrict(const Permutation& x, const Permutation& w);

/// phi_t^{y,w}(t') per the case table indexed by fl_{abc}(y), the role of t', and
/// whether t_{a,c} is in R(y,w).  Requires yt < y <= w and t' in R(y,w).
Transposition phi_map(const Permutation& y, const Permutation& w, const Transposition& t,
                      const Transposition& tp);

/// phi_map with R(y,w) already known; only the preconditions on t are checked.
Transposition phi_map(const Permutation& y, const ReflectionSet& r_y, const Transposition& t,
                      const Transposition& tp);

/// E_t(x,w) = R(x,w) \ ({t} u phi_t^{xt,w}(R(xt,w))).  Requires t in R(x,w).
ReflectionSet extra_set(const Permutation& x, const Permutation& w, const Transposition& t);

/// Theta_{x,w}(R) = #{w-points in R} - #{x-points in R}.
int region_signed_count(const Permutation& x, const Permutation& w, const Region& region);

/// Elements covered by y in Bruhat order (y t with l(yt) = l(y) - 1).
std::vector<Permutation> lower_covers(const Permutation& y);
/// Elements covering y (y t with l(yt) = l(y) + 1).
std::vector<Permutation> upper_covers(const Permutation& y);

}  // namespace schubsing
