#include "schubsing/bruhat.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>

#include "schubsing/error.hpp"

namespace schubsing {

namespace {

void require_same_size(const Permutation& x, const Permutation& w, const char* op) {
  if (x.size() != w.size()) throw PreconditionError(std::string(op) + ": size mismatch");
}

bool contains(const ReflectionSet& r, const Transposition& t) {
  return std::binary_search(r.begin(), r.end(), t);
}

}  // namespace

int rank(const Permutation& w, int p, int q) {
  const int n = w.size();
  if (p < 0 || p > n || q < 1 || q > n + 1) {
    throw PreconditionError("rank: (p,q) outside 0..n x 1..n+1");
  }
  int count = 0;
  for (int i = 1; i <= p; ++i) count += w(i) >= q ? 1 : 0;
  return count;
}

DiffTable::DiffTable(const Permutation& x, const Permutation& w)
    : n_(w.size()),
      x_(x),
      w_(w),
      cells_(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 2), 0) {
  require_same_size(x, w, "diff_table");
  // Column 0 is kept (d(p,0) = 0) so that q can be used as a direct index.
  for (int p = 1; p <= n_; ++p) {
    for (int q = 0; q <= n_ + 1; ++q) {
      cells_[index(p, q)] = cells_[index(p - 1, q)] + (w(p) >= q ? 1 : 0) - (x(p) >= q ? 1 : 0);
    }
  }
}

int DiffTable::at(int p, int q) const {
  if (p < 0 || p > n_ || q < 1 || q > n_ + 1) {
    throw PreconditionError("diff table: (p,q) outside 0..n x 1..n+1");
  }
  return (*this)(p, q);
}

int DiffTable::dual(int p, int q) const {
  if (p < 1 || p > n_ + 1 || q < 0 || q > n_) {
    throw PreconditionError("dual diff: (p,q) outside 1..n+1 x 0..n");
  }
  int d = 0;
  for (int i = p; i <= n_; ++i) d += (w_(i) <= q ? 1 : 0) - (x_(i) <= q ? 1 : 0);
  return d;
}

int DiffTable::min() const noexcept { return *std::min_element(cells_.begin(), cells_.end()); }

int DiffTable::min_over(int p0, int p1, int q0, int q1) const noexcept {
  int best = std::numeric_limits<int>::max();
  for (int p = std::max(p0, 0); p <= std::min(p1, n_); ++p) {
    for (int q = std::max(q0, 0); q <= std::min(q1, n_ + 1); ++q) {
      best = std::min(best, (*this)(p, q));
    }
  }
  return best;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  require_same_size(x, w, "bruhat_leq");
  const int n = w.size();
  // Row-by-row accumulation of d(p, .), stopping at the first negative cell.
  std::vector<int> row(static_cast<std::size_t>(n + 2), 0);
  for (int p = 1; p <= n; ++p) {
    const int wp = w(p);
    const int xp = x(p);
    if (wp == xp) continue;
    if (wp > xp) {
      for (int q = xp + 1; q <= wp; ++q) ++row[static_cast<std::size_t>(q)];
    } else {
      for (int q = wp + 1; q <= xp; ++q) {
        if (--row[static_cast<std::size_t>(q)] < 0) return false;
      }
    }
  }
  return true;
}

bool bruhat_less(const Permutation& x, const Permutation& w) { return x != w && bruhat_leq(x, w); }

ReflectionSet reflection_set(const DiffTable& table) {
  if (table.min() < 0) {
    throw PreconditionError("reflection_set: " + format_one_line(table.x()) + " is not below " +
                            format_one_line(table.w()));
  }
  const Permutation& x = table.x();
  const int n = table.n();
  ReflectionSet out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (x(a) < x(b) && table.min_over(a, b - 1, x(a) + 1, x(b)) >= 1) out.push_back({a, b});
    }
  }
  return out;
}

ReflectionSet reflection_set(const Permutation& x, const Permutation& w) {
  return reflection_set(DiffTable(x, w));
}

ReflectionSet reflection_set_direct(const Permutation& x, const Permutation& w) {
  if (!bruhat_leq(x, w)) {
    throw PreconditionError("reflection_set: " + format_one_line(x) + " is not below " +
                            format_one_line(w));
  }
  ReflectionSet out;
  for (int a = 1; a <= x.size(); ++a) {
    for (int b = a + 1; b <= x.size(); ++b) {
      const Transposition t{a, b};
      if (x(a) < x(b) && bruhat_leq(apply_transposition_right(x, t), w)) out.push_back(t);
    }
  }
  return out;
}

IndexSet delta_of(const ReflectionSet& r) {
  std::vector<int> touched;
  for (const auto& t : r) {
    touched.push_back(t.a);
    touched.push_back(t.b);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  return IndexSet(std::move(touched));
}

IndexSet delta(const Permutation& x, const Permutation& w) {
  return delta_of(reflection_set(x, w));
}

std::pair<Permutation, Permutation> tilde_restrict(const Permutation& x, const Permutation& w) {
  const IndexSet d = delta(x, w);
  if (d.empty()) throw PreconditionError("tilde_restrict: Delta(x,w) is empty (x == w)");
  return {flatten(x, d), flatten(w, d)};
}

namespace {

enum class Pair { AB, AC, BC };

struct PhiRow {
  int pattern;                      // fl_{abc}(y) as a 3-digit code
  Pair t;                           // role of t
  Pair tp;                          // role of t'
  std::optional<bool> ac_in_r;      // membership of t_{a,c} in R(y,w), when it selects the row
  Pair image;                       // phi_t(t')
};

// One row per line of the decision table (cases A.i through D.ii).
constexpr std::array<PhiRow, 10> kPhiTable{{
    {213, Pair::AB, Pair::AC, std::nullopt, Pair::BC},  // A.i
    {213, Pair::AB, Pair::BC, false, Pair::BC},         // A.ii
    {213, Pair::AB, Pair::BC, true, Pair::AC},          // A.iii
    {132, Pair::BC, Pair::AC, std::nullopt, Pair::AB},  // B.i
    {132, Pair::BC, Pair::AB, false, Pair::AB},         // B.ii
    {132, Pair::BC, Pair::AB, true, Pair::AC},          // B.iii
    {312, Pair::AB, Pair::BC, std::nullopt, Pair::AC},  // C.i
    {312, Pair::AC, Pair::BC, std::nullopt, Pair::BC},  // C.ii
    {231, Pair::BC, Pair::AB, std::nullopt, Pair::AC},  // D.i
    {231, Pair::AC, Pair::AB, std::nullopt, Pair::AB},  // D.ii
}};

Pair role_of(const Transposition& t, int a, int b, int c) {
  if (t.a == a && t.b == b) return Pair::AB;
  if (t.a == a && t.b == c) return Pair::AC;
  (void)b;
  (void)c;
  return Pair::BC;
}

Transposition make_pair(Pair p, int a, int b, int c) {
  switch (p) {
    case Pair::AB: return {a, b};
    case Pair::AC: return {a, c};
    case Pair::BC: return {b, c};
  }
  return {a, b};
}

}  // namespace

Transposition phi_map(const Permutation& y, const ReflectionSet& r_y, const Transposition& t,
                      const Transposition& tp) {
  if (t.b > y.size() || tp.b > y.size()) throw PreconditionError("phi_map: transposition out of range");
  if (y(t.a) < y(t.b)) throw PreconditionError("phi_map: requires yt < y");
  if (t == tp) throw PreconditionError("phi_map: t' must differ from t");
  if (t.commutes_with(tp)) return tp;

  std::array<int, 4> idx{t.a, t.b, tp.a, tp.b};
  std::sort(idx.begin(), idx.end());
  // Exactly one index is shared, so the sorted list holds a duplicate.
  std::array<int, 3> abc{};
  std::unique_copy(idx.begin(), idx.end(), abc.begin());
  const int a = abc[0], b = abc[1], c = abc[2];
  const std::array<int, 3> vals{y(a), y(b), y(c)};
  const Permutation local = flatten_values(vals);
  const int pattern = local(1) * 100 + local(2) * 10 + local(3);
  const Pair t_role = role_of(t, a, b, c);
  const Pair tp_role = role_of(tp, a, b, c);
  const bool ac_in_r = contains(r_y, Transposition{a, c});

  for (const auto& row : kPhiTable) {
    if (row.pattern != pattern || row.t != t_role || row.tp != tp_role) continue;
    if (row.ac_in_r && *row.ac_in_r != ac_in_r) continue;
    return make_pair(row.image, a, b, c);
  }
  throw PreconditionError("phi_map: configuration violates t' in R(y,w)");
}

Transposition phi_map(const Permutation& y, const Permutation& w, const Transposition& t,
                      const Transposition& tp) {
  const ReflectionSet r_y = reflection_set(y, w);
  if (!contains(r_y, tp)) throw PreconditionError("phi_map: t' is not in R(y,w)");
  return phi_map(y, r_y, t, tp);
}

ReflectionSet extra_set(const Permutation& x, const Permutation& w, const Transposition& t) {
  const ReflectionSet r_x = reflection_set(x, w);
  if (!contains(r_x, t)) throw PreconditionError("extra_set: t is not in R(x,w)");
  const Permutation y = apply_transposition_right(x, t);
  const ReflectionSet r_y = reflection_set(y, w);
  ReflectionSet image;
  image.reserve(r_y.size());
  for (const auto& tp : r_y) image.push_back(phi_map(y, r_y, t, tp));
  std::sort(image.begin(), image.end());
  ReflectionSet out;
  for (const auto& s : r_x) {
    if (s != t && !contains(image, s)) out.push_back(s);
  }
  return out;
}

int region_signed_count(const Permutation& x, const Permutation& w, const Region& region) {
  require_same_size(x, w, "region_signed_count");
  const int n = w.size();
  if (region.row_lo < 1 || region.row_hi > n || region.col_lo < 1 || region.col_hi > n ||
      region.row_lo > region.row_hi || region.col_lo > region.col_hi) {
    throw PreconditionError("region_signed_count: region outside the n x n grid");
  }
  int theta = 0;
  for (int p = region.row_lo; p <= region.row_hi; ++p) {
    theta += (w(p) >= region.col_lo && w(p) <= region.col_hi) ? 1 : 0;
    theta -= (x(p) >= region.col_lo && x(p) <= region.col_hi) ? 1 : 0;
  }
  return theta;
}

namespace {

std::vector<Permutation> covers(const Permutation& y, bool down) {
  std::vector<Permutation> out;
  const int n = y.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const int hi = down ? y(a) : y(b);
      const int lo = down ? y(b) : y(a);
      if (hi < lo) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c) blocked = y(c) > lo && y(c) < hi;
      if (!blocked) out.push_back(apply_transposition_right(y, {a, b}));
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> lower_covers(const Permutation& y) { return covers(y, true); }
std::vector<Permutation> upper_covers(const Permutation& y) { return covers(y, false); }

}  // namespace schubsing
