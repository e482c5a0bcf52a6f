#include "schubsing/singular_oracle.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "schubsing/bruhat.hpp"
#include "schubsing/error.hpp"

namespace schubsing {

namespace {

void require_bound(const Permutation& w, int bound, const char* what) {
  if (w.size() > bound || w.size() > 16) {
    throw CapabilityError(std::string(what) + ": n = " + std::to_string(w.size()) +
                          " exceeds the oracle bound " + std::to_string(std::min(bound, 16)));
  }
}

void require_below(const Permutation& x, const Permutation& w, const char* what) {
  if (x.size() != w.size() || !bruhat_leq(x, w)) {
    throw PreconditionError(std::string(what) + ": " + format_one_line(x) + " is not below " +
                            format_one_line(w));
  }
}

}  // namespace

SmoothnessReport is_smooth_point(const Permutation& x, const Permutation& w) {
  require_below(x, w, "is_smooth_point");
  const int r = static_cast<int>(reflection_set(x, w).size());
  const int codim = length(w) - length(x);
  return {x, w, r, codim, r == codim};
}

bool is_smooth_variety(const Permutation& w) {
  static const Permutation p4231{4, 2, 3, 1};
  static const Permutation p3412{3, 4, 1, 2};
  return !contains_pattern(w, p4231) && !contains_pattern(w, p3412);
}

std::vector<Permutation> lower_interval(const Permutation& w) {
  std::vector<Permutation> out{w};
  std::unordered_set<Permutation> seen{w};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto& y : lower_covers(out[i])) {
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

std::vector<Permutation> bruhat_maximal(std::vector<Permutation> elements) {
  // Longest first: an element is maximal iff it lies below none of the maximal
  // elements already kept.
  std::vector<std::pair<int, Permutation>> by_length;
  by_length.reserve(elements.size());
  for (auto& e : elements) by_length.emplace_back(length(e), std::move(e));
  std::sort(by_length.begin(), by_length.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Permutation> maximal;
  for (auto& [len, e] : by_length) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                       [&](const Permutation& m) { return bruhat_leq(e, m); });
    if (!dominated) maximal.push_back(std::move(e));
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  return maximal;
}

std::vector<Permutation> maxsing_bruteforce(const Permutation& w, int bound) {
  require_bound(w, bound, "maxsing_bruteforce");
  const std::vector<Permutation> interval = lower_interval(w);
  std::unordered_set<std::uint64_t> members;
  members.reserve(interval.size() * 2);
  for (const auto& x : interval) members.insert(x.pack());

  const int n = w.size();
  const int lw = length(w);
  std::vector<Permutation> singular;
  for (const auto& x : interval) {
    // xt <= w iff xt lies in the (downward closed) interval.
    int r = 0;
    std::vector<int> e(x.one_line().begin(), x.one_line().end());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (e[static_cast<std::size_t>(a)] > e[static_cast<std::size_t>(b)]) continue;
        std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
        r += members.contains(make_unchecked(e).pack()) ? 1 : 0;
        std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
      }
    }
    if (r > lw - length(x)) singular.push_back(x);
  }
  return bruhat_maximal(std::move(singular));
}

bool is_msp(const Permutation& x, const Permutation& w) {
  require_below(x, w, "is_msp");
  const ReflectionSet r = reflection_set(x, w);
  const int lw = length(w);
  if (static_cast<int>(r.size()) <= lw - length(x)) return false;
  for (const auto& t : r) {
    const Permutation y = apply_transposition_right(x, t);
    if (static_cast<int>(reflection_set(y, w).size()) != lw - length(y)) return false;
  }
  return true;
}

std::optional<FamilyParams> msp_family(const Permutation& x, const Permutation& w) {
  require_below(x, w, "is_msp_by_family");
  if (x == w) return std::nullopt;
  const ReflectionSet r = reflection_set(x, w);
  const int lx = length(x);
  for (const auto& t : r) {
    if (length(apply_transposition_right(x, t)) != lx + 1) return std::nullopt;
  }
  const IndexSet d = delta_of(r);
  return match_family(flatten(x, d), flatten(w, d));
}

bool is_msp_by_family(const Permutation& x, const Permutation& w) {
  return msp_family(x, w).has_value();
}

namespace {

struct EwShape {
  Permutation w_pattern;  // pattern of w at (i,j,k,l)
  Permutation x_pattern;  // pattern of x at (i',j',k',l')
};

const std::array<EwShape, 2>& ew_shapes() {
  static const std::array<EwShape, 2> shapes{{
      {Permutation{3, 4, 1, 2}, Permutation{1, 3, 2, 4}},
      {Permutation{4, 2, 3, 1}, Permutation{2, 1, 4, 3}},
  }};
  return shapes;
}

bool in_ew_with(const Permutation& x, const Permutation& w, const Permutation& winv_x,
                const std::vector<std::pair<IndexSet, const EwShape*>>& occurrences) {
  for (const auto& [occ, shape] : occurrences) {
    std::vector<int> primed;
    for (int p : occ) primed.push_back(winv_x(w(p)));
    std::sort(primed.begin(), primed.end());
    const IndexSet xs(std::move(primed));
    if (flatten(x, xs) != shape->x_pattern) continue;
    const Permutation w_low = unflatten(w, occ, shape->x_pattern);
    const Permutation x_high = unflatten(x, xs, shape->w_pattern);
    if (bruhat_leq(w_low, x) && bruhat_leq(x, x_high) && bruhat_leq(x_high, w)) return true;
  }
  return false;
}

std::vector<std::pair<IndexSet, const EwShape*>> ew_occurrences(const Permutation& w) {
  std::vector<std::pair<IndexSet, const EwShape*>> out;
  for (const auto& shape : ew_shapes()) {
    for (auto& occ : pattern_occurrences(w, shape.w_pattern)) out.emplace_back(std::move(occ), &shape);
  }
  return out;
}

}  // namespace

bool in_ew(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw PreconditionError("in_ew: size mismatch");
  return in_ew_with(x, w, inverse(x), ew_occurrences(w));
}

std::vector<Permutation> ew_maximal(const Permutation& w, int bound) {
  require_bound(w, bound, "ew_maximal");
  const auto occurrences = ew_occurrences(w);
  if (occurrences.empty()) return {};
  // Every member of E_w satisfies x <= w, so the interval is a complete candidate list.
  std::vector<Permutation> members;
  for (const auto& x : lower_interval(w)) {
    if (in_ew_with(x, w, inverse(x), occurrences)) members.push_back(x);
  }
  return bruhat_maximal(std::move(members));
}

}  // namespace schubsing
