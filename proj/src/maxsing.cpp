#include "schubsing/maxsing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "schubsing/bruhat.hpp"
#include "schubsing/error.hpp"

namespace schubsing {

bool FamilyParams::valid() const noexcept {
  if (variant == FamilyVariant::TwoRuns) return l == 0 && k >= 2 && m >= 2;
  return (l == 2 && k >= 1 && m >= 1) || (k == 1 && m == 1 && l >= 2);
}

std::string to_string(const FamilyParams& p) {
  if (p.variant == FamilyVariant::TwoRuns) {
    return "TwoRuns(" + std::to_string(p.k) + "," + std::to_string(p.m) + ")";
  }
  return "ThreeRuns(" + std::to_string(p.k) + "," + std::to_string(p.l) + "," +
         std::to_string(p.m) + ")";
}

namespace {

void push_descending(std::vector<int>& out, int from, int to) {
  for (int v = from; v >= to; --v) out.push_back(v);
}

}  // namespace

std::pair<Permutation, Permutation> canonical_family(const FamilyParams& p) {
  if (!p.valid()) throw PreconditionError("canonical_family: invalid parameters " + to_string(p));
  const int k = p.k, l = p.l, m = p.m;
  std::vector<int> x, w;
  if (p.variant == FamilyVariant::TwoRuns) {
    push_descending(x, k, 1);
    push_descending(x, k + m, k + 1);
    w.push_back(k + m);
    push_descending(w, k, 2);
    push_descending(w, k + m - 1, k + 1);
    w.push_back(1);
  } else {
    push_descending(x, k, 1);
    push_descending(x, k + l, k + 1);
    push_descending(x, k + l + m, k + l + 1);
    w.push_back(k + l);
    push_descending(w, k, 2);
    w.push_back(k + l + m);
    push_descending(w, k + l - 1, k + 2);
    w.push_back(1);
    push_descending(w, k + l + m - 1, k + l + 1);
    w.push_back(k + 1);
  }
  return {Permutation(std::move(x)), Permutation(std::move(w))};
}

std::optional<FamilyParams> match_family(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) return std::nullopt;
  // x must be a concatenation of blocks [s+L, ..., s+1] with increasing offsets s.
  std::vector<int> blocks;
  int i = 1;
  while (i <= x.size()) {
    const int len = x(i) - i + 1;
    if (len < 1) return std::nullopt;
    for (int j = 0; j < len; ++j) {
      if (i + j > x.size() || x(i + j) != x(i) - j) return std::nullopt;
    }
    blocks.push_back(len);
    i += len;
  }
  FamilyParams p{};
  if (blocks.size() == 2) {
    p = FamilyParams::two_runs(blocks[0], blocks[1]);
  } else if (blocks.size() == 3) {
    p = FamilyParams::three_runs(blocks[0], blocks[1], blocks[2]);
  } else {
    return std::nullopt;
  }
  if (!p.valid()) return std::nullopt;
  if (canonical_family(p).second != w) return std::nullopt;
  return p;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::C4231: return "4231";
    case CaseTag::C3412: return "3412";
    case CaseTag::C45312: return "45312";
  }
  return "?";
}

std::vector<int> component_cycle(const std::vector<int>& alphas, const std::vector<int>& betas) {
  std::vector<int> cycle(alphas);
  cycle.insert(cycle.end(), betas.rbegin(), betas.rend());
  return cycle;
}

namespace {

bool w_decreasing(const Permutation& w, const std::vector<int>& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (w(s[i - 1]) <= w(s[i])) return false;
  }
  return true;
}

// Positions strictly between rows r0 and r1 whose w-value lies strictly between v0 and v1.
std::vector<int> points_in(const Permutation& w, int r0, int r1, int v0, int v1) {
  std::vector<int> out;
  for (int p = r0 + 1; p < r1; ++p) {
    if (w(p) > v0 && w(p) < v1) out.push_back(p);
  }
  return out;
}

// Collects the points of the open rectangle, giving up as soon as they stop decreasing.
bool collect_decreasing(const Permutation& w, int r0, int r1, int v0, int v1, std::vector<int>& out) {
  out.clear();
  for (int p = r0 + 1; p < r1; ++p) {
    const int v = w(p);
    if (v <= v0 || v >= v1) continue;
    if (!out.empty() && w(out.back()) < v) return false;
    out.push_back(p);
  }
  return true;
}

// Points of the open rectangle with no other point of it above-left (smaller row and
// smaller value).  These form a decreasing chain; every other point lies below-right.
void lower_chain(const Permutation& w, int r0, int r1, int v0, int v1, std::vector<int>& out) {
  out.clear();
  int best = v1;
  for (int p = r0 + 1; p < r1; ++p) {
    const int v = w(p);
    if (v <= v0 || v >= best) continue;
    out.push_back(p);
    best = v;
  }
}

// Points of the open rectangle with no other point of it below-right.
void upper_chain(const Permutation& w, int r0, int r1, int v0, int v1, std::vector<int>& out) {
  out.clear();
  int best = v0;
  for (int p = r1 - 1; p > r0; --p) {
    const int v = w(p);
    if (v >= v1 || v <= best) continue;
    out.push_back(p);
    best = v;
  }
  std::reverse(out.begin(), out.end());
}

bool case_conditions_hold(const Permutation& w, const Component& c) {
  const auto& al = c.alphas;
  const auto& be = c.betas;
  const std::size_t m = al.size();
  const std::size_t k = be.size();
  switch (c.tag) {
    case CaseTag::C4231:
      return k >= 2 && m >= 2 && al[0] < be[0] && be[k - 2] < al[1] && al[m - 1] < be[k - 1] &&
             w(al[m - 1]) > w(be[0]);
    case CaseTag::C3412:
      return k >= 2 && m >= 2 && be[k - 2] < al[0] && al[0] < be[k - 1] && be[k - 1] < al[1] &&
             w(al[m - 2]) > w(be[0]) && w(be[0]) > w(al[m - 1]) && w(al[m - 1]) > w(be[1]);
    case CaseTag::C45312: {
      if (k != 2 || m != 2) return false;
      if (!(be[0] < al[0] && al[0] < be[1] && be[1] < al[1])) return false;
      if (!(w(al[0]) > w(be[0]) && w(be[0]) > w(al[1]) && w(al[1]) > w(be[1]))) return false;
      return w_decreasing(w, points_in(w, al[0], be[1], w(al[1]), w(be[0])));
    }
  }
  return false;
}

}  // namespace

bool verify_component(const Permutation& w, const Component& c) {
  const int n = w.size();
  auto check_positions = [n](const std::vector<int>& s, const char* name) {
    if (s.empty()) throw PreconditionError(std::string("component: empty ") + name + " sequence");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n) throw PreconditionError(std::string("component: ") + name + " out of range");
      if (i > 0 && s[i] <= s[i - 1]) {
        throw PreconditionError(std::string("component: ") + name + " not strictly increasing");
      }
    }
  };
  check_positions(c.alphas, "alpha");
  check_positions(c.betas, "beta");
  if (c.x.size() != n) throw PreconditionError("component: x has the wrong size");

  for (int a : c.alphas) {
    if (std::binary_search(c.betas.begin(), c.betas.end(), a)) return false;
  }
  if (!w_decreasing(w, c.alphas) || !w_decreasing(w, c.betas)) return false;
  if (!case_conditions_hold(w, c)) return false;

  const std::vector<int> cycle = component_cycle(c.alphas, c.betas);
  if (apply_cycle(w, cycle) != c.x) return false;

  std::vector<bool> exempt(static_cast<std::size_t>(n + 1), false);
  for (int p : cycle) exempt[static_cast<std::size_t>(p)] = true;
  if (c.tag == CaseTag::C45312) {
    for (int p : points_in(w, c.alphas[0], c.betas[1], w(c.alphas[1]), w(c.betas[0]))) {
      exempt[static_cast<std::size_t>(p)] = true;
    }
  }

  // d_{x,w}(p,q); positions off the cycle contribute equally to both rank functions.
  const Permutation& x = c.x;
  auto d = [&](int p, int q) {
    int sum = 0;
    for (int i : cycle) {
      if (i <= p) sum += (w(i) >= q ? 1 : 0) - (x(i) >= q ? 1 : 0);
    }
    return sum;
  };
  // A fixed 1 of mat(w) sits inside the shaded region exactly when d_{x,w} is positive
  // just above it or just to its right.
  for (int p = 1; p <= n; ++p) {
    if (exempt[static_cast<std::size_t>(p)]) continue;
    if (d(p - 1, w(p)) != 0 || d(p, w(p) + 1) != 0) return false;
  }
  return bruhat_leq(x, w);
}

std::vector<Component> enumerate_components(const Permutation& w) {
  const int n = w.size();
  std::map<Permutation, Component> found;
  auto consider = [&](CaseTag tag, std::vector<int> alphas, std::vector<int> betas) {
    Permutation x = apply_cycle(w, component_cycle(alphas, betas));
    if (found.contains(x)) return;
    Component c{tag, std::move(alphas), std::move(betas), x};
    if (verify_component(w, c)) found.emplace(std::move(x), std::move(c));
  };

  std::vector<int> inner_a, inner_b;

  // 4231 frames (alpha_1, beta_1, alpha_m, beta_k).
  for (int a1 = 1; a1 <= n; ++a1) {
    for (int b1 = a1 + 1; b1 <= n; ++b1) {
      if (w(b1) > w(a1)) continue;
      for (int am = b1 + 1; am <= n; ++am) {
        if (w(am) < w(b1) || w(am) > w(a1)) continue;
        lower_chain(w, a1, am, w(am), w(a1), inner_a);
        for (int bk = am + 1; bk <= n; ++bk) {
          if (w(bk) > w(b1)) continue;
          upper_chain(w, b1, bk, w(bk), w(b1), inner_b);
          // All of beta_2..beta_{k-1} must precede alpha_2.
          const int alpha2 = inner_a.empty() ? am : inner_a.front();
          if (!inner_b.empty() && inner_b.back() > alpha2) continue;
          std::vector<int> alphas{a1};
          alphas.insert(alphas.end(), inner_a.begin(), inner_a.end());
          alphas.push_back(am);
          std::vector<int> betas{b1};
          betas.insert(betas.end(), inner_b.begin(), inner_b.end());
          betas.push_back(bk);
          consider(CaseTag::C4231, std::move(alphas), std::move(betas));
        }
      }
    }
  }

  // 3412 frames (beta_1, alpha_1, beta_k, alpha_m), plus the 45312 reading of the
  // same frame with k = m = 2.
  for (int b1 = 1; b1 <= n; ++b1) {
    for (int a1 = b1 + 1; a1 <= n; ++a1) {
      if (w(a1) < w(b1)) continue;
      for (int bk = a1 + 1; bk <= n; ++bk) {
        if (w(bk) > w(b1)) continue;
        for (int am = bk + 1; am <= n; ++am) {
          if (w(am) > w(b1) || w(am) < w(bk)) continue;
          upper_chain(w, b1, a1, w(bk), w(am), inner_b);
          lower_chain(w, bk, am, w(b1), w(a1), inner_a);
          {
            std::vector<int> alphas{a1};
            alphas.insert(alphas.end(), inner_a.begin(), inner_a.end());
            alphas.push_back(am);
            std::vector<int> betas{b1};
            betas.insert(betas.end(), inner_b.begin(), inner_b.end());
            betas.push_back(bk);
            consider(CaseTag::C3412, std::move(alphas), std::move(betas));
          }
          if (collect_decreasing(w, a1, bk, w(am), w(b1), inner_a)) {
            consider(CaseTag::C45312, {a1, am}, {b1, bk});
          }
        }
      }
    }
  }

  std::vector<Component> out;
  out.reserve(found.size());
  for (auto& [x, c] : found) out.push_back(std::move(c));
  return out;
}

std::vector<Permutation> maxsing(const Permutation& w) {
  std::vector<Permutation> out;
  for (auto& c : enumerate_components(w)) out.push_back(std::move(c.x));
  return out;
}

namespace {

struct UselessRule {
  Permutation longer;
  std::vector<int> letters;  // letters of `longer` forming the discarded sub-pattern
};

const std::vector<UselessRule>& useless_rules() {
  static const std::vector<UselessRule> rules = {
      {{5, 2, 3, 4, 1}, {5, 2, 4, 1}},       {{5, 2, 4, 3, 1}, {5, 2, 4, 1}},
      {{5, 3, 2, 4, 1}, {5, 2, 4, 1}},       {{5, 3, 4, 2, 1}, {5, 3, 4, 1}},
      {{5, 4, 2, 3, 1}, {5, 2, 3, 1}},       {{3, 5, 4, 1, 2}, {3, 5, 1, 2}},
      {{4, 3, 5, 1, 2}, {4, 5, 1, 2}},       {{4, 5, 1, 3, 2}, {4, 5, 1, 2}},
      {{4, 5, 2, 1, 3}, {4, 5, 1, 3}},       {{6, 3, 5, 2, 4, 1}, {6, 3, 4, 1}},
      {{5, 6, 3, 4, 1, 2}, {5, 6, 1, 2}},    {{5, 2, 6, 4, 1, 3}, {5, 6, 1, 3}},
      {{4, 6, 3, 1, 5, 2}, {4, 6, 1, 2}},
  };
  return rules;
}

}  // namespace

std::vector<IndexSet> useful_patterns(const Permutation& w) {
  static const Permutation p4231{4, 2, 3, 1};
  static const Permutation p3412{3, 4, 1, 2};
  std::set<IndexSet> alive;
  for (auto& occ : pattern_occurrences(w, p4231)) alive.insert(std::move(occ));
  for (auto& occ : pattern_occurrences(w, p3412)) alive.insert(std::move(occ));
  if (alive.empty()) return {};

  for (const auto& rule : useless_rules()) {
    // Offsets of the sub-pattern's letters inside the longer pattern.
    std::vector<std::size_t> offsets;
    for (int j = 1; j <= rule.longer.size(); ++j) {
      if (std::find(rule.letters.begin(), rule.letters.end(), rule.longer(j)) != rule.letters.end()) {
        offsets.push_back(static_cast<std::size_t>(j - 1));
      }
    }
    for (const auto& occ : pattern_occurrences(w, rule.longer)) {
      std::vector<int> sub;
      for (std::size_t o : offsets) sub.push_back(occ[o]);
      alive.erase(IndexSet(std::move(sub)));
    }
  }
  return {alive.begin(), alive.end()};
}

int useful_pattern_count(const Permutation& w) { return static_cast<int>(useful_patterns(w).size()); }

}  // namespace schubsing
