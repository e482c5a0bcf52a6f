#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "schubsing/bruhat.hpp"
#include "schubsing/error.hpp"
#include "support.hpp"

using namespace schubsing;
namespace st = schubsing::testing;

namespace {

bool contains(const ReflectionSet& r, const Transposition& t) {
  return std::find(r.begin(), r.end(), t) != r.end();
}

bool subset(const IndexSet& a, const IndexSet& b) {
  return std::all_of(a.begin(), a.end(), [&](int p) { return b.contains(p); });
}

// Every (y, w) with y <= w in S_n.
std::vector<std::pair<Permutation, Permutation>> comparable_pairs(int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const auto all = all_permutations(n);
  for (const auto& w : all) {
    for (const auto& y : all) {
      if (bruhat_leq(y, w)) out.emplace_back(y, w);
    }
  }
  return out;
}

}  // namespace

TEST(Bruhat, Rank) {
  EXPECT_EQ(rank(Permutation{3, 4, 1, 2}, 2, 3), 2);
  EXPECT_EQ(rank(Permutation{3, 4, 1, 2}, 0, 1), 0);
  EXPECT_EQ(rank(identity(5), 5, 1), 5);
  EXPECT_THROW(rank(identity(3), 4, 1), PreconditionError);
  EXPECT_THROW(rank(identity(3), 1, 0), PreconditionError);
}

TEST(Bruhat, DiffTableExamples) {
  const DiffTable same(Permutation{3, 1, 2}, Permutation{3, 1, 2});
  EXPECT_EQ(same.min(), 0);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 1; q <= 4; ++q) EXPECT_EQ(same.at(p, q), 0);
  }
  const DiffTable d(Permutation{1, 3, 2, 4}, Permutation{3, 4, 1, 2});
  EXPECT_EQ(d.at(1, 2), 1);
  EXPECT_EQ(d.at(2, 2), 1);
  EXPECT_EQ(d.at(3, 4), 1);
  EXPECT_GE(d.min(), 0);
  EXPECT_EQ(DiffTable(Permutation{2, 1}, Permutation{1, 2}).at(1, 2), -1);
  EXPECT_THROW(DiffTable(identity(2), identity(3)), PreconditionError);
  EXPECT_THROW(d.at(5, 1), PreconditionError);
}

TEST(Bruhat, DiffTableInvariants) {
  for (const auto& x : all_permutations(4)) {
    for (const auto& w : all_permutations(4)) {
      const DiffTable d(x, w);
      for (int q = 1; q <= 5; ++q) EXPECT_EQ(d.at(0, q), 0);
      for (int p = 0; p <= 4; ++p) EXPECT_EQ(d.at(p, 5), 0);
      for (int p = 0; p <= 4; ++p) {
        for (int q = 1; q <= 5; ++q) {
          EXPECT_EQ(d.at(p, q), rank(w, p, q) - rank(x, p, q));
          if (p < 4) {
            EXPECT_LE(std::abs(d.at(p, q) - d.at(p + 1, q)), 1);
          }
          if (q < 5) {
            EXPECT_LE(std::abs(d.at(p, q) - d.at(p, q + 1)), 1);
          }
        }
      }
      // Dual table: r'_w(p,q) = #{i >= p : w(i) <= q}.
      for (int p = 1; p <= 5; ++p) {
        for (int q = 0; q <= 4; ++q) {
          int expect = 0;
          for (int i = p; i <= 4; ++i) expect += (w(i) <= q ? 1 : 0) - (x(i) <= q ? 1 : 0);
          EXPECT_EQ(d.dual(p, q), expect);
        }
      }
    }
  }
}

TEST(Bruhat, LeqExamples) {
  for (const auto& w : all_permutations(4)) EXPECT_TRUE(bruhat_leq(identity(4), w));
  EXPECT_TRUE(bruhat_leq(Permutation{2, 1, 4, 3}, Permutation{4, 2, 3, 1}));
  EXPECT_FALSE(bruhat_leq(Permutation{2, 1}, Permutation{1, 2}));
  EXPECT_THROW(bruhat_leq(identity(2), identity(3)), PreconditionError);
}

TEST(Bruhat, LeqMatchesCoverClosure) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto& x : all) {
      const auto up = st::upset_by_covers(st::entries(x));
      for (const auto& w : all) {
        ASSERT_EQ(bruhat_leq(x, w), up.contains(st::entries(w))) << format_one_line(x) << format_one_line(w);
      }
    }
  }
}

TEST(Bruhat, CoversRaiseLengthByOne) {
  for (const auto& y : all_permutations(5)) {
    std::set<Permutation> expected_down;
    std::set<Permutation> expected_up;
    for (int a = 1; a <= 5; ++a) {
      for (int b = a + 1; b <= 5; ++b) {
        const Permutation z(st::naive_swap(st::entries(y), a, b));
        if (st::naive_length(z) == st::naive_length(y) - 1) expected_down.insert(z);
        if (st::naive_length(z) == st::naive_length(y) + 1) expected_up.insert(z);
      }
    }
    const auto down = lower_covers(y);
    const auto up = upper_covers(y);
    EXPECT_EQ(std::set<Permutation>(down.begin(), down.end()), expected_down);
    EXPECT_EQ(std::set<Permutation>(up.begin(), up.end()), expected_up);
  }
}

TEST(Bruhat, MonotoneDifference) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    const Permutation w = st::random_permutation(n, rng);
    const Permutation y = st::random_below(w, rng, 3);
    const Permutation x = st::random_below(y, rng, 3);
    ASSERT_TRUE(bruhat_leq(x, y) && bruhat_leq(y, w));
    const DiffTable dx(x, w);
    const DiffTable dy(y, w);
    for (int p = 0; p <= n; ++p) {
      for (int q = 1; q <= n + 1; ++q) EXPECT_GE(dx(p, q), dy(p, q));
    }
  }
}

TEST(Bruhat, ReflectionSetExamples) {
  const Permutation w{2, 4, 5, 3, 1};
  EXPECT_EQ(reflection_set(Permutation{2, 1, 5, 4, 3}, w), (ReflectionSet{{2, 4}, {2, 5}}));
  EXPECT_EQ(reflection_set(Permutation{1, 2, 5, 3, 4}, w), (ReflectionSet{{1, 2}, {2, 4}, {2, 5}, {4, 5}}));
  EXPECT_TRUE(reflection_set(w, w).empty());
  EXPECT_TRUE(reflection_set(Permutation{1, 2}, Permutation{1, 2}).empty());
  EXPECT_THROW(reflection_set(Permutation{2, 1}, Permutation{1, 2}), PreconditionError);
}

TEST(Bruhat, ShadingMatchesDefinition) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [x, w] : comparable_pairs(n)) {
      const ReflectionSet shaded = reflection_set(x, w);
      ASSERT_EQ(shaded, reflection_set_direct(x, w)) << format_one_line(x) << " " << format_one_line(w);
      // Independent check of the definition: x < xt <= w with xt <= w via cover closure.
      const auto up = st::upset_by_covers(st::entries(x));
      for (const auto& t : shaded) {
        const auto xt = st::naive_swap(st::entries(x), t.a, t.b);
        EXPECT_GT(st::naive_length(xt), st::naive_length(x));
        EXPECT_TRUE(bruhat_leq(Permutation(xt), w));
      }
    }
  }
}

TEST(Bruhat, DeodharInequality) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + trial % 9;
    const Permutation w = st::random_permutation(n, rng);
    const Permutation x = st::random_below(w, rng, 1 + trial % 6);
    EXPECT_GE(static_cast<int>(reflection_set(x, w).size()), length(w) - length(x));
  }
}

TEST(Bruhat, Delta) {
  const Permutation w{2, 4, 5, 3, 1};
  EXPECT_TRUE(delta(w, w).empty());
  EXPECT_EQ(delta(Permutation{2, 1, 5, 4, 3}, w), (IndexSet{2, 4, 5}));
  for (const auto& [x, v] : comparable_pairs(5)) {
    const IndexSet d = delta(x, v);
    for (int i = 1; i <= 5; ++i) {
      if (x(i) != v(i)) {
        EXPECT_TRUE(d.contains(i)) << format_one_line(x) << format_one_line(v);
      }
    }
  }
}

// p lies outside Delta(x,w) exactly when d vanishes just above and just right of pt_x(p).
TEST(Bruhat, DeltaByLocalDifference) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [x, w] : comparable_pairs(n)) {
      const DiffTable d(x, w);
      const IndexSet del = delta(x, w);
      for (int p = 1; p <= n; ++p) {
        const bool quiet = d(p - 1, x(p)) == 0 && d(p, x(p) + 1) == 0;
        ASSERT_EQ(quiet, !del.contains(p)) << format_one_line(x) << format_one_line(w) << " p=" << p;
      }
    }
  }
}

TEST(Bruhat, TildeRestrict) {
  const auto [xt, wt] = tilde_restrict(Permutation{1, 3, 2, 4}, Permutation{3, 4, 1, 2});
  EXPECT_EQ(xt, (Permutation{1, 3, 2, 4}));
  EXPECT_EQ(wt, (Permutation{3, 4, 1, 2}));
  // x_{2,2} < w_{2,2} padded with fixed points.
  const auto [xp, wp] = tilde_restrict(Permutation{1, 3, 2, 5, 4, 6}, Permutation{1, 5, 3, 4, 2, 6});
  EXPECT_EQ(xp, (Permutation{2, 1, 4, 3}));
  EXPECT_EQ(wp, (Permutation{4, 2, 3, 1}));
  EXPECT_THROW(tilde_restrict(Permutation{2, 1}, Permutation{2, 1}), PreconditionError);
  for (const auto& [x, w] : comparable_pairs(5)) {
    if (x == w) continue;
    const auto [a, b] = tilde_restrict(x, w);
    EXPECT_EQ(length(w) - length(x), length(b) - length(a));
  }
}

TEST(Bruhat, PhiExamples) {
  const Permutation w{2, 4, 5, 3, 1};
  EXPECT_EQ(phi_map(Permutation{2, 1, 5, 4, 3}, w, {1, 2}, {2, 4}), (Transposition{2, 4}));
  EXPECT_EQ(phi_map(Permutation{1, 2, 5, 4, 3}, w, {4, 5}, {2, 4}), (Transposition{2, 5}));
  EXPECT_EQ(phi_map(Permutation{1, 2, 5, 4, 3}, w, {4, 5}, {1, 2}), (Transposition{1, 2}));
  EXPECT_THROW(phi_map(Permutation{1, 2, 5, 4, 3}, w, {1, 2}, {2, 4}), PreconditionError);
  EXPECT_THROW(phi_map(Permutation{2, 1, 5, 4, 3}, w, {1, 2}, {1, 2}), PreconditionError);
  EXPECT_THROW(phi_map(Permutation{2, 1, 5, 4, 3}, w, {1, 2}, {1, 3}), PreconditionError);
}

// Injectivity into R(yt,w) \ {t} and Delta monotonicity, exhaustive on S_5.
TEST(Bruhat, PhiInjectiveAndDeltaMonotone) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [y, w] : comparable_pairs(n)) {
      const ReflectionSet r_y = reflection_set(y, w);
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          if (y(a) < y(b)) continue;
          const Transposition t{a, b};
          const Permutation yt = apply_transposition_right(y, t);
          const ReflectionSet r_yt = reflection_set(yt, w);
          std::set<Transposition> image;
          for (const auto& tp : r_y) {
            const Transposition s = phi_map(y, r_y, t, tp);
            EXPECT_NE(s, t);
            EXPECT_TRUE(contains(r_yt, s));
            image.insert(s);
          }
          ASSERT_EQ(image.size(), r_y.size()) << format_one_line(y) << format_one_line(w);
          EXPECT_TRUE(subset(delta_of(r_y), delta_of(r_yt)));
        }
      }
    }
  }
}

TEST(Bruhat, PhiInjectiveRandomLarger) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6 + trial % 4;
    const Permutation w = st::random_permutation(n, rng);
    const Permutation y = st::random_below(w, rng, 2);
    const ReflectionSet r_y = reflection_set(y, w);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        if (y(a) < y(b)) continue;
        const Transposition t{a, b};
        const ReflectionSet r_yt = reflection_set(apply_transposition_right(y, t), w);
        std::set<Transposition> image;
        for (const auto& tp : r_y) {
          const Transposition s = phi_map(y, r_y, t, tp);
          EXPECT_TRUE(s != t && contains(r_yt, s));
          image.insert(s);
        }
        EXPECT_EQ(image.size(), r_y.size());
      }
    }
  }
}

// R(y s_i, w) = phi_{s_i}(R(y,w)) + {s_i} whenever y s_i < y <= w and w s_i < w.
TEST(Bruhat, PhiSurjectiveForSimpleDescents) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [y, w] : comparable_pairs(n)) {
      const ReflectionSet r_y = reflection_set(y, w);
      for (int i = 1; i < n; ++i) {
        if (!(y(i) > y(i + 1) && w(i) > w(i + 1))) continue;
        const Transposition s = Transposition::simple(i);
        std::set<Transposition> image{s};
        for (const auto& tp : r_y) image.insert(phi_map(y, r_y, s, tp));
        const ReflectionSet r_ys = reflection_set(apply_transposition_right(y, s), w);
        ASSERT_EQ(image, std::set<Transposition>(r_ys.begin(), r_ys.end()))
            << format_one_line(y) << format_one_line(w) << " s" << i;
      }
    }
  }
}

TEST(Bruhat, Reciprocity) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& [x, w] : comparable_pairs(n)) {
      const ReflectionSet r_x = reflection_set(x, w);
      std::vector<Transposition> up;
      for (const auto& t : r_x) {
        if (length(apply_transposition_right(x, t)) == length(x) + 1) up.push_back(t);
      }
      auto image = [&](const Transposition& t) {
        const Permutation y = apply_transposition_right(x, t);
        const ReflectionSet r_y = reflection_set(y, w);
        std::set<Transposition> im;
        for (const auto& tp : r_y) im.insert(phi_map(y, r_y, t, tp));
        return im;
      };
      std::map<Transposition, std::set<Transposition>> images;
      for (const auto& t : up) images[t] = image(t);
      for (const auto& t : up) {
        for (const auto& tp : up) {
          if (t == tp) continue;
          EXPECT_EQ(images[t].contains(tp), images[tp].contains(t))
              << format_one_line(x) << format_one_line(w) << format_transposition(t) << format_transposition(tp);
        }
      }
    }
  }
}

TEST(Bruhat, ExtraSet) {
  EXPECT_FALSE(extra_set(identity(3), Permutation{3, 2, 1}, {1, 3}).empty());
  EXPECT_TRUE(extra_set(identity(4), Permutation{4, 2, 3, 1}, {1, 2}).empty());
  const Permutation x{2, 1, 4, 3};
  const Permutation w{4, 2, 3, 1};
  for (const auto& t : reflection_set(x, w)) EXPECT_FALSE(extra_set(x, w, t).empty());
  EXPECT_THROW(extra_set(x, w, {1, 2}), PreconditionError);
}

TEST(Bruhat, ExtraSetSizeFromCounts) {
  for (const auto& [x, w] : comparable_pairs(5)) {
    const ReflectionSet r = reflection_set(x, w);
    for (const auto& t : r) {
      const auto e = extra_set(x, w, t);
      const auto r_xt = reflection_set(apply_transposition_right(x, t), w);
      EXPECT_EQ(e.size() + 1 + r_xt.size(), r.size());
    }
  }
}

TEST(Bruhat, RegionSignedCount) {
  const Permutation x{2, 1, 5, 4, 3};
  const Permutation w{2, 4, 5, 3, 1};
  EXPECT_EQ(region_signed_count(x, w, {1, 5, 1, 5}), 0);
  EXPECT_EQ(region_signed_count(w, w, {2, 3, 1, 4}), 0);
  EXPECT_THROW(region_signed_count(x, w, {0, 2, 1, 1}), PreconditionError);
  EXPECT_THROW(region_signed_count(x, w, {3, 2, 1, 1}), PreconditionError);
}

// Theta over a rectangle equals the alternating sum of d at its four corners.
TEST(Bruhat, RegionSignedCountFromCorners) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 8;
    const Permutation w = st::random_permutation(n, rng);
    const Permutation x = st::random_below(w, rng, 4);
    const DiffTable d(x, w);
    std::uniform_int_distribution<int> pick(1, n);
    int a = pick(rng), b = pick(rng), c = pick(rng), e = pick(rng);
    if (a > b) std::swap(a, b);
    if (c > e) std::swap(c, e);
    const int corners = d(b, c) - d(a - 1, c) - d(b, e + 1) + d(a - 1, e + 1);
    EXPECT_EQ(region_signed_count(x, w, {a, b, c, e}), corners);
  }
}
