#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubsing/permutation.hpp"

namespace schubsing {

// ---------------------------------------------------------------------------
// Canonical pairs x_{k,m} < w_{k,m} and x_{k,l,m} < w_{k,l,m}.
// ---------------------------------------------------------------------------

enum class FamilyVariant { TwoRuns, ThreeRuns };

struct FamilyParams {
  FamilyVariant variant;
  int k;
  int l;  // 0 for TwoRuns
  int m;

  static FamilyParams two_runs(int k, int m) { return {FamilyVariant::TwoRuns, k, 0, m}; }
  static FamilyParams three_runs(int k, int l, int m) { return {FamilyVariant::ThreeRuns, k, l, m}; }

  /// TwoRuns: k,m >= 2.  ThreeRuns: (l == 2, k,m >= 1) or (k == m == 1, l >= 2).
  bool valid() const noexcept;
  int size() const noexcept { return k + l + m; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

std::string to_string(const FamilyParams& p);

/// x_{k,m} = [k..1, k+m..k+1],  w_{k,m} = [k+m, k..2, k+m-1..k+1, 1];
/// x_{k,l,m} = [k..1, k+l..k+1, k+l+m..k+l+1],
/// w_{k,l,m} = [k+l, k..2, k+l+m, k+l-1..k+2, 1, k+l+m-1..k+l+1, k+1].
/// Throws PreconditionError for invalid parameters.
std::pair<Permutation, Permutation> canonical_family(const FamilyParams& p);

/// Parameters of the canonical pair equal to (x, w), if any.
std::optional<FamilyParams> match_family(const Permutation& x, const Permutation& w);

// ---------------------------------------------------------------------------
// Singular-locus components.
// ---------------------------------------------------------------------------

enum class CaseTag { C4231, C3412, C45312 };

std::string to_string(CaseTag tag);

/// One irreducible component X_x of the singular locus of X_w, with the witnessing
/// decreasing position sequences.  x = w o (alpha_1,...,alpha_m,beta_k,...,beta_1).
struct Component {
  CaseTag tag;
  std::vector<int> alphas;
  std::vector<int> betas;
  Permutation x;
};

/// The cycle (alpha_1,...,alpha_m,beta_k,...,beta_1).
std::vector<int> component_cycle(const std::vector<int>& alphas, const std::vector<int>& betas);

/// Checks every condition for (w, c) to index a component: disjoint decreasing sequences,
/// the case's interleaving and value chain, x equal to w acted on by the cycle, x <= w,
/// and no other 1 of mat(w) inside the region where d_{x,w} >= 1.  In the 45312 case the
/// 1's in region A (rows strictly between alpha_1 and beta_2, values strictly between
/// w(alpha_2) and w(beta_1)) are exempt but must be decreasing.
/// Throws PreconditionError for a structurally malformed component (positions out of
/// range, non-increasing sequences, wrong x size).
bool verify_component(const Permutation& w, const Component& c);

/// All components, deduplicated by x and sorted by the one-line notation of x.
std::vector<Component> enumerate_components(const Permutation& w);

/// maxsing(X_w): the x of every component, sorted.
std::vector<Permutation> maxsing(const Permutation& w);

/// Number of 4231/3412 occurrences left after discarding the sub-occurrences designated
/// by the table of longer patterns.
int useful_pattern_count(const Permutation& w);

/// The surviving occurrences themselves, ascending by positions.
std::vector<IndexSet> useful_patterns(const Permutation& w);

}  // namespace schubsing
