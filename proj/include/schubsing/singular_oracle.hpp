#pragma once

#include <optional>
#include <vector>

#include "schubsing/maxsing.hpp"
#include "schubsing/permutation.hpp"

// Exponential-scale ground truth for the singular locus.  Everything here is meant
// for small n and is used to cross-check the polynomial-time enumeration.
namespace schubsing {

inline constexpr int kDefaultOracleBound = 8;

/// Tangent-space smoothness of X_w at e_x.
struct SmoothnessReport {
  Permutation x;
  Permutation w;
  int r_count;  // #R(x,w)
  int codim;    // l(w) - l(x)
  bool smooth;  // r_count == codim
};

/// Throws PreconditionError unless x <= w.
SmoothnessReport is_smooth_point(const Permutation& x, const Permutation& w);

/// X_w is smooth iff w avoids 4231 and 3412.
bool is_smooth_variety(const Permutation& w);

/// The Bruhat interval [e, w], found by walking down lower covers from w.
std::vector<Permutation> lower_interval(const Permutation& w);

/// Bruhat-maximal singular points, found by testing every x <= w.
/// Throws CapabilityError when w.size() exceeds `bound`.
std::vector<Permutation> maxsing_bruteforce(const Permutation& w, int bound = kDefaultOracleBound);

/// #R(x,w) > l(w) - l(x) and every t in R(x,w) leads to a smooth point xt.
bool is_msp(const Permutation& x, const Permutation& w);

/// Condition (1): every t in R(x,w) raises length by exactly one; condition (2): the
/// restriction to Delta(x,w) is one of the canonical family pairs.
bool is_msp_by_family(const Permutation& x, const Permutation& w);
std::optional<FamilyParams> msp_family(const Permutation& x, const Permutation& w);

/// True when x belongs to the set E_w built from 3412/1324 and 4231/2143 pattern pairs
/// with equal value sets and the sandwich  w_ <= x <= x^ <= w.
bool in_ew(const Permutation& x, const Permutation& w);

/// Bruhat-maximal elements of E_w.  Throws CapabilityError when w.size() exceeds `bound`.
std::vector<Permutation> ew_maximal(const Permutation& w, int bound = kDefaultOracleBound);

/// Bruhat-maximal elements of an arbitrary set (pairwise comparison).
std::vector<Permutation> bruhat_maximal(std::vector<Permutation> elements);

}  // namespace schubsing
