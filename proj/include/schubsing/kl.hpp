#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "schubsing/maxsing.hpp"
#include "schubsing/permutation.hpp"

namespace schubsing {

inline constexpr int kDefaultKlBound = 7;

/// Polynomial in q with integer coefficients, index = power of q, trailing zeros trimmed.
/// Arithmetic is overflow-checked and throws std::overflow_error.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<std::int64_t> coeffs);
  KLPolynomial(std::initializer_list<std::int64_t> coeffs);

  static KLPolynomial zero() { return {}; }
  static KLPolynomial one() { return KLPolynomial{1}; }
  /// 1 + q + ... + q^d
  static KLPolynomial geometric(int d);
  static KLPolynomial monomial(int power, std::int64_t coeff = 1);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// 0 beyond the degree or for negative powers.
  std::int64_t coeff(int power) const noexcept;

  KLPolynomial shifted(int power) const;  // multiply by q^power, power >= 0
  KLPolynomial& operator+=(const KLPolynomial& other);
  KLPolynomial& operator-=(const KLPolynomial& other);
  KLPolynomial scaled(std::int64_t factor) const;

  friend KLPolynomial operator+(KLPolynomial a, const KLPolynomial& b) { return a += b; }
  friend KLPolynomial operator-(KLPolynomial a, const KLPolynomial& b) { return a -= b; }
  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;

  /// "1 + q + q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// P_{x,w} by the standard recursion with pivot at the largest descent of w and a memo
/// private to this call.  Throws CapabilityError when n exceeds `bound` (or 16).
KLPolynomial kl_recursive(const Permutation& x, const Permutation& w, int bound = kDefaultKlBound);

/// Coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w}; 0 if that exponent is not a
/// nonnegative integer or z is not below w.
std::int64_t mu_coefficient(const Permutation& z, const Permutation& w, int bound = kDefaultKlBound);

/// Family parameters of a maximal singular point.  Throws PreconditionError otherwise.
FamilyParams classify_msp(const Permutation& x, const Permutation& w);

/// TwoRuns(k,m): 1 + q + ... + q^{min(k-1,m-1)};  ThreeRuns(k,2,m): 1 + q;
/// ThreeRuns(1,l,1), l >= 3: 1 + q^{l-1}.  Throws PreconditionError for invalid params.
KLPolynomial kl_closed_form(const FamilyParams& p);

/// kl_closed_form(classify_msp(x, w)).
KLPolynomial kl_at_msp(const Permutation& x, const Permutation& w);

}  // namespace schubsing
