#include "schubsing/kl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "schubsing/bruhat.hpp"
#include "schubsing/error.hpp"
#include "schubsing/singular_oracle.hpp"

namespace schubsing {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
  return r;
}

}  // namespace

KLPolynomial::KLPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

KLPolynomial::KLPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

KLPolynomial KLPolynomial::geometric(int d) {
  if (d < 0) return zero();
  return KLPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(d + 1), 1));
}

KLPolynomial KLPolynomial::monomial(int power, std::int64_t coeff) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  std::vector<std::int64_t> c(static_cast<std::size_t>(power + 1), 0);
  c.back() = coeff;
  return KLPolynomial(std::move(c));
}

std::int64_t KLPolynomial::coeff(int power) const noexcept {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

void KLPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

KLPolynomial KLPolynomial::shifted(int power) const {
  if (power < 0) throw std::invalid_argument("shifted: negative power");
  if (is_zero()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(power), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return KLPolynomial(std::move(c));
}

KLPolynomial& KLPolynomial::operator+=(const KLPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

KLPolynomial& KLPolynomial::operator-=(const KLPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

KLPolynomial KLPolynomial::scaled(std::int64_t factor) const {
  std::vector<std::int64_t> c = coeffs_;
  for (auto& v : c) v = checked_mul(v, factor);
  return KLPolynomial(std::move(c));
}

std::string KLPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || i == 0;
    if (show_coeff) out += std::to_string(mag);
    if (i >= 1) {
      if (show_coeff) out += "*";
      out += "q";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

struct PairKey {
  std::uint64_t x;
  std::uint64_t w;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.x * 0x9e3779b97f4a7c15ULL ^ k.w);
  }
};

class KlCalculator {
 public:
  KLPolynomial p(const Permutation& x, const Permutation& w) {
    if (!bruhat_leq(x, w)) return KLPolynomial::zero();
    const int lw = length(w);
    const int lx = length(x);
    if (lw - lx <= 2) return KLPolynomial::one();
    const PairKey key{x.pack(), w.pack()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int n = w.size();
    int s = n - 1;
    while (w(s) < w(s + 1)) --s;  // largest descent; exists because w != e here
    const Transposition ts = Transposition::simple(s);
    const Permutation ws = apply_transposition_right(w, ts);
    const Permutation xs = apply_transposition_right(x, ts);
    const int c = x(s) > x(s + 1) ? 1 : 0;

    KLPolynomial result = p(x, ws).shifted(c) + p(xs, ws).shifted(1 - c);
    const int lws = lw - 1;
    for (const auto& z : interval(ws)) {
      if (z == ws || z(s) < z(s + 1)) continue;
      const int lz = length(z);
      if ((lws - lz) % 2 == 0) continue;
      if (!bruhat_leq(x, z)) continue;
      const std::int64_t mu = p(z, ws).coeff((lws - lz - 1) / 2);
      if (mu == 0) continue;
      result -= p(x, z).shifted((lw - lz) / 2).scaled(mu);
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const std::vector<Permutation>& interval(const Permutation& v) {
    auto it = intervals_.find(v.pack());
    if (it == intervals_.end()) it = intervals_.emplace(v.pack(), lower_interval(v)).first;
    return it->second;
  }

  std::unordered_map<PairKey, KLPolynomial, PairKeyHash> memo_;
  std::unordered_map<std::uint64_t, std::vector<Permutation>> intervals_;
};

void require_kl_bound(const Permutation& x, const Permutation& w, int bound, const char* what) {
  if (x.size() != w.size()) throw PreconditionError(std::string(what) + ": size mismatch");
  if (w.size() > bound || w.size() > 16) {
    throw CapabilityError(std::string(what) + ": n = " + std::to_string(w.size()) +
                          " exceeds the recursion bound " + std::to_string(std::min(bound, 16)));
  }
}

}  // namespace

KLPolynomial kl_recursive(const Permutation& x, const Permutation& w, int bound) {
  require_kl_bound(x, w, bound, "kl_recursive");
  KlCalculator calc;
  return calc.p(x, w);
}

std::int64_t mu_coefficient(const Permutation& z, const Permutation& w, int bound) {
  require_kl_bound(z, w, bound, "mu_coefficient");
  const int gap = length(w) - length(z);
  if (gap < 1 || gap % 2 == 0) return 0;
  return kl_recursive(z, w, bound).coeff((gap - 1) / 2);
}

FamilyParams classify_msp(const Permutation& x, const Permutation& w) {
  if (auto p = msp_family(x, w)) return *p;
  throw PreconditionError("classify_msp: " + format_one_line(x) + " is not a maximal singular point of " +
                          format_one_line(w));
}

KLPolynomial kl_closed_form(const FamilyParams& p) {
  if (!p.valid()) throw PreconditionError("kl_closed_form: invalid family " + to_string(p));
  if (p.variant == FamilyVariant::TwoRuns) return KLPolynomial::geometric(std::min(p.k, p.m) - 1);
  if (p.l == 2) return KLPolynomial{1, 1};
  return KLPolynomial::one() + KLPolynomial::monomial(p.l - 1);
}

KLPolynomial kl_at_msp(const Permutation& x, const Permutation& w) {
  return kl_closed_form(classify_msp(x, w));
}

}  // namespace schubsing
