#include "schubsing/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "schubsing/error.hpp"

namespace schubsing {

namespace {

void require_bijection(const std::vector<int>& entries) {
  if (entries.empty()) {
    throw ParseError(ParseError::Kind::Empty, "permutation must have at least one entry");
  }
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(entries.size() + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw ParseError(ParseError::Kind::NonBijection,
                       "entries do not form a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void require_same_size(const Permutation& u, const Permutation& v, const char* op) {
  if (u.size() != v.size()) {
    throw PreconditionError(std::string(op) + ": size mismatch (" + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()) + ")");
  }
}

void require_within(const IndexSet& z, int n) {
  if (!z.empty() && z[z.size() - 1] > n) {
    throw PreconditionError("index set exceeds permutation size " + std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  require_bijection(entries_);
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::vector<int>(one_line)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw PreconditionError("identity: n must be positive");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), Unchecked{});
}

int Permutation::at(int i) const {
  if (i < 1 || i > size()) {
    throw PreconditionError("position " + std::to_string(i) + " out of range 1.." +
                            std::to_string(size()));
  }
  return (*this)(i);
}

std::uint64_t Permutation::pack() const {
  if (size() > 16) throw CapabilityError("pack: permutations above n = 16 cannot be packed");
  std::uint64_t key = 0;
  for (int v : entries_) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

Permutation make_unchecked(std::vector<int> one_line) {
  return Permutation(std::move(one_line), Permutation::Unchecked{});
}

Transposition Transposition::of(int i, int j) {
  if (i == j || i < 1 || j < 1) {
    throw PreconditionError("transposition needs two distinct positive positions");
  }
  return i < j ? Transposition{i, j} : Transposition{j, i};
}

IndexSet::IndexSet(std::vector<int> positions) : positions_(std::move(positions)) {
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 1 || (i > 0 && positions_[i] <= positions_[i - 1])) {
      throw PreconditionError("index set must be strictly increasing positive positions");
    }
  }
}

IndexSet::IndexSet(std::initializer_list<int> positions) : IndexSet(std::vector<int>(positions)) {}

IndexSet IndexSet::full(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return IndexSet(std::move(p));
}

bool IndexSet::contains(int p) const {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

Permutation identity(int n) { return Permutation::identity(n); }

Permutation compose(const Permutation& u, const Permutation& v) {
  require_same_size(u, v, "compose");
  std::vector<int> out(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
  return make_unchecked(std::move(out));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
  return make_unchecked(std::move(out));
}

int length(const Permutation& w) {
  // Fenwick tree over values; O(n log n).
  const int n = w.size();
  std::vector<int> tree(static_cast<std::size_t>(n + 1), 0);
  int inversions = 0;
  for (int i = n; i >= 1; --i) {
    for (int v = w(i) - 1; v > 0; v -= v & -v) inversions += tree[static_cast<std::size_t>(v)];
    for (int v = w(i); v <= n; v += v & -v) ++tree[static_cast<std::size_t>(v)];
  }
  return inversions;
}

Permutation apply_transposition_right(const Permutation& w, const Transposition& t) {
  if (t.a < 1 || t.b > w.size() || t.a >= t.b) {
    throw PreconditionError("transposition " + format_transposition(t) + " out of range");
  }
  std::vector<int> out(w.one_line().begin(), w.one_line().end());
  std::swap(out[static_cast<std::size_t>(t.a - 1)], out[static_cast<std::size_t>(t.b - 1)]);
  return make_unchecked(std::move(out));
}

Permutation apply_cycle(const Permutation& w, std::span<const int> cycle) {
  const int n = w.size();
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int c : cycle) {
    if (c < 1 || c > n) throw PreconditionError("cycle position out of range");
    if (used[static_cast<std::size_t>(c)]) throw PreconditionError("cycle repeats a position");
    used[static_cast<std::size_t>(c)] = true;
  }
  std::vector<int> out(w.one_line().begin(), w.one_line().end());
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const int to = cycle[(j + 1) % cycle.size()];
    out[static_cast<std::size_t>(to - 1)] = w(cycle[j]);
  }
  return make_unchecked(std::move(out));
}

Permutation flatten_values(std::span<const int> values) {
  if (values.empty()) throw PreconditionError("flatten: empty index set");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r + 1);
  return make_unchecked(std::move(out));
}

Permutation flatten(const Permutation& x, const IndexSet& z) {
  require_within(z, x.size());
  std::vector<int> values;
  values.reserve(z.size());
  for (int p : z) values.push_back(x(p));
  return flatten_values(values);
}

Permutation unflatten(const Permutation& x, const IndexSet& z, const Permutation& u) {
  require_within(z, x.size());
  if (static_cast<std::size_t>(u.size()) != z.size()) {
    throw PreconditionError("unflatten: |Z| does not match the size of u");
  }
  std::vector<int> values;
  values.reserve(z.size());
  for (int p : z) values.push_back(x(p));
  std::sort(values.begin(), values.end());
  std::vector<int> out(x.one_line().begin(), x.one_line().end());
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[static_cast<std::size_t>(z[i] - 1)] = values[static_cast<std::size_t>(u(static_cast<int>(i) + 1) - 1)];
  }
  return make_unchecked(std::move(out));
}

bool is_occurrence(const Permutation& w, std::span<const int> positions, const Permutation& p) {
  if (positions.size() != static_cast<std::size_t>(p.size())) return false;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      const bool w_less = w(positions[i]) < w(positions[j]);
      const bool p_less = p(static_cast<int>(i) + 1) < p(static_cast<int>(j) + 1);
      if (w_less != p_less) return false;
    }
  }
  return true;
}

namespace {

// Depth-first extension of partial occurrences; a prefix is kept only while it is
// order-isomorphic to the corresponding prefix of the pattern.
template <typename Visit>
bool scan_occurrences(const Permutation& w, const Permutation& p, Visit&& visit) {
  const int n = w.size();
  const int k = p.size();
  if (k > n) return true;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  auto extend = [&](auto&& self, int from) -> bool {
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) return visit(std::span<const int>(chosen));
    const int pv = p(depth + 1);
    for (int pos = from; pos <= n - (k - depth - 1); ++pos) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        ok = (w(chosen[static_cast<std::size_t>(j)]) < w(pos)) == (p(j + 1) < pv);
      }
      if (!ok) continue;
      chosen.push_back(pos);
      const bool keep_going = self(self, pos + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return extend(extend, 1);
}

}  // namespace

std::vector<IndexSet> pattern_occurrences(const Permutation& w, const Permutation& p) {
  std::vector<IndexSet> out;
  scan_occurrences(w, p, [&](std::span<const int> pos) {
    out.emplace_back(std::vector<int>(pos.begin(), pos.end()));
    return true;
  });
  return out;
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  bool found = false;
  scan_occurrences(w, p, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

Permutation parse_one_line(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  if (begin < end && text[begin] == '[') {
    if (text[end - 1] != ']') throw ParseError(ParseError::Kind::BadToken, "unbalanced '['");
    ++begin;
    --end;
  } else if (begin < end && text[end - 1] == ']') {
    throw ParseError(ParseError::Kind::BadToken, "unbalanced ']'");
  }

  std::vector<int> entries;
  std::size_t i = begin;
  bool expect_value = true;
  while (i < end) {
    const char c = text[i];
    if (is_space(c)) {
      ++i;
    } else if (c == ',') {
      if (expect_value) throw ParseError(ParseError::Kind::BadToken, "unexpected ','");
      expect_value = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, value);
      if (ec != std::errc{}) throw ParseError(ParseError::Kind::BadToken, "integer out of range");
      entries.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
      expect_value = false;
    } else {
      throw ParseError(ParseError::Kind::BadToken,
                       std::string("unexpected character '") + c + "' in one-line notation");
    }
  }
  if (entries.empty()) throw ParseError(ParseError::Kind::Empty, "empty permutation");
  if (expect_value) throw ParseError(ParseError::Kind::BadToken, "trailing ','");
  return Permutation(std::move(entries));
}

std::string format_one_line(const Permutation& w) {
  std::string out = "[";
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w(i));
  }
  out += ']';
  return out;
}

std::string format_transposition(const Transposition& t) {
  return "t_{" + std::to_string(t.a) + "," + std::to_string(t.b) + "}";
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    out.push_back(make_unchecked(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace schubsing

std::size_t std::hash<schubsing::Permutation>::operator()(
    const schubsing::Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.one_line()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}
