#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "schubsing/permutation.hpp"

namespace schubsing::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kCapabilityExceeded = 3,
  kPreconditionViolated = 4,
  kSweepMismatch = 5,
};

using nlohmann::json;

json smooth_record(const Permutation& w);
json maxsing_record(const Permutation& w);
json count_record(const Permutation& w);
/// Closed form when (x,w) is a maximal singular pair, the recursion otherwise.
/// Throws CapabilityError if the recursion is needed and n exceeds `kl_bound`.
json kl_record(const Permutation& x, const Permutation& w, int kl_bound);

enum class DiagramStyle { Ascii, Svg };

/// Rows are positions (downward), columns values (rightward).  Throws PreconditionError
/// unless x <= w.
std::string diagram_ascii(const Permutation& x, const Permutation& w, bool annotate);
std::string diagram_svg(const Permutation& x, const Permutation& w, bool annotate);

enum class SweepMode { Maxsing, Kl, Ew, Patterns };

struct SweepResult {
  int n = 0;
  SweepMode mode = SweepMode::Maxsing;
  std::int64_t checked = 0;
  std::optional<std::string> mismatch;  // first disagreement, in enumeration order
};

/// Runs the chosen comparison over all of S_n.  Throws CapabilityError if n exceeds
/// `oracle_bound` (or, for the KL mode, `kl_bound`).
SweepResult sweep(int n, SweepMode mode, int oracle_bound, int kl_bound, int jobs);
json sweep_record(const SweepResult& r);

struct BenchRow {
  int n = 0;
  std::vector<double> seconds;
  double median_seconds = 0.0;
  std::vector<int> components;
};

/// Times maxsing on `trials` uniformly random w of each size.  Deterministic inputs for a
/// fixed seed.
std::vector<BenchRow> bench(const std::vector<int>& sizes, int trials, std::uint64_t seed);
json bench_record(const std::vector<BenchRow>& rows, int trials, std::uint64_t seed);

/// One permutation per line ('#' starts a comment).  With `pairs`, each line holds
/// "x ; w".  Throws ParseError naming the offending line.
std::vector<std::vector<Permutation>> read_corpus(const std::string& path, bool pairs);

/// Applies `f` to each item on up to `jobs` threads; results keep input order.  The
/// first exception (in input order) is rethrown after all workers finish.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& f) {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<std::optional<R>> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i].emplace(f(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t width = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                    std::max<std::size_t>(items.size(), 1));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

/// Entry point of the `schubsing` executable.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schubsing::cli
