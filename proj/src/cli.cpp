#include "schubsing/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "schubsing/bruhat.hpp"
#include "schubsing/error.hpp"
#include "schubsing/kl.hpp"
#include "schubsing/maxsing.hpp"
#include "schubsing/singular_oracle.hpp"

namespace schubsing::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

json one_line_json(const Permutation& w) {
  return json(std::vector<int>(w.one_line().begin(), w.one_line().end()));
}

const char* to_string(SweepMode m) {
  switch (m) {
    case SweepMode::Maxsing: return "maxsing";
    case SweepMode::Kl: return "kl";
    case SweepMode::Ew: return "ew";
    case SweepMode::Patterns: return "patterns";
  }
  return "?";
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string describe(const std::vector<Permutation>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + format_one_line(xs[i]);
  return s + "}";
}

}  // namespace

json smooth_record(const Permutation& w) {
  json witnesses = json::array();
  std::size_t total = 0;
  for (const auto& [name, pattern] : {std::pair{"3412", Permutation{3, 4, 1, 2}},
                                      std::pair{"4231", Permutation{4, 2, 3, 1}}}) {
    for (const auto& occ : pattern_occurrences(w, pattern)) {
      if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back({{"pattern", name}, {"positions", occ.positions()}});
      }
      ++total;
    }
  }
  const SmoothnessReport at_identity = is_smooth_point(Permutation::identity(w.size()), w);
  return {
      {"w", one_line_json(w)},
      {"smooth", total == 0},
      {"tangent_smooth", at_identity.smooth},
      {"witness_total", total},
      {"witnesses", witnesses},
  };
}

json maxsing_record(const Permutation& w) {
  json comps = json::array();
  for (const auto& c : enumerate_components(w)) {
    comps.push_back({
        {"case", to_string(c.tag)},
        {"alphas", c.alphas},
        {"betas", c.betas},
        {"x", one_line_json(c.x)},
    });
  }
  const std::size_t count = comps.size();
  return {{"w", one_line_json(w)}, {"components", std::move(comps)}, {"count", count}};
}

json count_record(const Permutation& w) {
  json patterns = json::array();
  for (const auto& occ : useful_patterns(w)) patterns.push_back(occ.positions());
  const std::size_t useful = patterns.size();
  return {
      {"w", one_line_json(w)},
      {"useful_patterns", useful},
      {"components", maxsing(w).size()},
      {"patterns", std::move(patterns)},
  };
}

json kl_record(const Permutation& x, const Permutation& w, int kl_bound) {
  if (x.size() != w.size()) throw PreconditionError("kl: x and w have different sizes");
  KLPolynomial p;
  std::string method;
  json family = nullptr;
  if (!bruhat_leq(x, w)) {
    p = KLPolynomial::zero();
    method = "recursion";
  } else if (auto f = msp_family(x, w)) {
    p = kl_closed_form(*f);
    method = "closed_form";
    family = to_string(*f);
  } else if (length(w) - length(x) <= 2) {
    p = KLPolynomial::one();
    method = "recursion";
  } else {
    p = kl_recursive(x, w, kl_bound);
    method = "recursion";
  }
  return {
      {"x", one_line_json(x)},
      {"w", one_line_json(w)},
      {"poly", p.coeffs()},
      {"text", p.to_string()},
      {"method", method},
      {"family", family},
  };
}

namespace {

std::optional<std::string> sweep_one(const Permutation& w, SweepMode mode, int oracle_bound,
                                     int kl_bound) {
  const std::string tag = format_one_line(w) + ": ";
  switch (mode) {
    case SweepMode::Maxsing: {
      const auto fast = maxsing(w);
      const auto brute = maxsing_bruteforce(w, oracle_bound);
      if (fast != brute) return tag + "maxsing " + describe(fast) + " vs bruteforce " + describe(brute);
      return std::nullopt;
    }
    case SweepMode::Ew: {
      const auto brute = maxsing_bruteforce(w, oracle_bound);
      const auto ew = ew_maximal(w, oracle_bound);
      if (ew != brute) return tag + "ew " + describe(ew) + " vs bruteforce " + describe(brute);
      return std::nullopt;
    }
    case SweepMode::Patterns: {
      const int useful = useful_pattern_count(w);
      const auto comps = maxsing(w);
      if (static_cast<std::size_t>(useful) != comps.size()) {
        return tag + "useful patterns " + std::to_string(useful) + " vs components " +
               std::to_string(comps.size());
      }
      return std::nullopt;
    }
    case SweepMode::Kl: {
      for (const auto& x : maxsing_bruteforce(w, oracle_bound)) {
        const KLPolynomial rec = kl_recursive(x, w, kl_bound);
        const KLPolynomial closed = kl_at_msp(x, w);
        if (rec != closed) {
          return tag + "x=" + format_one_line(x) + " recursion " + rec.to_string() + " vs closed form " +
                 closed.to_string();
        }
      }
      for (const auto& x : lower_interval(w)) {
        const bool one = kl_recursive(x, w, kl_bound) == KLPolynomial::one();
        if (one != is_smooth_point(x, w).smooth) {
          return tag + "x=" + format_one_line(x) + " P=1 is " + (one ? "true" : "false") +
                 " but smoothness disagrees";
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

SweepResult sweep(int n, SweepMode mode, int oracle_bound, int kl_bound, int jobs) {
  if (n < 1) throw PreconditionError("sweep: n must be positive");
  if (n > oracle_bound || n > 16) {
    throw CapabilityError("sweep: n = " + std::to_string(n) + " exceeds the oracle bound " +
                          std::to_string(oracle_bound));
  }
  if (mode == SweepMode::Kl && n > kl_bound) {
    throw CapabilityError("sweep: n = " + std::to_string(n) + " exceeds the KL recursion bound " +
                          std::to_string(kl_bound));
  }
  const auto perms = all_permutations(n);
  const auto outcomes = parallel_map(perms, jobs, [&](const Permutation& w) {
    return sweep_one(w, mode, oracle_bound, kl_bound);
  });
  SweepResult r{n, mode, static_cast<std::int64_t>(perms.size()), std::nullopt};
  for (const auto& o : outcomes) {
    if (o) {
      r.mismatch = o;
      break;
    }
  }
  return r;
}

json sweep_record(const SweepResult& r) {
  return {
      {"n", r.n},
      {"mode", to_string(r.mode)},
      {"checked", r.checked},
      {"agree", !r.mismatch.has_value()},
      {"mismatch", r.mismatch ? json(*r.mismatch) : json(nullptr)},
  };
}

std::vector<BenchRow> bench(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("bench: trials must be positive");
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    if (n < 1) throw PreconditionError("bench: sizes must be positive");
    BenchRow row;
    row.n = n;
    for (int t = 0; t < trials; ++t) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(v.begin(), v.end(), rng);
      const Permutation w(std::move(v));
      const auto start = std::chrono::steady_clock::now();
      const auto comps = maxsing(w);
      const auto stop = std::chrono::steady_clock::now();
      row.seconds.push_back(std::chrono::duration<double>(stop - start).count());
      row.components.push_back(static_cast<int>(comps.size()));
    }
    std::vector<double> sorted = row.seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    row.median_seconds = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json bench_record(const std::vector<BenchRow>& rows, int trials, std::uint64_t seed) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n}, {"median_seconds", r.median_seconds}, {"seconds", r.seconds},
                   {"components", r.components}});
  }
  return {{"seed", seed}, {"trials", trials}, {"results", std::move(out)}};
}

std::vector<std::vector<Permutation>> read_corpus(const std::string& path, bool pairs) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::Empty, "cannot open corpus file " + path);
  std::vector<std::vector<Permutation>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields;
    if (pairs) {
      const auto semi = line.find(';');
      if (semi == std::string::npos || line.find(';', semi + 1) != std::string::npos) {
        throw ParseError(ParseError::Kind::BadToken,
                         path + ":" + std::to_string(lineno) + ": expected \"x ; w\"");
      }
      fields = {line.substr(0, semi), line.substr(semi + 1)};
    } else {
      fields = {line};
    }
    std::vector<Permutation> rec;
    for (const auto& f : fields) {
      try {
        rec.push_back(parse_one_line(f));
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

struct Globals {
  bool json_out = false;
  int oracle_bound = kDefaultOracleBound;
  int kl_bound = kDefaultKlBound;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string corpus;
  std::string svg_path;
};

std::vector<std::vector<Permutation>> gather(const Globals& g, const std::vector<std::string>& args,
                                             bool pairs) {
  std::vector<std::vector<Permutation>> records;
  if (!g.corpus.empty()) records = read_corpus(g.corpus, pairs);
  if (pairs) {
    if (!args.empty()) {
      if (args.size() != 2) throw ParseError(ParseError::Kind::BadToken, "expected two permutations: x w");
      records.push_back({parse_one_line(args[0]), parse_one_line(args[1])});
    }
  } else {
    for (const auto& a : args) records.push_back({parse_one_line(a)});
  }
  if (records.empty()) throw ParseError(ParseError::Kind::Empty, "no input permutations");
  return records;
}

void emit(std::ostream& out, const Globals& g, const json& record, const std::string& text) {
  if (g.json_out) {
    out << record.dump() << '\n';
  } else {
    out << text;
  }
}

std::string smooth_text(const json& r) {
  std::ostringstream s;
  s << format_one_line(Permutation(r["w"].get<std::vector<int>>()));
  if (r["smooth"].get<bool>()) {
    s << " smooth\n";
  } else {
    s << " singular";
    for (const auto& wit : r["witnesses"]) {
      s << "  " << wit["pattern"].get<std::string>() << "@{"
        << join_ints(wit["positions"].get<std::vector<int>>()) << "}";
    }
    const auto total = r["witness_total"].get<std::size_t>();
    if (total > r["witnesses"].size()) s << "  (" << total << " occurrences)";
    s << '\n';
  }
  return s.str();
}

std::string maxsing_text(const json& r) {
  std::ostringstream s;
  s << format_one_line(Permutation(r["w"].get<std::vector<int>>())) << ": " << r["count"].get<std::size_t>()
    << " component" << (r["count"].get<std::size_t>() == 1 ? "" : "s") << '\n';
  for (const auto& c : r["components"]) {
    s << "  " << c["case"].get<std::string>() << "  alphas=" << join_ints(c["alphas"].get<std::vector<int>>())
      << "  betas=" << join_ints(c["betas"].get<std::vector<int>>())
      << "  x=" << format_one_line(Permutation(c["x"].get<std::vector<int>>())) << '\n';
  }
  return s.str();
}

std::string count_text(const json& r) {
  std::ostringstream s;
  s << format_one_line(Permutation(r["w"].get<std::vector<int>>()))
    << ": useful patterns " << r["useful_patterns"].get<std::size_t>() << ", components "
    << r["components"].get<std::size_t>() << '\n';
  return s.str();
}

std::string kl_text(const json& r) {
  std::ostringstream s;
  s << "P(" << format_one_line(Permutation(r["x"].get<std::vector<int>>())) << ", "
    << format_one_line(Permutation(r["w"].get<std::vector<int>>())) << ") = " << r["text"].get<std::string>()
    << "  [" << r["method"].get<std::string>() << "]\n";
  return s.str();
}

std::string indexed_path(const std::string& path, std::size_t index, std::size_t total) {
  if (total <= 1) return path;
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  const std::string suffix = "-" + std::to_string(index + 1);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

int code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const CapabilityError*>(&e)) return kCapabilityExceeded;
  return kPreconditionViolated;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal singular loci of Schubert varieties and Kazhdan-Lusztig polynomials", "schubsing"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();

  Globals g;
  app.add_flag("--json", g.json_out, "Emit one JSON record per line");
  app.add_option("--oracle-bound", g.oracle_bound, "Largest n handed to the brute-force oracles")
      ->envname("SCHUBSING_ORACLE_BOUND")
      ->check(CLI::Range(1, 16));
  app.add_option("--kl-bound", g.kl_bound, "Largest n handed to the KL recursion")->check(CLI::Range(1, 16));
  app.add_option("--jobs", g.jobs, "Worker threads for corpus and sweep modes")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed for bench");
  app.add_option("--corpus", g.corpus, "File with one permutation (or 'x ; w' pair) per line");
  app.add_option("--svg", g.svg_path, "Write SVG diagrams to this path");

  // Permutations are taken verbatim from the extra arguments: CLI11 would otherwise split
  // "[3,4,1,2]" into a list.
  auto* smooth = app.add_subcommand("smooth", "Pattern and tangent-space smoothness tests");
  smooth->allow_extras();
  auto* maxs = app.add_subcommand("maxsing", "Irreducible components of the singular locus");
  maxs->allow_extras();
  auto* count = app.add_subcommand("count", "Useful 4231/3412 patterns versus components");
  count->allow_extras();
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  kl->allow_extras();

  std::string style = "ascii";
  bool annotate = false;
  auto* diagram = app.add_subcommand("diagram", "Bruhat picture of the pair (x, w)");
  diagram->allow_extras();
  diagram->add_option("--style", style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  diagram->add_flag("--annotate", annotate, "Print d_{x,w}(p,q) in every cell");

  int sweep_n = 0;
  std::string mode = "maxsing";
  auto* sw = app.add_subcommand("sweep", "Exhaustive oracle comparison over S_n");
  sw->add_option("n", sweep_n, "Size")->required();
  sw->add_option("--mode", mode, "maxsing, kl, ew or patterns")
      ->check(CLI::IsMember({"maxsing", "kl", "ew", "patterns"}));

  std::vector<int> sizes{8, 16, 32};
  int trials = 5;
  auto* bn = app.add_subcommand("bench", "Median maxsing time on random permutations");
  bn->add_option("--sizes", sizes, "Sizes n")->delimiter(',');
  bn->add_option("--trials", trials, "Random permutations per size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "schubsing: " << e.what() << '\n';
    return kParseError;
  }

  std::vector<std::string> perms;
  for (const auto* sub : {smooth, maxs, count, kl, diagram}) {
    if (*sub) perms = app.remaining(true);
  }
  if (perms.empty() && !app.remaining().empty()) {
    err << "schubsing: unexpected argument " << app.remaining().front() << '\n';
    return kParseError;
  }
  for (const auto& p : perms) {
    if (p.rfind("--", 0) == 0) {
      err << "schubsing: unknown option " << p << '\n';
      return kParseError;
    }
  }

  try {
    if (*smooth || *maxs || *count) {
      const auto records = gather(g, perms, false);
      const auto build = *smooth ? smooth_record : *maxs ? maxsing_record : count_record;
      const auto render = *smooth ? smooth_text : *maxs ? maxsing_text : count_text;
      const auto results = parallel_map(records, g.jobs, [&](const auto& r) { return build(r[0]); });
      for (const auto& r : results) emit(out, g, r, render(r));
      return kOk;
    }
    if (*kl) {
      const auto records = gather(g, perms, true);
      const auto results =
          parallel_map(records, g.jobs, [&](const auto& r) { return kl_record(r[0], r[1], g.kl_bound); });
      for (const auto& r : results) emit(out, g, r, kl_text(r));
      return kOk;
    }
    if (*diagram) {
      const auto records = gather(g, perms, true);
      const bool svg = style == "svg";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& x = records[i][0];
        const auto& w = records[i][1];
        const std::string body = svg ? diagram_svg(x, w, annotate) : diagram_ascii(x, w, annotate);
        json rec{{"x", one_line_json(x)}, {"w", one_line_json(w)}, {"style", style}};
        if (!g.svg_path.empty() && svg) {
          const std::string path = indexed_path(g.svg_path, i, records.size());
          std::ofstream file(path);
          if (!file) throw PreconditionError("cannot write " + path);
          file << body;
          rec["path"] = path;
          emit(out, g, rec, "wrote " + path + '\n');
        } else {
          rec["diagram"] = body;
          emit(out, g, rec, body);
        }
      }
      return kOk;
    }
    if (*sw) {
      const SweepMode m = mode == "kl" ? SweepMode::Kl
                          : mode == "ew" ? SweepMode::Ew
                          : mode == "patterns" ? SweepMode::Patterns
                                               : SweepMode::Maxsing;
      const SweepResult r = sweep(sweep_n, m, g.oracle_bound, g.kl_bound, g.jobs);
      std::ostringstream text;
      text << "sweep n=" << r.n << " mode=" << mode << ": ";
      if (r.mismatch) {
        text << "MISMATCH " << *r.mismatch << '\n';
      } else {
        text << "all agree (" << r.checked << " permutations)\n";
      }
      emit(out, g, sweep_record(r), text.str());
      return r.mismatch ? kSweepMismatch : kOk;
    }
    if (*bn) {
      const auto rows = bench(sizes, trials, g.seed);
      std::ostringstream text;
      text << "n\ttrials\tmedian_s\tmedian_components\n";
      for (const auto& r : rows) {
        std::vector<int> c = r.components;
        std::sort(c.begin(), c.end());
        text << r.n << '\t' << trials << '\t' << r.median_seconds << '\t' << c[c.size() / 2] << '\n';
      }
      emit(out, g, bench_record(rows, trials, g.seed), text.str());
      return kOk;
    }
  } catch (const Error& e) {
    err << "schubsing: " << e.what() << '\n';
    return code_for(e);
  } catch (const std::exception& e) {
    err << "schubsing: internal error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}

}  // namespace schubsing::cli
