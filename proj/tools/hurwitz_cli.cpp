#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/acceptance.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/factorisation.hpp"
#include "hurwitz/monodromy_graph.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/quasipoly.hpp"
#include "hurwitz/series_io.hpp"
#include "hurwitz/toprec.hpp"
#include "hurwitz/wavefunction.hpp"

using namespace hurwitz;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string cache_path;
  bool no_cache = false;
  std::uint64_t seed = 20240601;

  int a = 1, g = 0, n = 1;
  std::string mu, rest, flavor = "monotone-orbifold", mode, method = "census";
  int mu1 = 1, ell = 1;
  int xorder = 2, horder = 4;
  bool check_qcurve = false, check_oracle = false, timings = false;
  int mu_max = 6, bound = 0;
  long prec = kDefaultPrecision;
  std::vector<int> only;
  bool json = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_mu(const std::string& text) {
  if (text.empty()) throw Usage("--mu is required");
  try {
    return parse_parts(text);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
}

// Engine with the persistent cache attached; flushed on destruction.
class CachedEngine {
 public:
  explicit CachedEngine(const Config& c) : no_cache_(c.no_cache) {
    if (!no_cache_) {
      const auto path = c.cache_path.empty() ? ValueCache::default_path() : std::filesystem::path(c.cache_path);
      engine_.emplace(ValueCache::load(path));
    } else {
      engine_.emplace();
    }
  }
  ~CachedEngine() {
    try {
      if (!no_cache_ && engine_->cache().dirty()) engine_->cache().flush();
    } catch (const std::exception& e) {
      std::cerr << "warning: cache not written: " << e.what() << "\n";
    }
  }
  CutJoinEngine& operator*() { return *engine_; }

 private:
  bool no_cache_;
  std::optional<CutJoinEngine> engine_;
};

void print_bi_series(const BiSeriesXH& s) {
  for (int d = 0; d <= s.x_truncation(); ++d) {
    const auto& t = s[d];
    for (int e = t.floor(); e <= t.top(); ++e) {
      const Rational c = t.coeff(e);
      if (c != 0) std::cout << "x^" << d << " hbar^" << e << ": " << to_string(c) << "\n";
    }
  }
}

int run_oracle(const Config& c) {
  const auto mu = parse_mu(c.mu);
  Flavor flavor;
  try {
    flavor = parse_flavor(c.flavor);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
  const CountMode mode = c.mode == "free" ? CountMode::Free : CountMode::FixedSigma0;
  if (!c.mode.empty() && c.mode != "free" && c.mode != "fixed-sigma0") throw Usage("--mode must be fixed-sigma0 or free");
  const Rational count = c.method == "dfs" ? count_factorisations_dfs(flavor, c.a, c.g, mu)
                                           : count_factorisations(flavor, c.a, c.g, mu, mode);
  if (c.json) {
    print_json(count_report(flavor, c.a, c.g, mu, mode, count));
  } else {
    std::cout << to_string(count) << "\n";
  }
  return kPass;
}

int run_cutjoin(const Config& c) {
  const auto mu = parse_mu(c.mu);
  CachedEngine engine(c);
  const Rational h = (*engine).hurwitz(c.a, c.g, mu);
  if (c.json) {
    print_json({{"a", c.a}, {"g", c.g}, {"mu", canonical_partition(mu)}, {"H", to_string(h)}});
  } else {
    std::cout << to_string(h) << "\n";
  }
  return kPass;
}

int run_refined(const Config& c) {
  std::vector<int> rest;
  try {
    rest = parse_parts(c.rest);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
  CachedEngine engine(c);
  const Rational h = (*engine).refined(c.a, c.g, c.mu1, c.ell, rest);
  std::optional<Rational> oracle;
  if (c.check_oracle) oracle = count_refined(c.a, c.g, c.mu1, c.ell, rest);
  const bool agree = !oracle || *oracle == h;
  if (c.json) {
    json j{{"a", c.a}, {"g", c.g}, {"mu1", c.mu1}, {"ell", c.ell}, {"rest", canonical_partition(rest)}, {"H", to_string(h)}};
    if (oracle) {
      j["oracle"] = to_string(*oracle);
      j["agree"] = agree;
    }
    print_json(j);
  } else {
    std::cout << to_string(h) << "\n";
    if (oracle) std::cout << "oracle " << to_string(*oracle) << (agree ? " (agree)" : " (MISMATCH)") << "\n";
  }
  return agree ? kPass : kFail;
}

int run_graphs(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const auto rep = verify_multiplicity_lemma(c.a, c.g, mu);
  if (c.json) {
    print_json(rep.to_json());
  } else {
    std::cout << "factorisations " << rep.factorisations << "\n"
              << "graphs " << rep.graphs << "\n"
              << "sum of multiplicities " << rep.total.get_str() << "\n"
              << "a^k k! H " << rep.expected.get_str() << "\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? kPass : kFail;
}

int run_wavefunction(const Config& c) {
  const std::string mode = c.mode.empty() ? "closed" : c.mode;
  if (mode != "closed" && mode != "numbers" && mode != "both") throw Usage("--mode must be closed, numbers or both");
  std::optional<BiSeriesXH> closed, numbers;
  if (mode != "numbers") closed = wavefunction_closed(c.a, c.xorder, c.horder);
  if (mode != "closed") {
    CachedEngine engine(c);
    numbers = wavefunction_from_numbers(*engine, c.a, c.xorder, c.horder);
  }
  std::vector<std::string> diff;
  if (closed && numbers) diff = compare_bi_series(*numbers, *closed);
  std::optional<QCurveReport> qc;
  if (c.check_qcurve) qc = check_quantum_curve(c.a, c.xorder, c.horder);
  const bool ok = diff.empty() && (!qc || qc->passed());

  if (c.json) {
    json j{{"a", c.a}, {"xorder", c.xorder}, {"horder", c.horder}, {"mode", mode}};
    if (closed) j["closed"] = to_json(*closed);
    if (numbers) j["numbers"] = to_json(*numbers);
    if (closed && numbers) {
      j["agree"] = diff.empty();
      j["differences"] = diff;
    }
    if (qc) j["qcurve"] = qc->to_json();
    print_json(j);
  } else {
    print_bi_series(closed ? *closed : *numbers);
    if (closed && numbers) {
      std::cout << (diff.empty() ? "pipelines agree" : "pipelines differ") << "\n";
      for (const auto& d : diff) std::cout << "  " << d << "\n";
    }
    if (qc) {
      std::cout << "quantum curve " << (qc->passed() ? "PASS" : "FAIL") << " below degree " << qc->boundary << "\n";
      for (const auto& r : qc->nonzero) std::cout << "  " << r << "\n";
    }
  }
  return ok ? kPass : kFail;
}

int run_qcurve(const Config& c) {
  const auto rep = check_quantum_curve(c.a, c.xorder, c.horder);
  if (c.json) {
    print_json(rep.to_json());
  } else {
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n" << "boundary degree " << rep.boundary << "\n";
    for (const auto& r : rep.nonzero) std::cout << "  " << r << "\n";
  }
  return rep.passed() ? kPass : kFail;
}

int run_toprec(const Config& c) {
  if (c.prec < 64) throw Usage("--prec must be at least 64");
  if (c.g == 0 && c.n == 2) throw Usage("(g,n) = (0,2) is excluded");
  CachedEngine engine(c);
  const auto rep = check_conjecture(*engine, c.g, c.n, c.a, c.mu_max, static_cast<mpfr_prec_t>(c.prec));
  if (c.json) {
    print_json(rep.to_json());
  } else {
    std::cout << "# " << kTopRecConvention << "\n";
    std::cout << "# mu  tr  cutjoin  abs_err  err_estimate  exact\n";
    for (const auto& e : rep.entries) {
      std::cout << partition_to_string(e.mu) << "  " << e.tr.real().to_string(20) << "  " << to_string(e.cutjoin) << "  "
                << e.abs_err.to_string(3) << "  " << e.error_estimate.to_string(3) << "  " << (e.exact ? "yes" : "no")
                << "\n";
    }
    for (const auto& p : rep.problems) std::cout << "problem: " << p << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? kPass : kFail;
}

int run_polycheck(const Config& c) {
  const int bound = c.bound > 0 ? c.bound : 5 * c.a;
  CachedEngine engine(c);
  const auto rep = quasipoly_check(*engine, c.a, c.g, c.n, bound);
  if (c.json) {
    print_json(rep.to_json());
  } else {
    std::cout << "expected degree " << rep.expected_degree << "\n";
    for (const auto& cl : rep.classes) {
      std::cout << "class " << partition_to_string(cl.first) << " degree ";
      if (cl.degree >= -1) {
        std::cout << cl.degree;
      } else {
        std::cout << "undetermined";
      }
      std::cout << (cl.vanishes ? "" : " FAILS") << "\n";
      if (cl.failure) {
        std::cout << "  first nonzero difference: orders " << partition_to_string(cl.failure->orders) << " at "
                  << partition_to_string(cl.failure->base) << " = " << to_string(cl.failure->value) << "\n";
      }
    }
    for (const auto& z : rep.zero_classes) std::cout << "class " << partition_to_string(z) << " identically zero\n";
    for (const auto& s : rep.asymmetric) std::cout << "asymmetric at " << s << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? kPass : kFail;
}

int run_verify_all(const Config& c) {
  CachedEngine engine(c);
  AcceptanceOptions options;
  options.seed = c.seed;
  options.only = c.only;
  bool ok = true;
  json rows = json::array();
  run_acceptance(*engine, options, [&](const CriterionResult& r) {
    ok = ok && r.passed;
    if (c.json) {
      rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << format_result(r, c.timings) << std::endl;
    }
  });
  if (c.json) print_json({{"seed", c.seed}, {"criteria", rows}, {"passed", ok}});
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone orbifold Hurwitz numbers: enumeration, cut-and-join, wave functions, topological recursion"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--cache", c.cache_path, "Value cache file (default $HURWITZ_CACHE or hurwitz_cache.txt)");
  app.add_flag("--no-cache", c.no_cache, "Do not read or write the value cache");
  app.add_option("--seed", c.seed, "Seed for randomized property checks");

  auto add_a = [&](CLI::App* s) { s->add_option("--a", c.a, "Orbifold parameter")->required()->check(CLI::PositiveNumber); };
  auto add_g = [&](CLI::App* s) { s->add_option("--g", c.g, "Genus")->required()->check(CLI::NonNegativeNumber); };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", c.json, "JSON output"); };

  auto* oracle = app.add_subcommand("oracle", "Count factorisations by enumeration");
  add_a(oracle);
  add_g(oracle);
  oracle->add_option("--mu", c.mu, "Ramification profile, e.g. 2,1,1")->required();
  oracle->add_option("--flavor", c.flavor, "simple | orbifold | monotone | monotone-orbifold");
  oracle->add_option("--mode", c.mode, "fixed-sigma0 | free");
  oracle->add_option("--method", c.method, "census | dfs")->check(CLI::IsMember({"census", "dfs"}));
  add_json(oracle);

  auto* cutjoin = app.add_subcommand("cutjoin", "Hurwitz number from the cut-and-join recursion");
  add_a(cutjoin);
  add_g(cutjoin);
  cutjoin->add_option("--mu", c.mu, "Ramification profile")->required();
  add_json(cutjoin);

  auto* refined = app.add_subcommand("refined", "Refined Hurwitz number");
  add_a(refined);
  add_g(refined);
  refined->add_option("--mu1", c.mu1, "Distinguished part")->required()->check(CLI::PositiveNumber);
  refined->add_option("--ell", c.ell, "Counter, 1..a")->required()->check(CLI::PositiveNumber);
  refined->add_option("--rest", c.rest, "Remaining parts");
  refined->add_flag("--check-oracle", c.check_oracle, "Compare with enumeration");
  add_json(refined);

  auto* graphs = app.add_subcommand("graphs", "Monodromy graph multiplicity check");
  add_a(graphs);
  add_g(graphs);
  graphs->add_option("--mu", c.mu, "Ramification profile")->required();
  add_json(graphs);

  auto* wave = app.add_subcommand("wavefunction", "Wave function coefficients");
  add_a(wave);
  wave->add_option("--xorder", c.xorder, "Number of k-terms K")->required()->check(CLI::NonNegativeNumber);
  wave->add_option("--horder", c.horder, "hbar order R")->required()->check(CLI::NonNegativeNumber);
  wave->add_option("--mode", c.mode, "closed | numbers | both");
  wave->add_flag("--check-qcurve", c.check_qcurve, "Apply the quantum curve");
  add_json(wave);

  auto* qcurve = app.add_subcommand("qcurve", "Quantum curve annihilation check");
  add_a(qcurve);
  qcurve->add_option("--xorder", c.xorder, "Number of k-terms K")->required()->check(CLI::NonNegativeNumber);
  qcurve->add_option("--horder", c.horder, "hbar order R")->required()->check(CLI::NonNegativeNumber);
  add_json(qcurve);

  auto* toprec = app.add_subcommand("toprec", "Topological recursion versus cut-and-join");
  add_a(toprec);
  add_g(toprec);
  toprec->add_option("--n", c.n, "Number of points")->required()->check(CLI::PositiveNumber);
  toprec->add_option("--mu-max", c.mu_max, "Largest mu_i")->check(CLI::PositiveNumber);
  toprec->add_option("--prec", c.prec, "Working precision in bits");
  add_json(toprec);

  auto* poly = app.add_subcommand("polycheck", "Quasi-polynomiality by finite differences");
  add_a(poly);
  add_g(poly);
  poly->add_option("--n", c.n, "Number of points")->required()->check(CLI::PositiveNumber);
  poly->add_option("--bound", c.bound, "Largest mu_i (default 5a)")->check(CLI::PositiveNumber);
  add_json(poly);

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--only", c.only, "Criterion ids")->delimiter(',');
  verify->add_flag("--timings", c.timings, "Print run times");
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*oracle) return run_oracle(c);
    if (*cutjoin) return run_cutjoin(c);
    if (*refined) return run_refined(c);
    if (*graphs) return run_graphs(c);
    if (*wave) return run_wavefunction(c);
    if (*qcurve) return run_qcurve(c);
    if (*toprec) return run_toprec(c);
    if (*poly) return run_polycheck(c);
    if (*verify) return run_verify_all(c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
