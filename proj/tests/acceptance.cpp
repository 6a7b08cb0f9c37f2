// Acceptance suite: one PASS/FAIL line per criterion, followed by indented
// diagnostics. `acceptance --only N` runs a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "assocbound/bounds.hpp"
#include "assocbound/cli.hpp"
#include "assocbound/models.hpp"
#include "assocbound/oracles.hpp"
#include "reference.hpp"

using namespace assocbound;

namespace {

void note(const std::string& text) { std::cout << "    " << text << "\n"; }

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

bool rel_close(double a, double b, double rel, double abs_tol = 0.0) {
  return std::abs(a - b) <= std::max(abs_tol, rel * std::max(std::abs(a), std::abs(b)));
}

// ---------------------------------------------------------------------------
// 1. Domination over the oracle-range test matrix.

struct DominationTally {
  int instances = 0;
  int checks = 0;
  int skipped = 0;
  std::map<std::string, int> failures;  // "model/method" -> count
  std::string first_failure;

  void fail(const std::string& model, const std::string& method, const std::string& detail) {
    ++failures[model + "/" + method];
    if (first_failure.empty()) first_failure = detail;
  }
  int failure_count() const {
    int n = 0;
    for (const auto& [key, count] : failures) n += count;
    return n;
  }
};

std::vector<ModelSpec> domination_matrix() {
  std::vector<ModelSpec> specs;
  const double ps[] = {0.05, 0.1, 0.3, 0.5};
  for (int k : {2, 3, 4}) {
    for (int n = 2 * k; n <= 20; ++n) {
      for (double p : ps) specs.push_back({ModelKind::runs, n, k, p});
    }
  }
  for (int k : {2, 3}) {
    for (int n = k; n <= 12; ++n) {
      for (double p : ps) specs.push_back({ModelKind::ustat, n, k, p});
    }
  }
  for (int n : {4, 5, 6}) {
    for (double p : {0.1, 0.3, 0.5}) specs.push_back({ModelKind::triangles, n, 0, p});
  }
  for (int N : {4, 5, 6}) {
    for (int k : {2, 3}) {
      for (int draws = 4; draws <= 64; ++draws) {
        ModelSpec h;
        h.model = ModelKind::hypergraph_cover;
        h.N = N;
        h.k = k;
        h.n_draws = draws;
        specs.push_back(h);
      }
    }
  }
  return specs;
}

DominationTally run_domination(const std::vector<ModelSpec>& specs, Eq2Form form,
                               bool skip_hypergraph) {
  DominationTally tally;
  EvaluateOptions options;
  options.eq2_form = form;
  for (const auto& spec : specs) {
    if (skip_hypergraph && spec.model == ModelKind::hypergraph_cover) continue;
    ++tally.instances;
    const double truth = exact_zero_probability(spec)->linear();
    const auto summary = summary_for(spec);
    const std::string model = to_string(spec.model);
    for (const auto& e : evaluate_all(summary, options)) {
      if (!e.result) {
        ++tally.skipped;
        continue;
      }
      const double v = e.result->linear();
      const std::string detail = nlohmann::json(spec).dump() + " " + to_string(e.method) +
                                 " = " + fmt(v, 10) + ", exact = " + fmt(truth, 10);
      if (!is_upper_bound(e.method)) {
        ++tally.checks;
        if (!(v <= truth + 1e-9)) tally.fail(model, to_string(e.method), detail);
      } else if (!e.result->vacuous) {
        ++tally.checks;
        if (!(v >= truth - 1e-9)) tally.fail(model, to_string(e.method), detail);
      }
    }
  }
  return tally;
}

bool criterion_1() {
  const auto specs = domination_matrix();
  const auto start = std::chrono::steady_clock::now();
  const auto tally = run_domination(specs, Eq2Form::printed, false);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = tally.failure_count() == 0 && seconds < 120.0;
  std::printf("[%s] criterion 1: domination suite, every non-vacuous upper bound >= exact - 1e-9 "
              "and independent product <= exact + 1e-9\n",
              pass ? "PASS" : "FAIL");
  note(std::to_string(tally.instances) + " instances, " + std::to_string(tally.checks) +
       " checks, " + std::to_string(tally.skipped) + " bounds skipped (precondition), " +
       fmt(seconds, 3) + " s");
  for (const auto& [key, count] : tally.failures) {
    note("violations " + key + ": " + std::to_string(count));
  }
  if (!tally.first_failure.empty()) note("first violation: " + tally.first_failure);
  int other = tally.failure_count();
  for (const auto& [key, count] : tally.failures) {
    if (key.ends_with("/janson-ratio") || key == "hypergraph-cover/independent-lower") {
      other -= count;
    }
  }
  note("violations outside janson-ratio and hypergraph independent-lower: " +
       std::to_string(other));

  // Same matrix with the ratio bound in its standard form exp(-lambda^2/dbar),
  // restricted to the positively associated models.
  const auto standard = run_domination(specs, Eq2Form::standard, true);
  note(std::string("diagnostic: standard ratio form on runs/ustat/triangles: ") +
       std::to_string(standard.checks) + " checks, " +
       std::to_string(standard.failure_count()) + " violations");
  const auto standard_all = run_domination(specs, Eq2Form::standard, false);
  for (const auto& [key, count] : standard_all.failures) {
    note("diagnostic: standard ratio form, full matrix, violations " + key + ": " +
         std::to_string(count));
  }
  return pass;
}

// ---------------------------------------------------------------------------
// 2. Oracle cross-validation.

bool criterion_2() {
  int runs_checked = 0;
  int runs_bad = 0;
  double runs_worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const auto profile = reference::run_profile(n);
    for (int k = 1; k <= n; ++k) {
      for (double p : {0.05, 0.1, 0.3, 0.5, 0.9}) {
        const double brute = profile.zero(k, p, false);
        const double exact = runs_zero_exact(n, k, p).linear();
        ++runs_checked;
        runs_worst = std::max(runs_worst, std::abs(exact - brute) / brute);
        if (!rel_close(exact, brute, 1e-12)) ++runs_bad;
      }
    }
  }

  int ustat_checked = 0;
  int ustat_bad = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (double p : {0.05, 0.1, 0.3, 0.5, 0.9}) {
        long double brute = 0.0L;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
          if (std::popcount(x) < k) brute += reference::bits_prob(x, n, p);
        }
        ++ustat_checked;
        if (!rel_close(ustat_zero_exact(n, k, p).linear(), static_cast<double>(brute), 1e-12)) {
          ++ustat_bad;
        }
      }
    }
  }

  int cover_bad = 0;
  for (int n = 1; n <= 30; ++n) {
    const long double closed =
        1.0L - 3.0L * std::pow(2.0L / 3.0L, n) + 3.0L * std::pow(1.0L / 3.0L, n);
    if (std::abs(cover_all_exact(3, 2, n).linear() - static_cast<double>(closed)) > 1e-10) {
      ++cover_bad;
    }
  }

  // Count triangle-free labelled graphs on 4 vertices directly.
  std::vector<std::vector<int>> tri;
  const auto table = reference::triangles_table(4, 0.5, &tri);
  int free_graphs = 0;
  for (const auto& ones : table.ones) free_graphs += ones.none();
  const double tf = triangle_free_exact(4, 0.5).linear();
  const bool tri_ok = free_graphs == 41 && rel_close(tf, 41.0 / 64.0, 1e-15);

  const bool pass = runs_bad == 0 && ustat_bad == 0 && cover_bad == 0 && tri_ok;
  std::printf("[%s] criterion 2: oracle cross-validation (runs, ustat, cover_all, triangle_free)\n",
              pass ? "PASS" : "FAIL");
  note("runs transfer matrix vs 2^n brute force: " + std::to_string(runs_checked) +
       " cases, " + std::to_string(runs_bad) + " beyond 1e-12, worst relative error " +
       fmt(runs_worst, 3));
  note("ustat binomial tail vs 2^n enumeration: " + std::to_string(ustat_checked) + " cases, " +
       std::to_string(ustat_bad) + " beyond 1e-12");
  note("cover_all_exact(3,2,n) vs closed form, n = 1..30: " + std::to_string(cover_bad) +
       " beyond 1e-10");
  note("triangle-free graphs on 4 vertices: " + std::to_string(free_graphs) +
       " of 64, triangle_free_exact(4, 0.5) = " + fmt(tf, 17));
  return pass;
}

// ---------------------------------------------------------------------------
// 3. lv_general and lv_iid agree.

bool criterion_3() {
  std::mt19937_64 rng(0x5eed3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 0.999 * unit(rng);
    const std::uint64_t count = 1 + rng() % 100000;
    const double cov = unit(rng) < 0.2 ? 0.0 : std::exp(-30.0 * unit(rng)) * count;
    const double t = std::exp(-12.0 + 16.0 * unit(rng));
    const auto s = FamilySummary::homogeneous_from(count, p, cov, cov);
    const double a = lv_general(s, t).value.log_value();
    const double b = lv_iid(s, t).value.log_value();
    const double err = std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    worst = std::max(worst, err);
    if (err > 1e-12) ++bad;
  }
  const bool pass = bad == 0;
  std::printf("[%s] criterion 3: lv-general and lv-iid agree to 1e-12 (log domain) on 1000 "
              "random homogeneous summaries\n",
              pass ? "PASS" : "FAIL");
  note(std::to_string(bad) + " disagreements, worst scaled log difference " + fmt(worst, 3));
  return pass;
}

// ---------------------------------------------------------------------------
// 4. The MGF gap lemma on random monotone laws.

bool criterion_4() {
  std::mt19937_64 rng(0x1e44a);
  int violations = 0;
  int laws = 0;
  double max_ratio = 0.0;
  for (double t : {0.1, 0.5, 1.0, 2.0}) {
    for (int i = 0; i < 1000; ++i) {
      const int m = 1 + i % 8;
      const auto law = random_monotone_law(m, rng);
      const auto r = mgf_gap_check(law, t);
      ++laws;
      if (!r.holds) ++violations;
      if (r.bound > 0.0) max_ratio = std::max(max_ratio, r.gap / r.bound);
    }
  }
  const bool pass = violations == 0;
  std::printf("[%s] criterion 4: MGF gap lemma holds on 1000 random monotone laws per t in "
              "{0.1, 0.5, 1, 2}, m <= 8\n",
              pass ? "PASS" : "FAIL");
  note(std::to_string(laws) + " laws, " + std::to_string(violations) +
       " violations, max gap/bound " + fmt(max_ratio, 4));
  return pass;
}

// ---------------------------------------------------------------------------
// 5. Runs regime: correction factor and Poisson band.

bool criterion_5() {
  const std::int64_t n = 10000;
  const int k = 3;
  const double p = 0.5 * std::pow(static_cast<double>(n), -1.0 / 3.0);
  const double pk = std::pow(p, k);
  const auto summary = runs_summary(n, k, p);
  const auto lv = lv_optimal(summary);
  const double log_indep = static_cast<double>(n) * std::log1p(-pk);
  const double ratio = std::exp(lv.value.log_value() - log_indep);
  const double cap = std::exp(static_cast<double>(n) * pk / (1.0 - pk));
  const bool factor_ok = ratio <= cap + 1e-9;

  int band_checked = 0;
  int band_bad = 0;
  std::string band_first;
  for (int kk : {2, 3, 4}) {
    for (int len = 2 * kk; len <= 20; ++len) {
      for (double q : {0.05, 0.1, 0.3, 0.5}) {
        const double exact = runs_zero_exact(len, kk, q).linear();
        const double qk = std::pow(q, kk);
        const double poisson = std::exp(-len * (1.0 - q) * qk);
        const double width = (2.0 * kk * (1.0 - q) + 1.0) * qk;
        ++band_checked;
        if (!(std::abs(exact - poisson) <= width)) {
          ++band_bad;
          if (band_first.empty()) {
            band_first = "n=" + std::to_string(len) + " k=" + std::to_string(kk) +
                         " p=" + fmt(q) + ": |" + fmt(exact) + " - " + fmt(poisson) + "| > " +
                         fmt(width);
          }
        }
      }
    }
  }
  const bool pass = factor_ok && band_bad == 0;
  std::printf("[%s] criterion 5: runs regime, optimized bound / (1-p^k)^n <= e^{n p^k/(1-p^k)} "
              "and Poisson band contains the exact value\n",
              pass ? "PASS" : "FAIL");
  note("n = 10000, k = 3, p = " + fmt(p, 8) + ": ratio " + fmt(ratio, 10) + " <= cap " +
       fmt(cap, 10) + " at t* = " + fmt(*lv.t, 6));
  note("Poisson band: " + std::to_string(band_checked) + " (n, k, p) cases, " +
       std::to_string(band_bad) + " outside");
  if (!band_first.empty()) note("first outside: " + band_first);
  return pass;
}

// ---------------------------------------------------------------------------
// 6. Hypergraph cover at N = 10, k = 3, n_draws = 2 N^2.

bool criterion_6() {
  const int N = 10;
  const int k = 3;
  const double lambda = 2.0;
  const auto draws = static_cast<std::int64_t>(lambda * N * N);
  ModelSpec spec;
  spec.model = ModelKind::hypergraph_cover;
  spec.N = N;
  spec.k = k;
  spec.n_draws = draws;
  const auto summary = summary_for(spec);
  const double pairs = N * (N - 1) / 2.0;

  const auto bs = boppona_spencer(summary);
  const auto lv = lv_optimal(summary);
  const auto indep = independent_lower(summary);
  const double e6 = std::exp(-6.0 * lambda);
  const double log_factor = pairs * e6 / (1.0 - e6);
  const double log_excess = lv.value.log_value() - indep.value.log_value();

  const bool bs_vacuous = bs.vacuous;
  const bool lv_below_one = !lv.vacuous;
  const bool lv_close = log_excess <= log_factor;

  const auto est = monte_carlo(spec, 1000000, cli::kDefaultSeed, 0.99);
  const bool bracket = est.ci.upper >= indep.linear() && est.ci.lower <= lv.linear();

  const auto tiny = lv_general(summary, TParam::from_log(-1000.0));

  const bool pass = bs_vacuous && lv_below_one && lv_close && bracket;
  std::printf("[%s] criterion 6: hypergraph N=10, k=3, n_draws=200: Boppona-Spencer vacuous, "
              "optimized new bound < 1 and near the independent product, MC bracket\n",
              pass ? "PASS" : "FAIL");
  note("p = " + fmt(summary.common_mean(), 10) + ", delta = " + fmt(summary.delta, 6) +
       ", cov_sum = " + fmt(summary.cov_sum, 6));
  note(std::string("Boppona-Spencer = ") + fmt(bs.linear(), 12) + (bs_vacuous ? " (vacuous)" : " (not vacuous)"));
  note(std::string("new bound (optimized) = ") + fmt(lv.linear(), 12) + " at t* = " + fmt(*lv.t, 6) +
       (lv_below_one ? ", < 1" : ", >= 1"));
  note("independent product = " + fmt(indep.linear(), 12) + "; log excess " +
       fmt(log_excess, 4) + " vs allowed " + fmt(log_factor, 4) + (lv_close ? " (ok)" : " (too far)"));
  note("new bound at t = e^-1000 = " + fmt(tiny.linear(), 12));
  note("Monte Carlo 1e6 trials: " + fmt(est.estimate, 10) + ", 99% CI [" + fmt(est.ci.lower, 10) +
       ", " + fmt(est.ci.upper, 10) + "]" + (bracket ? " overlaps" : " misses") +
       " [independent product, new bound]");
  return pass;
}

// ---------------------------------------------------------------------------
// 7. Vertex-sharing covariance against n (k^3 - 3k^2 + 2k) / N^3.

bool criterion_7() {
  const int k = 3;
  const double poly = k * k * k - 3.0 * k * k + 2.0 * k;
  double last_ratio = 0.0;
  std::vector<std::string> lines;
  for (int N : {20, 40, 80}) {
    const std::int64_t draws = 2LL * N * N;
    const double expansion = static_cast<double>(draws) * poly / (static_cast<double>(N) * N * N);
    const double cov = hypergraph_pair_covariances(N, k, draws).share;
    const double p = hypergraph_edge_prob(N, k, draws).linear();
    const double ratio = cov / expansion;
    const double normalized = cov / (p * p) / expansion;
    last_ratio = ratio;
    lines.push_back("N = " + std::to_string(N) + ": cov = " + fmt(cov, 6) + ", expansion = " +
                    fmt(expansion, 6) + ", ratio = " + fmt(ratio, 6) +
                    "; ratio after dividing cov by p^2 = " + fmt(normalized, 6));
  }
  const bool pass = last_ratio >= 0.7 && last_ratio <= 1.3;
  std::printf("[%s] criterion 7: per-pair vertex-sharing covariance / (n_draws * 6 / N^3) within "
              "[0.7, 1.3] at N = 80\n",
              pass ? "PASS" : "FAIL");
  for (const auto& l : lines) note(l);
  return pass;
}

// ---------------------------------------------------------------------------
// 8. cmd_mc determinism.

std::string mc_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str();
}

bool criterion_8() {
  const std::vector<std::vector<std::string>> specs = {
      {"--model", "runs", "--n", "100", "--k", "3", "--p", "0.3"},
      {"--model", "triangles", "--n", "12", "--p", "0.15"},
      {"--model", "hypergraph", "--N", "8", "--k", "3", "--n-draws", "40"},
  };
  bool pass = true;
  int compared = 0;
  for (const auto& spec : specs) {
    std::vector<std::string> base = {"mc", "--trials", "200000", "--seed", "42"};
    base.insert(base.end(), spec.begin(), spec.end());
    const std::string reference_out = mc_output(base);
    pass = pass && !reference_out.empty() && reference_out == mc_output(base);
    ++compared;
    for (const char* w : {"1", "4", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--workers", w});
      pass = pass && mc_output(args) == reference_out;
      ++compared;
    }
  }
  std::printf("[%s] criterion 8: mc output byte-identical across repeated runs and workers "
              "{1, 4, 8}\n",
              pass ? "PASS" : "FAIL");
  note(std::to_string(specs.size()) + " models, " + std::to_string(compared) +
       " outputs compared against the first run");
  return pass;
}

// ---------------------------------------------------------------------------
// 9. Monte Carlo throughput.

bool criterion_9() {
  const ModelSpec spec{ModelKind::runs, 100, 3, 0.3};
  const std::uint64_t trials = 1000000;
  auto rate = [&](unsigned workers) {
    const auto start = std::chrono::steady_clock::now();
    monte_carlo(spec, trials, cli::kDefaultSeed, 0.95, workers);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return static_cast<double>(trials) / s;
  };
  const double single = rate(1);
  const double all = rate(0);
  const bool pass = single >= 1e5;
  std::printf("[%s] criterion 9: Monte Carlo >= 1e5 trials/s for runs n = 100 (single thread)\n",
              pass ? "PASS" : "FAIL");
  note("1 thread: " + fmt(single, 4) + " trials/s; " +
       std::to_string(std::max(1u, std::thread::hardware_concurrency())) +
       " threads: " + fmt(all, 4) + " trials/s");
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool (*const criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                criterion_6, criterion_7, criterion_8, criterion_9};
  int failed = 0;
  for (int i = 1; i <= 9; ++i) {
    if (only != 0 && only != i) continue;
    if (!criteria[i - 1]()) ++failed;
    std::cout.flush();
  }
  if (only == 0) std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
