#include "assocbound/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

namespace assocbound::cli {

namespace {

constexpr BoundMethod kMethods[] = {
    BoundMethod::janson_basic,      BoundMethod::janson_ratio, BoundMethod::boppona_spencer,
    BoundMethod::boutsikas_koutras, BoundMethod::lv_general,   BoundMethod::lv_iid,
    BoundMethod::independent_lower,
};

std::string column_stem(BoundMethod m) {
  std::string s = to_string(m);
  for (char& c : s)
    if (c == '-') c = '_';
  return s;
}

std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_opt(const std::optional<double>& x) { return x ? fmt17(*x) : ""; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by the model-taking subcommands.
struct ModelFlags {
  std::string model;
  std::int64_t n = 0;
  std::int64_t k = 0;
  double p = -1.0;
  std::int64_t N = 0;
  std::int64_t n_draws = 0;
  bool linear_runs = false;

  void attach(CLI::App* app) {
    app->add_option("--model", model, "runs | triangles | ustat | hypergraph-cover");
    app->add_option("--n", n, "sequence length / vertex count");
    app->add_option("--k", k, "run length / subset size / clique size");
    app->add_option("--p", p, "success probability");
    app->add_option("--N", N, "hypergraph vertex count");
    app->add_option("--n-draws", n_draws, "number of random K_k draws");
    app->add_flag("--linear-runs", linear_runs, "runs over a linear (non-circular) string");
  }

  ModelSpec spec() const {
    if (model.empty()) throw UsageError("--model is required");
    ModelSpec s;
    try {
      s.model = model_kind_from_string(model);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    s.n = n;
    s.k = k;
    s.p = p;
    s.N = N;
    s.n_draws = n_draws;
    s.linear_runs = linear_runs;
    return s;
  }
};

void require_valid(const ModelSpec& spec, bool sampling_only = false) {
  const auto problems = sampling_only ? validate_for_sampling(spec) : validate(spec);
  if (!problems.empty()) throw UsageError("invalid model parameters: " + problems.front());
}

std::vector<FormulaVariant> variants_from(const std::string& flag) {
  if (flag == "both") return {FormulaVariant::first_principles, FormulaVariant::paper_as_printed};
  try {
    return {formula_variant_from_string(flag)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Eq2Form eq2_from(const std::string& flag) {
  if (flag == "printed") return Eq2Form::printed;
  if (flag == "standard") return Eq2Form::standard;
  throw UsageError("--eq2-form must be printed or standard");
}

nlohmann::json summary_report(const std::optional<ModelSpec>& spec, FormulaVariant variant,
                              const FamilySummary& summary, const EvaluateOptions& options) {
  nlohmann::json j;
  if (spec) {
    j["model"] = *spec;
    j["variant"] = to_string(variant);
  } else {
    j["model"] = nullptr;
    j["variant"] = nullptr;
  }
  j["summary"] = summary;
  j["violations"] = validate(summary);
  j["eq2_form"] = options.eq2_form == Eq2Form::printed ? "printed" : "standard";
  j["bounds"] = to_json(evaluate_all(summary, options));
  return j;
}

int cmd_bound(const ModelFlags& flags, const std::string& summary_text,
              const std::string& variant_flag, const std::string& eq2_flag,
              const std::string& t_flag, std::ostream& out) {
  EvaluateOptions options;
  options.eq2_form = eq2_from(eq2_flag);
  if (!t_flag.empty()) options.t_override = parse_t(t_flag);

  if (!summary_text.empty()) {
    if (!flags.model.empty()) throw UsageError("--summary and --model are mutually exclusive");
    FamilySummary summary;
    try {
      summary = nlohmann::json::parse(summary_text).get<FamilySummary>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--summary: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto problems = validate(summary);
    if (!problems.empty()) throw UsageError("inconsistent summary: " + problems.front());
    out << summary_report(std::nullopt, FormulaVariant::first_principles, summary, options)
               .dump(2)
        << "\n";
    return kExitOk;
  }

  const ModelSpec spec = flags.spec();
  require_valid(spec);
  const auto variants = variants_from(variant_flag);
  nlohmann::json reports = nlohmann::json::array();
  for (auto v : variants) {
    reports.push_back(summary_report(spec, v, summary_for(spec, v), options));
  }
  out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return kExitOk;
}

void set_param(ModelSpec& spec, const std::string& param, double value) {
  auto as_int = [&] { return static_cast<std::int64_t>(std::llround(value)); };
  const bool ok = [&] {
    switch (spec.model) {
      case ModelKind::runs:
      case ModelKind::ustat: return param == "n" || param == "k" || param == "p";
      case ModelKind::triangles: return param == "n" || param == "p";
      case ModelKind::hypergraph_cover: return param == "N" || param == "k" || param == "n_draws";
    }
    return false;
  }();
  if (!ok) throw UsageError("--sweep: model " + to_string(spec.model) + " has no parameter '" + param + "'");
  if (param == "n") spec.n = as_int();
  if (param == "k") spec.k = as_int();
  if (param == "p") spec.p = value;
  if (param == "N") spec.N = as_int();
  if (param == "n_draws") spec.n_draws = as_int();
}

struct CompareFlags {
  std::string sweep;
  std::string variant = "first-principles";
  std::string eq2 = "printed";
  std::string t;
  bool oracle = false;
  bool mc = false;
  std::uint64_t trials = 100000;
  std::uint64_t seed = kDefaultSeed;
  double level = 0.95;
  unsigned workers = 0;
  std::string format = "csv";
};

int cmd_compare(const ModelFlags& flags, const CompareFlags& cf, std::ostream& out) {
  if (cf.sweep.empty()) throw UsageError("--sweep is required");
  Sweep sweep;
  try {
    sweep = parse_sweep(cf.sweep);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cf.format != "csv" && cf.format != "json") throw UsageError("--format must be csv or json");
  const ModelSpec base = flags.spec();
  EvaluateOptions options;
  options.eq2_form = eq2_from(cf.eq2);
  if (!cf.t.empty()) options.t_override = parse_t(cf.t);
  const auto variants = variants_from(cf.variant);

  std::vector<ComparisonRow> rows;
  std::optional<ModelSpec> previous;
  for (double value : sweep.values) {
    ModelSpec spec = base;
    set_param(spec, sweep.param, value);
    // Integer parameters may collapse neighbouring grid points.
    if (previous) {
      nlohmann::json a = spec, b = *previous;
      if (a == b) continue;
    }
    previous = spec;
    require_valid(spec);

    std::optional<double> truth;
    std::optional<double> lo;
    std::optional<double> hi;
    std::string source;
    if (cf.oracle) {
      if (auto exact = exact_zero_probability(spec)) {
        truth = exact->linear();
        source = "oracle";
      }
    }
    if (!truth && cf.mc) {
      const auto est = monte_carlo(spec, cf.trials, cf.seed, cf.level, cf.workers);
      truth = est.estimate;
      lo = est.ci.lower;
      hi = est.ci.upper;
      source = "mc";
    }

    for (auto v : variants) {
      ComparisonRow row;
      row.spec = spec;
      row.variant = v;
      row.summary = summary_for(spec, v);
      row.summary_violations = validate(row.summary).size();
      row.truth = truth;
      row.truth_source = source;
      row.truth_lower = lo;
      row.truth_upper = hi;
      row.bounds = evaluate_all(row.summary, options);
      row.tightest = tightest_method(row.bounds);
      rows.push_back(std::move(row));
    }
  }

  if (cf.format == "csv") {
    const auto& header = csv_header();
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) out << csv_line(row) << "\n";
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(row_json(row));
    out << arr.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const ModelFlags& flags, const CompareFlags& cf, std::ostream& out) {
  const ModelSpec spec = flags.spec();
  require_valid(spec);
  EvaluateOptions options;
  options.eq2_form = eq2_from(cf.eq2);
  if (!cf.t.empty()) options.t_override = parse_t(cf.t);
  const auto variants = variants_from(cf.variant);
  if (variants.size() != 1) throw UsageError("verify takes a single --variant");

  nlohmann::json report;
  report["model"] = spec;
  report["variant"] = to_string(variants[0]);
  double truth_low = 0.0;   // compared against upper bounds
  double truth_high = 0.0;  // compared against the lower bound
  std::optional<LogProb> exact;
  if (!cf.mc) exact = exact_zero_probability(spec);
  if (exact) {
    truth_low = exact->linear() - 1e-9;
    truth_high = exact->linear() + 1e-9;
    report["source"] = "oracle";
    report["truth"] = exact->linear();
  } else if (cf.mc) {
    const auto est = monte_carlo(spec, cf.trials, cf.seed, cf.level, cf.workers);
    truth_low = est.ci.lower;
    truth_high = est.ci.upper;
    report["source"] = "mc";
    report["truth"] = est.estimate;
    report["ci"] = {est.ci.lower, est.ci.upper};
    report["trials"] = est.trials;
    report["seed"] = est.seed;
  } else {
    throw UsageError("no exact oracle for these parameters; pass --mc --trials N");
  }

  const auto summary = summary_for(spec, variants[0]);
  report["violations"] = validate(summary);
  bool all_pass = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& entry : evaluate_all(summary, options)) {
    nlohmann::json c;
    c["method"] = to_string(entry.method);
    if (!entry.result) {
      c["status"] = "skipped";
      c["reason"] = entry.skipped_reason;
      checks.push_back(c);
      continue;
    }
    const double v = entry.result->linear();
    c["value"] = v;
    bool pass = true;
    if (!is_upper_bound(entry.method)) {
      pass = v <= truth_high;
      c["check"] = "lower bound <= truth";
    } else if (entry.result->vacuous) {
      c["check"] = "vacuous upper bound";
    } else {
      pass = v >= truth_low;
      c["check"] = "upper bound >= truth";
    }
    c["status"] = pass ? "pass" : "fail";
    all_pass = all_pass && pass;
    checks.push_back(c);
  }
  report["checks"] = checks;
  report["pass"] = all_pass;
  out << report.dump(2) << "\n";
  return all_pass ? kExitOk : kExitFailed;
}

int cmd_mc(const ModelFlags& flags, const CompareFlags& cf, std::ostream& out,
           std::ostream& err) {
  const ModelSpec spec = flags.spec();
  require_valid(spec, true);
  if (cf.trials == 0) throw UsageError("--trials must be >= 1");
  if (!(cf.level > 0.0 && cf.level < 1.0)) throw UsageError("--level must lie in (0, 1)");
  const auto start = std::chrono::steady_clock::now();
  const auto est = monte_carlo(spec, cf.trials, cf.seed, cf.level, cf.workers);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json j;
  j["model"] = spec;
  j["trials"] = est.trials;
  j["successes"] = est.successes;
  j["estimate"] = est.estimate;
  j["ci_lower"] = est.ci.lower;
  j["ci_upper"] = est.ci.upper;
  j["level"] = est.ci.level;
  j["seed"] = est.seed;
  out << j.dump(2) << "\n";
  err << "trials/s: " << (seconds > 0 ? static_cast<double>(cf.trials) / seconds : 0.0) << "\n";
  return kExitOk;
}

int cmd_lemma_check(int m, double t, std::uint64_t seed, std::uint64_t count,
                    std::ostream& out) {
  if (m < 1 || m > 10) throw UsageError("--m must lie in [1, 10]");
  if (!(t > 0.0)) throw UsageError("--t must be positive");
  if (count < 1) throw UsageError("--count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uint64_t violations = 0;
  double max_ratio = 0.0;
  double max_gap = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto law = random_monotone_law(m, rng);
    const auto r = mgf_gap_check(law, t);
    if (!r.holds) ++violations;
    max_gap = std::max(max_gap, r.gap);
    if (r.bound > 0.0) max_ratio = std::max(max_ratio, r.gap / r.bound);
  }
  nlohmann::json j;
  j["m"] = m;
  j["t"] = t;
  j["count"] = count;
  j["seed"] = seed;
  j["violations"] = violations;
  j["max_gap"] = max_gap;
  j["max_ratio"] = max_ratio;
  j["pass"] = violations == 0;
  out << j.dump(2) << "\n";
  return violations == 0 ? kExitOk : kExitFailed;
}

}  // namespace

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("--sweep: expected param=start:stop:count[:geom]");
  }
  Sweep sweep;
  sweep.param = text.substr(0, eq);
  if (sweep.param == "n-draws") sweep.param = "n_draws";
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4) {
    throw std::invalid_argument("--sweep: expected param=start:stop:count[:geom]");
  }
  bool geometric = false;
  if (parts.size() == 4) {
    if (parts[3] == "geom") geometric = true;
    else if (parts[3] != "lin") throw std::invalid_argument("--sweep: spacing must be geom or lin");
  }
  double start = 0, stop = 0;
  long long count = 0;
  try {
    std::size_t used = 0;
    start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("start");
    stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("stop");
    count = std::stoll(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw std::invalid_argument("--sweep: malformed number in '" + text + "'");
  }
  if (count < 1) throw std::invalid_argument("--sweep: empty grid");
  if (geometric && !(start > 0.0 && stop > 0.0)) {
    throw std::invalid_argument("--sweep: geometric grid needs positive endpoints");
  }
  for (long long i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    double v = geometric ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                         : start + f * (stop - start);
    if (i == count - 1 && count > 1) v = stop;
    sweep.values.push_back(v);
  }
  return sweep;
}

TParam parse_t(const std::string& text) {
  try {
    std::size_t used = 0;
    if (text.rfind("log:", 0) == 0) {
      const std::string rest = text.substr(4);
      const double log_t = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing characters");
      return TParam::from_log(log_t);
    }
    const double t = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return TParam::from_value(t);
  } catch (const std::exception&) {
    throw UsageError("--t: expected a positive real or log:<real>, got '" + text + "'");
  }
}

std::optional<BoundMethod> tightest_method(const std::vector<BoundEntry>& bounds) {
  std::optional<BoundMethod> best;
  double best_log = 0.0;
  for (const auto& e : bounds) {
    if (!e.result || !is_upper_bound(e.method) || e.result->vacuous) continue;
    if (!best || e.result->value.log_value() < best_log) {
      best = e.method;
      best_log = e.result->value.log_value();
    }
  }
  return best;
}

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header = [] {
    std::vector<std::string> h = {"model",  "variant", "n",     "k",       "p",
                                  "N",      "n_draws", "count", "lambda",  "delta",
                                  "cov_sum", "summary_violations", "truth", "truth_source",
                                  "truth_lower", "truth_upper"};
    for (auto m : kMethods) {
      const auto stem = column_stem(m);
      for (const char* suffix : {"_value", "_log", "_t", "_vacuous"}) h.push_back(stem + suffix);
    }
    h.push_back("tightest_method");
    return h;
  }();
  return header;
}

std::string csv_line(const ComparisonRow& row) {
  std::vector<std::string> cells;
  const auto& s = row.spec;
  const bool hyper = s.model == ModelKind::hypergraph_cover;
  const bool has_k = s.model != ModelKind::triangles;
  cells.push_back(to_string(s.model));
  cells.push_back(to_string(row.variant));
  cells.push_back(hyper ? "" : std::to_string(s.n));
  cells.push_back(has_k ? std::to_string(s.k) : "");
  cells.push_back(hyper ? "" : fmt17(s.p));
  cells.push_back(hyper ? std::to_string(s.N) : "");
  cells.push_back(hyper ? std::to_string(s.n_draws) : "");
  cells.push_back(std::to_string(row.summary.count));
  cells.push_back(fmt17(row.summary.lambda));
  cells.push_back(fmt17(row.summary.delta));
  cells.push_back(fmt17(row.summary.cov_sum));
  cells.push_back(std::to_string(row.summary_violations));
  cells.push_back(fmt_opt(row.truth));
  cells.push_back(row.truth_source);
  cells.push_back(fmt_opt(row.truth_lower));
  cells.push_back(fmt_opt(row.truth_upper));
  for (auto m : kMethods) {
    const BoundEntry* entry = nullptr;
    for (const auto& e : row.bounds)
      if (e.method == m) entry = &e;
    if (!entry || !entry->result) {
      cells.insert(cells.end(), {"", "", "", ""});
      continue;
    }
    const auto& r = *entry->result;
    cells.push_back(fmt17(r.linear()));
    cells.push_back(fmt17(r.value.log_value()));
    cells.push_back(r.log_t ? fmt17(*r.t) : "");
    cells.push_back(r.vacuous ? "true" : "false");
  }
  cells.push_back(row.tightest ? to_string(*row.tightest) : "");
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

nlohmann::json row_json(const ComparisonRow& row) {
  nlohmann::json j;
  j["model"] = row.spec;
  j["variant"] = to_string(row.variant);
  j["summary"] = row.summary;
  j["summary_violations"] = row.summary_violations;
  j["truth"] = row.truth ? nlohmann::json(*row.truth) : nlohmann::json(nullptr);
  j["truth_source"] = row.truth_source.empty() ? nlohmann::json(nullptr) : nlohmann::json(row.truth_source);
  j["truth_lower"] = row.truth_lower ? nlohmann::json(*row.truth_lower) : nlohmann::json(nullptr);
  j["truth_upper"] = row.truth_upper ? nlohmann::json(*row.truth_upper) : nlohmann::json(nullptr);
  j["bounds"] = to_json(row.bounds);
  j["tightest_method"] = row.tightest ? nlohmann::json(to_string(*row.tightest)) : nlohmann::json(nullptr);
  return j;
}

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds on P(X = 0) for sums of positively associated indicators"};
  app.require_subcommand(1);

  ModelFlags model_flags;
  CompareFlags cf;
  std::string summary_text;
  int lemma_m = 2;
  double lemma_t = 1.0;
  std::uint64_t lemma_count = 100;

  auto* bound = app.add_subcommand("bound", "evaluate every bound for one model or summary");
  model_flags.attach(bound);
  bound->add_option("--summary", summary_text, "FamilySummary as JSON");
  bound->add_option("--variant", cf.variant, "first-principles | paper | both");
  bound->add_option("--eq2-form", cf.eq2, "printed | standard");
  bound->add_option("--t", cf.t, "fixed t (real or log:<ln t>) instead of optimizing");

  auto* compare = app.add_subcommand("compare", "sweep one parameter and tabulate bounds");
  model_flags.attach(compare);
  compare->add_option("--sweep", cf.sweep, "param=start:stop:count[:geom]");
  compare->add_option("--variant", cf.variant, "first-principles | paper | both");
  compare->add_option("--eq2-form", cf.eq2, "printed | standard");
  compare->add_option("--t", cf.t, "fixed t (real or log:<ln t>)");
  compare->add_flag("--oracle", cf.oracle, "attach exact P(Z=0) where available");
  compare->add_flag("--mc", cf.mc, "attach Monte Carlo estimates");
  compare->add_option("--trials", cf.trials, "Monte Carlo trials");
  compare->add_option("--seed", cf.seed, "Monte Carlo seed");
  compare->add_option("--level", cf.level, "confidence level");
  compare->add_option("--workers", cf.workers, "Monte Carlo threads (0 = all cores)");
  compare->add_option("--format", cf.format, "csv | json");

  auto* verify = app.add_subcommand("verify", "check bounds against exact or simulated truth");
  model_flags.attach(verify);
  verify->add_option("--variant", cf.variant, "first-principles | paper");
  verify->add_option("--eq2-form", cf.eq2, "printed | standard");
  verify->add_option("--t", cf.t, "fixed t (real or log:<ln t>)");
  verify->add_flag("--mc", cf.mc, "use Monte Carlo instead of the exact oracle");
  verify->add_option("--trials", cf.trials, "Monte Carlo trials");
  verify->add_option("--seed", cf.seed, "Monte Carlo seed");
  verify->add_option("--level", cf.level, "confidence level");
  verify->add_option("--workers", cf.workers, "Monte Carlo threads (0 = all cores)");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of P(Z=0)");
  model_flags.attach(mc);
  mc->add_option("--trials", cf.trials, "number of trials");
  mc->add_option("--seed", cf.seed, "seed");
  mc->add_option("--level", cf.level, "confidence level");
  mc->add_option("--workers", cf.workers, "threads (0 = all cores)");

  auto* lemma = app.add_subcommand("lemma-check", "check the MGF gap lemma on random laws");
  lemma->add_option("--m", lemma_m, "number of indicators (<= 10)");
  lemma->add_option("--t", lemma_t, "t > 0");
  lemma->add_option("--seed", cf.seed, "seed");
  lemma->add_option("--count", lemma_count, "number of random laws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(model_flags, summary_text, cf.variant, cf.eq2, cf.t, out);
    if (*compare) return cmd_compare(model_flags, cf, out);
    if (*verify) return cmd_verify(model_flags, cf, out);
    if (*mc) return cmd_mc(model_flags, cf, out, err);
    if (*lemma) return cmd_lemma_check(lemma_m, lemma_t, cf.seed, lemma_count, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("assocbound");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace assocbound::cli
