#include "assocbound/models.hpp"

#include <cmath>
#include <stdexcept>

namespace assocbound {

std::string to_string(FormulaVariant v) {
  return v == FormulaVariant::first_principles ? "first-principles" : "paper-as-printed";
}

FormulaVariant formula_variant_from_string(const std::string& name) {
  if (name == "first-principles") return FormulaVariant::first_principles;
  if (name == "paper-as-printed" || name == "paper") return FormulaVariant::paper_as_printed;
  throw std::invalid_argument("unknown formula variant '" + name + "'");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_probability(double p) {
  require(p >= 0.0 && p <= 1.0, "p: must lie in [0, 1]");
}

// C(n, k) as an exactly representable count.
std::uint64_t checked_count(std::int64_t n, std::int64_t k) {
  const double lb = log_binom(n, k);
  require(lb < 53.0 * std::log(2.0), "family too large: C(n, k) exceeds 2^53");
  return static_cast<std::uint64_t>(std::llround(std::exp(lb)));
}

}  // namespace

FamilySummary runs_summary(std::int64_t n, std::int64_t k, double p, FormulaVariant v) {
  require(k >= 1, "k: must be >= 1");
  require(n >= 2 * k, "n: circular runs need n >= 2k");
  require_probability(p);
  const double nd = static_cast<double>(n);
  const double mean = std::pow(p, static_cast<double>(k));
  double delta = 0.0;
  double cov = 0.0;
  if (v == FormulaVariant::paper_as_printed) {
    // (n/2) sum_{j=1}^{k-1} p^{k+j} = (n/2) p^{k+1} (1 - p^{k-1}) / (1 - p), valid at p = 1 too.
    for (std::int64_t j = 1; j < k; ++j) delta += std::pow(p, static_cast<double>(k + j));
    delta *= nd / 2.0;
    cov = delta;
  } else {
    // n unordered pairs {i, i+d} per offset d = 1..k-1; farther windows are disjoint.
    const double mean_sq = mean * mean;
    for (std::int64_t d = 1; d < k; ++d) {
      const double joint = std::pow(p, static_cast<double>(k + d));
      delta += joint;
      cov += joint - mean_sq;
    }
    delta *= nd;
    cov *= nd;
  }
  return FamilySummary::homogeneous_from(static_cast<std::uint64_t>(n), mean, delta, cov);
}

FamilySummary linear_runs_summary(std::int64_t n, std::int64_t k, double p) {
  require(k >= 1, "k: must be >= 1");
  require(n >= k, "n: linear runs need n >= k");
  require_probability(p);
  const std::int64_t windows = n - k + 1;
  const double mean = std::pow(p, static_cast<double>(k));
  double delta = 0.0;
  double cov = 0.0;
  for (std::int64_t d = 1; d < k && d < windows; ++d) {
    const double pairs = static_cast<double>(windows - d);
    const double joint = std::pow(p, static_cast<double>(k + d));
    delta += pairs * joint;
    cov += pairs * (joint - mean * mean);
  }
  return FamilySummary::homogeneous_from(static_cast<std::uint64_t>(windows), mean, delta, cov);
}

FamilySummary triangles_summary(std::int64_t n, double p, FormulaVariant v) {
  require(n >= 3, "n: triangles need n >= 3");
  require_probability(p);
  const std::uint64_t count = checked_count(n, 3);
  const double half_count = 0.5 * static_cast<double>(count);
  const double p5 = std::pow(p, 5.0);
  double delta = 0.0;
  double cov = 0.0;
  if (v == FormulaVariant::paper_as_printed) {
    delta = half_count * 3.0 * static_cast<double>(n) * p5;
    cov = delta;
  } else {
    // Each triangle shares exactly one edge with 3(n-3) others; the rest are
    // edge-disjoint and hence independent.
    const double partners = 3.0 * static_cast<double>(n - 3);
    delta = half_count * partners * p5;
    cov = half_count * partners * (p5 - std::pow(p, 6.0));
  }
  return FamilySummary::homogeneous_from(count, p * p * p, delta, cov);
}

FamilySummary ustat_summary(std::int64_t n, std::int64_t k, double p, FormulaVariant v) {
  require(k >= 1 && k <= n, "k: ustat needs 1 <= k <= n");
  require_probability(p);
  const std::uint64_t count = checked_count(n, k);
  const double half_count = 0.5 * static_cast<double>(count);
  const double mean = std::pow(p, static_cast<double>(k));
  double delta = 0.0;
  double cov = 0.0;
  if (v == FormulaVariant::paper_as_printed) {
    for (std::int64_t j = 1; j < k; ++j) {
      delta += std::exp(log_binom(n - k, j)) * std::pow(p, static_cast<double>(k + j));
    }
    delta *= half_count;
    cov = delta;
  } else {
    // Partners sharing exactly m indices: C(k, m) C(n-k, k-m), joint p^{2k-m}.
    for (std::int64_t m = 1; m < k; ++m) {
      const double partners = std::exp(log_binom(k, m) + log_binom(n - k, k - m));
      const double joint = std::pow(p, static_cast<double>(2 * k - m));
      delta += partners * joint;
      cov += partners * joint * (1.0 - std::pow(p, static_cast<double>(m)));
    }
    delta *= half_count;
    cov *= half_count;
  }
  return FamilySummary::homogeneous_from(count, mean, delta, cov);
}

namespace {

void require_hypergraph(std::int64_t N, std::int64_t k, std::int64_t n_draws) {
  require(k >= 2 && k <= N, "k: hypergraph-cover needs 2 <= k <= N");
  require(n_draws >= 1, "n_draws: must be >= 1");
}

double binom_ratio(std::int64_t a, std::int64_t b, std::int64_t N, std::int64_t k) {
  if (b < 0 || b > a) return 0.0;
  if (N <= 62) {
    return static_cast<double>(binom_exact(static_cast<int>(a), static_cast<int>(b))) /
           static_cast<double>(binom_exact(static_cast<int>(N), static_cast<int>(k)));
  }
  const double lb = log_binom(a, b);
  return lb == kNegInf ? 0.0 : std::exp(lb - log_binom(N, k));
}

LogProb power(double base, std::int64_t n) {
  if (base <= 0.0) return LogProb::zero();
  return LogProb::from_log(static_cast<double>(n) * std::log(base));
}

// C(N-2, k-2) / C(N, k)
double cover_one(std::int64_t N, std::int64_t k) {
  return static_cast<double>(k) * static_cast<double>(k - 1) /
         (static_cast<double>(N) * static_cast<double>(N - 1));
}

}  // namespace

LogProb hypergraph_edge_prob(std::int64_t N, std::int64_t k, std::int64_t n_draws) {
  require_hypergraph(N, k, n_draws);
  const double r = cover_one(N, k);
  if (r >= 1.0) return LogProb::zero();
  return LogProb::from_log(static_cast<double>(n_draws) * std::log1p(-r));
}

HypergraphJoint hypergraph_joint_probs(std::int64_t N, std::int64_t k, std::int64_t n_draws) {
  require_hypergraph(N, k, n_draws);
  require(N >= 3, "N: vertex-sharing edge pairs need N >= 3");
  const double share = binom_ratio(N - 3, k, N, k) + 3.0 * binom_ratio(N - 3, k - 1, N, k) +
                       binom_ratio(N - 3, k - 2, N, k);
  HypergraphJoint out{power(share, n_draws), LogProb::zero()};
  // K_3 has no disjoint edge pairs; the value is unused there.
  if (N >= 4) {
    const double disjoint = binom_ratio(N - 4, k, N, k) +
                            4.0 * binom_ratio(N - 4, k - 1, N, k) +
                            4.0 * binom_ratio(N - 4, k - 2, N, k);
    out.disjoint = power(disjoint, n_draws);
  }
  return out;
}

HypergraphCovariances hypergraph_pair_covariances(std::int64_t N, std::int64_t k,
                                                  std::int64_t n_draws) {
  require_hypergraph(N, k, n_draws);
  const double r = cover_one(N, k);
  if (r >= 1.0) return {0.0, 0.0};
  const double nd = static_cast<double>(n_draws);
  const double Nd = static_cast<double>(N);
  const double kd = static_cast<double>(k);
  // Per draw: P(avoid both) = (1 - r)^2 + (c - r^2), where c is the chance
  // that one draw covers both edges.
  const double c_share = N >= 3 ? kd * (kd - 1) * (kd - 2) / (Nd * (Nd - 1) * (Nd - 2)) : 0.0;
  const double c_disjoint =
      N >= 4 ? kd * (kd - 1) * (kd - 2) * (kd - 3) / (Nd * (Nd - 1) * (Nd - 2) * (Nd - 3)) : 0.0;
  const double log_p = nd * std::log1p(-r);
  const double one_minus_r_sq = (1.0 - r) * (1.0 - r);
  auto cov = [&](double c) {
    const double x = (c - r * r) / one_minus_r_sq;
    if (x <= -1.0) return -std::exp(2.0 * log_p);
    return std::exp(2.0 * log_p) * std::expm1(nd * std::log1p(x));
  };
  return {cov(c_share), N >= 4 ? cov(c_disjoint) : 0.0};
}

FamilySummary hypergraph_summary(std::int64_t N, std::int64_t k, std::int64_t n_draws) {
  require_hypergraph(N, k, n_draws);
  const double Nd = static_cast<double>(N);
  const std::uint64_t count = static_cast<std::uint64_t>(N) * static_cast<std::uint64_t>(N - 1) / 2;
  const double p = hypergraph_edge_prob(N, k, n_draws).linear();
  double delta = 0.0;
  double cov = 0.0;
  if (N >= 3) {
    // Per edge: N-2 vertex-sharing and C(N-2, 2)/2 disjoint partners after
    // halving for unordered pairs.
    const double share_partners = Nd - 2.0;
    const double disjoint_partners = 0.5 * (Nd - 2.0) * (Nd - 3.0) / 2.0;
    const auto joint = hypergraph_joint_probs(N, k, n_draws);
    const auto covs = hypergraph_pair_covariances(N, k, n_draws);
    delta = share_partners * joint.share.linear() + disjoint_partners * joint.disjoint.linear();
    cov = share_partners * covs.share + disjoint_partners * covs.disjoint;
    delta *= static_cast<double>(count);
    cov *= static_cast<double>(count);
  }
  return FamilySummary::homogeneous_from(count, p, delta, cov);
}

FamilySummary summary_for(const ModelSpec& spec, FormulaVariant v) {
  const auto problems = validate(spec);
  if (!problems.empty()) throw std::invalid_argument(problems.front());
  switch (spec.model) {
    case ModelKind::runs:
      return spec.linear_runs ? linear_runs_summary(spec.n, spec.k, spec.p)
                              : runs_summary(spec.n, spec.k, spec.p, v);
    case ModelKind::triangles: return triangles_summary(spec.n, spec.p, v);
    case ModelKind::ustat: return ustat_summary(spec.n, spec.k, spec.p, v);
    case ModelKind::hypergraph_cover: return hypergraph_summary(spec.N, spec.k, spec.n_draws);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace assocbound
