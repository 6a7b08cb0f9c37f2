#include "assocbound/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace assocbound {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// ln(p^j (1-p)^{m-j}) with the 0 * ln 0 = 0 convention.
double log_bernoulli_weight(std::int64_t j, std::int64_t m, double p) {
  const double ones = j == 0 ? 0.0 : static_cast<double>(j) * std::log(p);
  const double zeros = m - j == 0 ? 0.0 : static_cast<double>(m - j) * std::log1p(-p);
  return ones + zeros;
}

// Advances the trailing-run distribution by `steps` bits. Entries of `v` are
// rescaled to max 1 after every step; the scale is accumulated in log_scale.
void advance_runs(std::vector<double>& v, std::int64_t steps, double p, double& log_scale) {
  const std::size_t k = v.size();
  std::vector<double> next(k);
  for (std::int64_t s = 0; s < steps; ++s) {
    double total = 0.0;
    for (double x : v) total += x;
    std::fill(next.begin(), next.end(), 0.0);
    next[0] = total * (1.0 - p);
    for (std::size_t r = 0; r + 1 < k; ++r) next[r + 1] = v[r] * p;
    v.swap(next);
    const double hi = *std::max_element(v.begin(), v.end());
    if (hi == 0.0) {
      log_scale = kNegInf;
      return;
    }
    for (double& x : v) x /= hi;
    log_scale += std::log(hi);
  }
}

}  // namespace

LogProb runs_zero_exact(std::int64_t n, std::int64_t k, double p, bool linear) {
  require(n >= 1 && k >= 1, "runs oracle needs n >= 1 and k >= 1");
  require(p >= 0.0 && p <= 1.0, "p: must lie in [0, 1]");
  if (linear && n < k) return LogProb::one();
  if (p == 0.0) return LogProb::one();

  const auto states = static_cast<std::size_t>(k);
  if (linear) {
    std::vector<double> v(states, 0.0);
    v[0] = 1.0;
    double log_scale = 0.0;
    advance_runs(v, n, p, log_scale);
    if (log_scale == kNegInf) return LogProb::zero();
    double total = 0.0;
    for (double x : v) total += x;
    return LogProb::from_log(log_scale + std::log(total));
  }

  // Circular: the string has a first zero at position a, preceded by a ones
  // (a < k). The remaining n-a-1 bits run linearly from state 0 and their
  // trailing ones b must satisfy a + b < k. The all-ones string always has a run.
  if (p == 1.0) return LogProb::zero();
  double acc = kNegInf;
  for (std::int64_t a = 0; a < k && a < n; ++a) {
    std::vector<double> v(states, 0.0);
    v[0] = 1.0;
    double log_scale = 0.0;
    advance_runs(v, n - a - 1, p, log_scale);
    if (log_scale == kNegInf) continue;
    double tail = 0.0;
    for (std::int64_t b = 0; a + b < k; ++b) tail += v[static_cast<std::size_t>(b)];
    if (tail == 0.0) continue;
    const double head = static_cast<double>(a) * std::log(p) + std::log1p(-p);
    acc = log_add(acc, head + log_scale + std::log(tail));
  }
  return LogProb::from_log(acc);
}

LogProb ustat_zero_exact(std::int64_t n, std::int64_t k, double p) {
  require(k >= 1 && k <= n, "ustat oracle needs 1 <= k <= n");
  require(p >= 0.0 && p <= 1.0, "p: must lie in [0, 1]");
  if (p == 1.0) return LogProb::zero();
  if (p == 0.0) return LogProb::one();
  double acc = kNegInf;
  for (std::int64_t j = 0; j < k; ++j) {
    acc = log_add(acc, log_binom(n, j) + log_bernoulli_weight(j, n, p));
  }
  return LogProb::from_log(acc);
}

LogProb triangle_free_exact(std::int64_t n, double p) {
  require(n >= 3 && n <= 7, "triangle_free_exact: n must lie in [3, 7]; use Monte Carlo beyond");
  require(p >= 0.0 && p <= 1.0, "p: must lie in [0, 1]");
  const int v = static_cast<int>(n);
  int index[7][7] = {};
  int edges = 0;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) index[i][j] = edges++;
  std::vector<std::uint32_t> triangles;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = b + 1; c < v; ++c)
        triangles.push_back((1u << index[a][b]) | (1u << index[a][c]) | (1u << index[b][c]));

  std::vector<std::uint64_t> by_size(edges + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
    bool free = true;
    for (std::uint32_t t : triangles) {
      if ((mask & t) == t) {
        free = false;
        break;
      }
    }
    if (free) ++by_size[std::popcount(mask)];
  }

  if (p == 0.0) return LogProb::one();  // only the empty graph has weight
  double acc = kNegInf;
  for (int j = 0; j <= edges; ++j) {
    if (by_size[j] == 0) continue;
    if (p == 1.0 && j != edges) continue;
    acc = log_add(acc, std::log(static_cast<double>(by_size[j])) +
                           log_bernoulli_weight(j, edges, p));
  }
  return LogProb::from_log(acc);
}

LogProb cover_all_exact(std::int64_t N, std::int64_t k, std::int64_t n_draws) {
  require(k >= 2 && k <= N && N <= 7, "cover_all_exact: need 2 <= k <= N <= 7");
  require(n_draws >= 0, "n_draws: must be nonnegative");
  const int nv = static_cast<int>(N);
  const int edges = nv * (nv - 1) / 2;
  // Each draw covers C(k, 2) edges.
  if (n_draws * (k * (k - 1) / 2) < edges) return LogProb::zero();

  int index[7][7] = {};
  int e = 0;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) index[i][j] = e++;
  std::vector<std::uint32_t> draws;  // edge mask of each k-subset
  for (std::uint32_t set = 0; set < (1u << nv); ++set) {
    if (std::popcount(set) != k) continue;
    std::uint32_t mask = 0;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        if ((set >> i & 1) && (set >> j & 1)) mask |= 1u << index[i][j];
    draws.push_back(mask);
  }
  const auto total = static_cast<int>(draws.size());

  // net[c] = sum over edge sets S whose avoiding-draw count is c of (-1)^{|S|}.
  std::vector<std::int64_t> net(total + 1, 0);
  for (std::uint32_t s = 0; s < (1u << edges); ++s) {
    int avoiding = 0;
    for (std::uint32_t d : draws) avoiding += (d & s) == 0;
    net[avoiding] += (std::popcount(s) & 1) ? -1 : 1;
  }

  // Neumaier-compensated sum of net[c] (c / total)^n.
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (int c = 0; c <= total; ++c) {
    if (net[c] == 0) continue;
    const long double term =
        static_cast<long double>(net[c]) *
        std::pow(static_cast<long double>(c) / total, static_cast<long double>(n_draws));
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  const double value = std::clamp(static_cast<double>(sum + comp), 0.0, 1.0);
  return LogProb::from_linear(value);
}

std::optional<LogProb> exact_zero_probability(const ModelSpec& spec) {
  switch (spec.model) {
    case ModelKind::runs: return runs_zero_exact(spec.n, spec.k, spec.p, spec.linear_runs);
    case ModelKind::ustat: return ustat_zero_exact(spec.n, spec.k, spec.p);
    case ModelKind::triangles:
      if (spec.n > 7) return std::nullopt;
      return triangle_free_exact(spec.n, spec.p);
    case ModelKind::hypergraph_cover:
      if (spec.N > 7) return std::nullopt;
      return cover_all_exact(spec.N, spec.k, spec.n_draws);
  }
  return std::nullopt;
}

MgfGap mgf_gap_check(const JointLaw& law, double t, double kappa) {
  require(law.m >= 1 && law.m <= 20, "joint law: need 1 <= m <= 20 variables");
  require(law.probs.size() == (std::size_t{1} << law.m), "joint law: need 2^m atom probabilities");
  require(t > 0.0, "t must be positive");
  require(kappa >= 1.0, "kappa must bound the indicators (kappa >= 1)");
  long double mass = 0.0L;
  for (double q : law.probs) {
    require(q >= 0.0, "joint law: negative atom probability");
    mass += q;
  }
  require(std::fabs(static_cast<double>(mass) - 1.0) <= 1e-9, "joint law: probabilities do not sum to 1");

  const int m = law.m;
  std::vector<long double> marginal(m, 0.0L);
  std::vector<long double> pair(static_cast<std::size_t>(m) * m, 0.0L);
  long double mgf_sum = 0.0L;
  const long double et = std::exp(static_cast<long double>(t));
  std::vector<long double> et_pow(m + 1, 1.0L);
  for (int i = 1; i <= m; ++i) et_pow[i] = et_pow[i - 1] * et;
  for (std::uint32_t a = 0; a < law.probs.size(); ++a) {
    const long double q = law.probs[a];
    if (q == 0.0L) continue;
    mgf_sum += q * et_pow[std::popcount(a)];
    for (int i = 0; i < m; ++i) {
      if (!(a >> i & 1)) continue;
      marginal[i] += q;
      for (int j = i + 1; j < m; ++j)
        if (a >> j & 1) pair[i * m + j] += q;
    }
  }
  long double product = 1.0L;
  long double cov_sum = 0.0L;
  for (int i = 0; i < m; ++i) {
    product *= 1.0L - marginal[i] + marginal[i] * et;
    for (int j = i + 1; j < m; ++j) cov_sum += pair[i * m + j] - marginal[i] * marginal[j];
  }
  const long double gap = std::fabs(mgf_sum - product);
  const long double bound = static_cast<long double>(t) * t *
                            std::exp(static_cast<long double>(m) * t * kappa) * cov_sum;
  // Rounding in the two expectations scales with their magnitude.
  const long double slack = 1e-12L * std::max<long double>(1.0L, mgf_sum);
  return {static_cast<double>(gap), static_cast<double>(std::max(bound, 0.0L)),
          gap <= bound + slack};
}

JointLaw random_monotone_law(int m, std::mt19937_64& rng) {
  require(m >= 1 && m <= 20, "random_monotone_law: need 1 <= m <= 20");
  std::uniform_int_distribution<int> input_count(1, 10);
  std::uniform_real_distribution<double> success(0.05, 0.95);
  std::uniform_int_distribution<int> term_count(1, 3);
  std::bernoulli_distribution coin(0.5);

  const int b = input_count(rng);
  std::vector<double> q(b);
  for (double& x : q) x = success(rng);

  // Output i is an OR of AND-terms over the inputs (a monotone DNF).
  std::vector<std::vector<std::uint32_t>> terms(m);
  for (auto& dnf : terms) {
    const int count = term_count(rng);
    for (int c = 0; c < count; ++c) {
      std::uint32_t term = 0;
      for (int i = 0; i < b; ++i)
        if (coin(rng)) term |= 1u << i;
      if (term == 0) term = 1u << std::uniform_int_distribution<int>(0, b - 1)(rng);
      dnf.push_back(term);
    }
  }

  JointLaw law{m, std::vector<double>(std::size_t{1} << m, 0.0)};
  for (std::uint32_t x = 0; x < (1u << b); ++x) {
    double weight = 1.0;
    for (int i = 0; i < b; ++i) weight *= (x >> i & 1) ? q[i] : 1.0 - q[i];
    std::uint32_t atom = 0;
    for (int i = 0; i < m; ++i) {
      for (std::uint32_t term : terms[i]) {
        if ((x & term) == term) {
          atom |= 1u << i;
          break;
        }
      }
    }
    law.probs[atom] += weight;
  }
  return law;
}

}  // namespace assocbound
