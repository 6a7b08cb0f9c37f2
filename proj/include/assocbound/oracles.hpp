#pragma once

// Ground truth for P(Z = 0): exact per-model oracles, a parallel Monte Carlo
// driver and an exhaustive check of the moment-generating-function gap lemma.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "assocbound/family.hpp"
#include "assocbound/numerics.hpp"

namespace assocbound {

// P(no k consecutive ones) for n Bernoulli(p) bits, circular by default.
// Transfer matrix over trailing-run states, conditioned on the leading run.
LogProb runs_zero_exact(std::int64_t n, std::int64_t k, double p, bool linear = false);

// P(Binomial(n, p) <= k - 1).
LogProb ustat_zero_exact(std::int64_t n, std::int64_t k, double p);

// Exhaustive over all 2^{C(n,2)} graphs, 3 <= n <= 7.
LogProb triangle_free_exact(std::int64_t n, double p);

// Inclusion-exclusion over edge subsets of K_N, 2 <= k <= N <= 7.
LogProb cover_all_exact(std::int64_t N, std::int64_t k, std::int64_t n_draws);

// Exact P(Z = 0) when the spec is within oracle range; nullopt otherwise.
std::optional<LogProb> exact_zero_probability(const ModelSpec& spec);

struct EstimateWithCI {
  double estimate;
  ConfidenceInterval ci;
  std::uint64_t trials;
  std::uint64_t successes;
  std::uint64_t seed;
};

// Trials 0..trials-1 split into contiguous blocks across `workers` threads
// (0 = hardware concurrency). Integer aggregation makes the result independent
// of the worker count.
EstimateWithCI monte_carlo(const ModelSpec& spec, std::uint64_t trials, std::uint64_t seed,
                           double level, unsigned workers = 0);

// Explicit law of m <= 20 binary variables: probs[atom], bit i of atom is X_i.
struct JointLaw {
  int m = 0;
  std::vector<double> probs;
};

struct MgfGap {
  double gap;
  double bound;
  bool holds;
};

// |E e^{t sum X} - prod E e^{t X_i}| against t^2 e^{m t kappa} sum_{i<j} Cov.
MgfGap mgf_gap_check(const JointLaw& law, double t, double kappa = 1.0);

// Law of m indicators, each a random monotone DNF of 1..10 independent
// Bernoulli inputs with random success probabilities; associated by
// construction.
JointLaw random_monotone_law(int m, std::mt19937_64& rng);

}  // namespace assocbound
