#pragma once

// The four example families: exact first-principles summaries, the formulas
// as printed alongside them, and per-trial samplers.

#include <cstdint>
#include <string>

#include "assocbound/family.hpp"
#include "assocbound/numerics.hpp"

namespace assocbound {

enum class FormulaVariant { first_principles, paper_as_printed };

std::string to_string(FormulaVariant v);
FormulaVariant formula_variant_from_string(const std::string& name);

// Circular k-runs over n Bernoulli(p) bits. paper_as_printed uses
// delta = (n/2) p^{k+1} (1-p^{k-1})/(1-p) and substitutes cov_sum = delta.
FamilySummary runs_summary(std::int64_t n, std::int64_t k, double p,
                           FormulaVariant v = FormulaVariant::first_principles);
// Linear k-runs: windows 1..n-k+1 over a string of n bits, by direct pair
// summation.
FamilySummary linear_runs_summary(std::int64_t n, std::int64_t k, double p);

// Triangles in G(n, p). paper_as_printed counts 3n edge-sharing partners.
FamilySummary triangles_summary(std::int64_t n, double p,
                                FormulaVariant v = FormulaVariant::first_principles);

// Complete U-statistic over k-subsets of n Bernoulli(p) variables.
FamilySummary ustat_summary(std::int64_t n, std::int64_t k, double p,
                            FormulaVariant v = FormulaVariant::first_principles);

// P(fixed edge of K_N uncovered after n_draws uniform k-subsets).
LogProb hypergraph_edge_prob(std::int64_t N, std::int64_t k, std::int64_t n_draws);

struct HypergraphJoint {
  LogProb share;     // both edges uncovered, edges share a vertex (N >= 3)
  LogProb disjoint;  // both edges uncovered, disjoint edges (N >= 4)
};
HypergraphJoint hypergraph_joint_probs(std::int64_t N, std::int64_t k, std::int64_t n_draws);

// Per-pair covariances q - p^2, computed as p^2 expm1(ln q - 2 ln p) so the
// difference keeps full relative precision.
struct HypergraphCovariances {
  double share;
  double disjoint;
};
HypergraphCovariances hypergraph_pair_covariances(std::int64_t N, std::int64_t k,
                                                  std::int64_t n_draws);

// Uncovered-edge indicators of K_N. Every pair is correlated.
FamilySummary hypergraph_summary(std::int64_t N, std::int64_t k, std::int64_t n_draws);

// Dispatches on spec.model; hypergraph has a single variant. Throws
// std::invalid_argument when the spec is outside its parameter region.
FamilySummary summary_for(const ModelSpec& spec,
                          FormulaVariant v = FormulaVariant::first_principles);

// One realization of the model's randomness; true iff Z = 0 (for
// hypergraph-cover: every edge of K_N is covered). Deterministic in
// (seed, trial_index).
bool sample_is_zero(const ModelSpec& spec, std::uint64_t seed, std::uint64_t trial_index);

}  // namespace assocbound
