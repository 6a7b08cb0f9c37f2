#pragma once

// Model-agnostic summary of an indicator family: exactly the quantities the
// bounds consume.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace assocbound {

// Either one common success probability or one per indicator.
using Means = std::variant<double, std::vector<double>>;

struct FamilySummary {
  std::uint64_t count = 0;
  Means means = 0.0;
  double lambda = 0.0;     // sum of means
  double delta = 0.0;      // half the sum of E[X_i X_j] over correlated ordered pairs
  double delta_bar = 0.0;  // lambda + 2 delta
  double cov_sum = 0.0;    // sum_{i<j} Cov(X_i, X_j)
  double max_mean = 0.0;

  bool homogeneous() const { return std::holds_alternative<double>(means); }
  // Common mean; throws std::invalid_argument for heterogeneous summaries.
  double common_mean() const;
  // sum_i ln(1 - p_i), the log of the independent product.
  double log_independent_product() const;

  // Fills lambda, delta_bar and max_mean from count, means and delta.
  static FamilySummary homogeneous_from(std::uint64_t count, double p, double delta,
                                        double cov_sum);
  static FamilySummary heterogeneous_from(std::vector<double> means, double delta,
                                          double cov_sum);
};

// One entry per violated invariant; empty iff the summary is consistent.
std::vector<std::string> validate(const FamilySummary& summary);

void to_json(nlohmann::json& j, const FamilySummary& s);
// Requires every field; throws std::invalid_argument naming the problem.
void from_json(const nlohmann::json& j, FamilySummary& s);

enum class ModelKind { runs, triangles, ustat, hypergraph_cover };

struct ModelSpec {
  ModelKind model = ModelKind::runs;
  std::int64_t n = 0;        // runs, triangles, ustat
  std::int64_t k = 0;        // runs, ustat, hypergraph-cover
  double p = 0.0;            // runs, triangles, ustat
  std::int64_t N = 0;        // hypergraph-cover
  std::int64_t n_draws = 0;  // hypergraph-cover
  bool linear_runs = false;  // runs only: no wraparound
};

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

// Parameter-region violations for a model spec; empty iff valid.
std::vector<std::string> validate(const ModelSpec& spec);
// Looser region accepted by the samplers and exact oracles: circular runs
// only need n >= 1 (windows may wrap more than once); triangles need n <= 64.
std::vector<std::string> validate_for_sampling(const ModelSpec& spec);

// {"model": ..., "params": {...}}
void to_json(nlohmann::json& j, const ModelSpec& spec);
void from_json(const nlohmann::json& j, ModelSpec& spec);

}  // namespace assocbound
