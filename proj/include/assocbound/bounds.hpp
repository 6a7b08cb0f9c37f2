#pragma once

// Upper bounds on P(X = 0) for sums of positively associated indicators, and
// the independent-product lower bound. Everything is evaluated in log domain;
// bounds above 1 are returned as-is and flagged vacuous.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "assocbound/family.hpp"
#include "assocbound/numerics.hpp"

namespace assocbound {

enum class BoundMethod {
  janson_basic,
  janson_ratio,
  boppona_spencer,
  boutsikas_koutras,
  lv_general,
  lv_iid,
  independent_lower,
};

std::string to_string(BoundMethod method);
bool is_upper_bound(BoundMethod method);

struct BoundResult {
  BoundMethod method;
  LogProb value;
  std::optional<double> t;       // log-domain-free t, present for lv-* methods
  std::optional<double> log_t;   // ln t; kept separately so t = e^{-1000} survives
  bool vacuous = false;

  double linear() const { return value.linear(); }
};

BoundResult make_result(BoundMethod method, LogProb value,
                        std::optional<double> log_t = std::nullopt);

// Free parameter of the new bound. Stored as ln t so that values like
// t = e^{-N^3} are representable.
class TParam {
 public:
  static TParam from_value(double t);
  static TParam from_log(double log_t);
  double log_t() const { return log_t_; }
  double value() const;  // may underflow to 0 for very negative log_t

 private:
  explicit TParam(double log_t) : log_t_(log_t) {}
  double log_t_;
};

enum class Eq2Form { printed, standard };

// exp(-lambda + delta).
BoundResult janson_basic(const FamilySummary& s);
// printed: exp(-lambda / dbar^2); standard: exp(-lambda^2 / dbar).
BoundResult janson_ratio(const FamilySummary& s, Eq2Form form = Eq2Form::printed);
// exp(delta / (1 - max mean)) * prod (1 - p_i). Requires max_mean < 1.
BoundResult boppona_spencer(const FamilySummary& s);
// prod (1 - p_i) + cov_sum. Requires cov_sum >= 0.
BoundResult boutsikas_koutras(const FamilySummary& s);

// e^{-t|I|} prod E[e^{t(1-X_i)}] + t^2 cov_sum, with the product term
// evaluated per indicator as log1p(p_i * expm1(-t)).
BoundResult lv_general(const FamilySummary& s, TParam t);
BoundResult lv_general(const FamilySummary& s, double t);
// (1-p)^{|I|} (1 + e^{-t} p/(1-p))^{|I|} + t^2 cov_sum; homogeneous, p < 1.
BoundResult lv_iid(const FamilySummary& s, TParam t);
BoundResult lv_iid(const FamilySummary& s, double t);
// lv_general minimized over t on the default log grid plus refinement.
BoundResult lv_optimal(const FamilySummary& s, const MinimizeOptions& options = {});

// prod (1 - p_i); a lower bound on P(X = 0) under positive association.
BoundResult independent_lower(const FamilySummary& s);

struct BoundEntry {
  BoundMethod method;
  std::optional<BoundResult> result;
  std::string skipped_reason;  // non-empty iff result is absent
};

struct EvaluateOptions {
  Eq2Form eq2_form = Eq2Form::printed;
  std::optional<TParam> t_override;  // replaces the optimized t for lv-*
};

// Every bound in fixed order; inapplicable ones carry a skip reason.
std::vector<BoundEntry> evaluate_all(const FamilySummary& s, const EvaluateOptions& options = {});

// Linear value, or null when below 1e-300.
nlohmann::json json_linear(LogProb value);
nlohmann::json json_log(LogProb value);
nlohmann::json to_json(const BoundEntry& entry);
nlohmann::json to_json(const std::vector<BoundEntry>& entries);

}  // namespace assocbound
