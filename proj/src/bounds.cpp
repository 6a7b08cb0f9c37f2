#include "assocbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace assocbound {

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::janson_basic: return "janson-basic";
    case BoundMethod::janson_ratio: return "janson-ratio";
    case BoundMethod::boppona_spencer: return "boppona-spencer";
    case BoundMethod::boutsikas_koutras: return "boutsikas-koutras";
    case BoundMethod::lv_general: return "lv-general";
    case BoundMethod::lv_iid: return "lv-iid";
    case BoundMethod::independent_lower: return "independent-lower";
  }
  return "?";
}

bool is_upper_bound(BoundMethod method) { return method != BoundMethod::independent_lower; }

BoundResult make_result(BoundMethod method, LogProb value, std::optional<double> log_t) {
  BoundResult r{method, value, std::nullopt, log_t, value.log_value() >= 0.0};
  if (log_t) r.t = std::exp(*log_t);
  return r;
}

TParam TParam::from_value(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("t must be positive and finite");
  }
  return TParam(std::log(t));
}

TParam TParam::from_log(double log_t) {
  if (std::isnan(log_t) || log_t == std::numeric_limits<double>::infinity()) {
    throw std::invalid_argument("log t must be finite");
  }
  if (log_t == kNegInf) throw std::invalid_argument("t must be positive");
  return TParam(log_t);
}

double TParam::value() const { return std::exp(log_t_); }

BoundResult janson_basic(const FamilySummary& s) {
  return make_result(BoundMethod::janson_basic, LogProb::from_log(-s.lambda + s.delta));
}

BoundResult janson_ratio(const FamilySummary& s, Eq2Form form) {
  if (!(s.delta_bar > 0.0)) {
    throw std::invalid_argument("janson-ratio: delta_bar must be positive (lambda = 0)");
  }
  const double exponent = form == Eq2Form::printed ? -s.lambda / (s.delta_bar * s.delta_bar)
                                                   : -s.lambda * s.lambda / s.delta_bar;
  return make_result(BoundMethod::janson_ratio, LogProb::from_log(exponent));
}

BoundResult boppona_spencer(const FamilySummary& s) {
  if (!(s.max_mean < 1.0)) {
    throw std::invalid_argument("boppona-spencer: max mean must be < 1");
  }
  const double v = s.delta / (1.0 - s.max_mean) + s.log_independent_product();
  return make_result(BoundMethod::boppona_spencer, LogProb::from_log(v));
}

namespace {

void require_nonnegative_cov(const FamilySummary& s, const char* who) {
  if (s.cov_sum < 0.0) {
    throw std::invalid_argument(std::string(who) +
                                ": cov_sum < 0, indicators are not positively associated");
  }
}

// ln(t^2 cov_sum)
double log_cov_term(const FamilySummary& s, TParam t) {
  if (s.cov_sum == 0.0) return kNegInf;
  return 2.0 * t.log_t() + std::log(s.cov_sum);
}

}  // namespace

BoundResult boutsikas_koutras(const FamilySummary& s) {
  require_nonnegative_cov(s, "boutsikas-koutras");
  const double cov = s.cov_sum == 0.0 ? kNegInf : std::log(s.cov_sum);
  return make_result(BoundMethod::boutsikas_koutras,
                     LogProb::from_log(log_add(s.log_independent_product(), cov)));
}

BoundResult lv_general(const FamilySummary& s, TParam t) {
  require_nonnegative_cov(s, "lv-general");
  const double shrink = std::expm1(-t.value());  // in (-1, 0]
  double product = 0.0;
  if (s.homogeneous()) {
    product = static_cast<double>(s.count) * std::log1p(s.common_mean() * shrink);
  } else {
    for (double p : std::get<std::vector<double>>(s.means)) product += std::log1p(p * shrink);
  }
  return make_result(BoundMethod::lv_general,
                     LogProb::from_log(log_add(product, log_cov_term(s, t))), t.log_t());
}

BoundResult lv_general(const FamilySummary& s, double t) {
  return lv_general(s, TParam::from_value(t));
}

BoundResult lv_iid(const FamilySummary& s, TParam t) {
  if (!s.homogeneous()) throw std::invalid_argument("lv-iid: summary is heterogeneous");
  const double p = s.common_mean();
  if (!(p < 1.0)) throw std::invalid_argument("lv-iid: p must be < 1");
  require_nonnegative_cov(s, "lv-iid");
  // The two logs nearly cancel for small t; extended precision keeps the sum
  // accurate when |I| is large.
  const long double m = static_cast<long double>(s.count);
  const long double lp = p;
  const long double product =
      m * std::log1p(-lp) + m * std::log1p(std::exp(-static_cast<long double>(t.value())) * lp /
                                            (1.0L - lp));
  return make_result(BoundMethod::lv_iid,
                     LogProb::from_log(log_add(static_cast<double>(product), log_cov_term(s, t))),
                     t.log_t());
}

BoundResult lv_iid(const FamilySummary& s, double t) { return lv_iid(s, TParam::from_value(t)); }

BoundResult lv_optimal(const FamilySummary& s, const MinimizeOptions& options) {
  require_nonnegative_cov(s, "lv-general");
  const auto best = minimize_scalar(
      [&s](double t) { return lv_general(s, TParam::from_value(t)).value; }, options);
  return lv_general(s, TParam::from_value(best.t_star));
}

BoundResult independent_lower(const FamilySummary& s) {
  return make_result(BoundMethod::independent_lower,
                     LogProb::from_log(s.log_independent_product()));
}

std::vector<BoundEntry> evaluate_all(const FamilySummary& s, const EvaluateOptions& options) {
  std::vector<BoundEntry> out;
  auto attempt = [&out](BoundMethod method, auto&& compute) {
    try {
      out.push_back({method, compute(), {}});
    } catch (const std::exception& e) {
      out.push_back({method, std::nullopt, e.what()});
    }
  };

  attempt(BoundMethod::janson_basic, [&] { return janson_basic(s); });
  attempt(BoundMethod::janson_ratio, [&] { return janson_ratio(s, options.eq2_form); });
  attempt(BoundMethod::boppona_spencer, [&] { return boppona_spencer(s); });
  attempt(BoundMethod::boutsikas_koutras, [&] { return boutsikas_koutras(s); });

  std::optional<TParam> t = options.t_override;
  attempt(BoundMethod::lv_general, [&] {
    if (t) return lv_general(s, *t);
    auto r = lv_optimal(s);
    t = TParam::from_log(*r.log_t);
    return r;
  });
  attempt(BoundMethod::lv_iid, [&] {
    if (!t) throw std::invalid_argument("lv-iid: no t available (lv-general skipped)");
    return lv_iid(s, *t);
  });
  attempt(BoundMethod::independent_lower, [&] { return independent_lower(s); });
  return out;
}

nlohmann::json json_linear(LogProb value) {
  const double v = value.linear();
  if (v < 1e-300) return nullptr;
  return v;
}

nlohmann::json json_log(LogProb value) {
  if (value.is_zero()) return "-inf";
  return value.log_value();
}

nlohmann::json to_json(const BoundEntry& e) {
  nlohmann::json j;
  j["method"] = to_string(e.method);
  if (e.result) {
    j["log_value"] = json_log(e.result->value);
    j["value"] = json_linear(e.result->value);
    j["t"] = e.result->t ? nlohmann::json(*e.result->t) : nlohmann::json(nullptr);
    if (e.result->log_t) j["log_t"] = *e.result->log_t;
    j["vacuous"] = e.result->vacuous;
    j["skipped_reason"] = nullptr;
  } else {
    j["log_value"] = nullptr;
    j["value"] = nullptr;
    j["t"] = nullptr;
    j["vacuous"] = nullptr;
    j["skipped_reason"] = e.skipped_reason;
  }
  return j;
}

nlohmann::json to_json(const std::vector<BoundEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return arr;
}

}  // namespace assocbound
