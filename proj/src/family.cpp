#include "assocbound/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace assocbound {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

const std::vector<double>& means_list(const FamilySummary& s) {
  return std::get<std::vector<double>>(s.means);
}

}  // namespace

double FamilySummary::common_mean() const {
  if (!homogeneous()) throw std::invalid_argument("summary is heterogeneous");
  return std::get<double>(means);
}

double FamilySummary::log_independent_product() const {
  if (homogeneous()) {
    return static_cast<double>(count) * std::log1p(-std::get<double>(means));
  }
  double acc = 0.0;
  for (double p : means_list(*this)) acc += std::log1p(-p);
  return acc;
}

FamilySummary FamilySummary::homogeneous_from(std::uint64_t count, double p, double delta,
                                              double cov_sum) {
  FamilySummary s;
  s.count = count;
  s.means = p;
  s.lambda = static_cast<double>(count) * p;
  s.delta = delta;
  s.delta_bar = s.lambda + 2.0 * delta;
  s.cov_sum = cov_sum;
  s.max_mean = p;
  return s;
}

FamilySummary FamilySummary::heterogeneous_from(std::vector<double> means, double delta,
                                                double cov_sum) {
  FamilySummary s;
  s.count = means.size();
  s.lambda = std::accumulate(means.begin(), means.end(), 0.0);
  s.max_mean = means.empty() ? 0.0 : *std::max_element(means.begin(), means.end());
  s.means = std::move(means);
  s.delta = delta;
  s.delta_bar = s.lambda + 2.0 * delta;
  s.cov_sum = cov_sum;
  return s;
}

std::vector<std::string> validate(const FamilySummary& s) {
  std::vector<std::string> out;
  if (s.count == 0) out.push_back("count: must be positive");

  for (auto [name, v] : {std::pair{"lambda", s.lambda}, {"delta", s.delta},
                         {"delta_bar", s.delta_bar}, {"cov_sum", s.cov_sum},
                         {"max_mean", s.max_mean}}) {
    if (!std::isfinite(v)) out.push_back(std::string(name) + ": not finite (" + num(v) + ")");
  }

  double mean_sum = 0.0;
  double mean_max = 0.0;
  bool means_ok = true;
  if (s.homogeneous()) {
    const double p = std::get<double>(s.means);
    means_ok = p >= 0.0 && p <= 1.0;
    mean_sum = static_cast<double>(s.count) * p;
    mean_max = p;
  } else {
    const auto& ps = means_list(s);
    if (ps.size() != s.count) {
      out.push_back("means: list has " + std::to_string(ps.size()) + " entries but count is " +
                    std::to_string(s.count));
    }
    for (double p : ps) {
      means_ok = means_ok && p >= 0.0 && p <= 1.0;
      mean_sum += p;
      mean_max = std::max(mean_max, p);
    }
  }
  if (!means_ok) out.push_back("means: every mean must lie in [0, 1]");

  if (std::abs(s.lambda - mean_sum) > 1e-10 * std::max(std::abs(s.lambda), std::abs(mean_sum))) {
    out.push_back("lambda: " + num(s.lambda) + " differs from the sum of means " + num(mean_sum));
  }
  if (s.delta < 0.0) out.push_back("delta: must be nonnegative, got " + num(s.delta));
  if (s.delta_bar != s.lambda + 2.0 * s.delta) {
    out.push_back("delta_bar: " + num(s.delta_bar) + " != lambda + 2 delta = " +
                  num(s.lambda + 2.0 * s.delta));
  }
  if (s.cov_sum < 0.0) {
    out.push_back("cov_sum: nonnegativity (positive association) violated, got " +
                  num(s.cov_sum));
  }
  if (s.homogeneous() && s.cov_sum > s.delta * (1.0 + 1e-12)) {
    out.push_back("cov_sum: " + num(s.cov_sum) + " exceeds delta " + num(s.delta));
  }
  if (s.max_mean != mean_max) {
    out.push_back("max_mean: " + num(s.max_mean) + " != largest mean " + num(mean_max));
  }
  return out;
}

void to_json(nlohmann::json& j, const FamilySummary& s) {
  j = nlohmann::json::object();
  j["count"] = s.count;
  if (s.homogeneous()) {
    j["means"] = std::get<double>(s.means);
  } else {
    j["means"] = means_list(s);
  }
  j["lambda"] = s.lambda;
  j["delta"] = s.delta;
  j["delta_bar"] = s.delta_bar;
  j["cov_sum"] = s.cov_sum;
  j["max_mean"] = s.max_mean;
}

void from_json(const nlohmann::json& j, FamilySummary& s) {
  if (!j.is_object()) throw std::invalid_argument("summary: expected a JSON object");
  static const char* const kFields[] = {"count",     "means",   "lambda",  "delta",
                                        "delta_bar", "cov_sum", "max_mean"};
  for (const char* f : kFields) {
    if (!j.contains(f)) throw std::invalid_argument(std::string("summary: missing field ") + f);
  }
  for (const auto& item : j.items()) {
    if (std::find_if(std::begin(kFields), std::end(kFields),
                     [&](const char* f) { return item.key() == f; }) == std::end(kFields)) {
      throw std::invalid_argument("summary: unknown field " + item.key());
    }
  }
  try {
    const auto& count = j.at("count");
    if (!count.is_number_integer() || count.get<std::int64_t>() < 0) {
      throw std::invalid_argument("summary: count must be a nonnegative integer");
    }
    s.count = count.get<std::uint64_t>();
    const auto& means = j.at("means");
    if (means.is_number()) {
      s.means = means.get<double>();
    } else if (means.is_array()) {
      s.means = means.get<std::vector<double>>();
    } else {
      throw std::invalid_argument("summary: means must be a number or an array of numbers");
    }
    s.lambda = j.at("lambda").get<double>();
    s.delta = j.at("delta").get<double>();
    s.delta_bar = j.at("delta_bar").get<double>();
    s.cov_sum = j.at("cov_sum").get<double>();
    s.max_mean = j.at("max_mean").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("summary: ") + e.what());
  }
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::runs: return "runs";
    case ModelKind::triangles: return "triangles";
    case ModelKind::ustat: return "ustat";
    case ModelKind::hypergraph_cover: return "hypergraph-cover";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "runs") return ModelKind::runs;
  if (name == "triangles") return ModelKind::triangles;
  if (name == "ustat") return ModelKind::ustat;
  if (name == "hypergraph-cover" || name == "hypergraph") return ModelKind::hypergraph_cover;
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::vector<std::string> validate(const ModelSpec& m) {
  std::vector<std::string> out;
  auto check_p = [&] {
    if (!(m.p >= 0.0 && m.p <= 1.0)) out.push_back("p: must lie in [0, 1], got " + num(m.p));
  };
  switch (m.model) {
    case ModelKind::runs:
      if (m.k < 1) out.push_back("k: must be >= 1");
      if (m.linear_runs) {
        if (m.n < m.k) out.push_back("n: linear runs need n >= k");
      } else if (m.n < 2 * m.k) {
        out.push_back("n: circular runs need n >= 2k (n=" + std::to_string(m.n) +
                      ", k=" + std::to_string(m.k) + ")");
      }
      check_p();
      break;
    case ModelKind::triangles:
      if (m.n < 3) out.push_back("n: triangles need n >= 3");
      check_p();
      break;
    case ModelKind::ustat:
      if (m.k < 1 || m.k > m.n) out.push_back("k: ustat needs 1 <= k <= n");
      check_p();
      break;
    case ModelKind::hypergraph_cover:
      if (m.k < 2 || m.k > m.N) out.push_back("k: hypergraph-cover needs 2 <= k <= N");
      if (m.n_draws < 1) out.push_back("n_draws: must be >= 1");
      break;
  }
  return out;
}

std::vector<std::string> validate_for_sampling(const ModelSpec& m) {
  if (m.model == ModelKind::runs && !m.linear_runs) {
    std::vector<std::string> out;
    if (m.k < 1) out.push_back("k: must be >= 1");
    if (m.n < 1) out.push_back("n: must be >= 1");
    if (!(m.p >= 0.0 && m.p <= 1.0)) out.push_back("p: must lie in [0, 1], got " + num(m.p));
    return out;
  }
  auto out = validate(m);
  if (m.model == ModelKind::triangles && m.n > 64) out.push_back("n: triangle sampler supports n <= 64");
  return out;
}

void to_json(nlohmann::json& j, const ModelSpec& m) {
  nlohmann::json params = nlohmann::json::object();
  switch (m.model) {
    case ModelKind::runs:
      params = {{"n", m.n}, {"k", m.k}, {"p", m.p}};
      if (m.linear_runs) params["linear"] = true;
      break;
    case ModelKind::triangles: params = {{"n", m.n}, {"p", m.p}}; break;
    case ModelKind::ustat: params = {{"n", m.n}, {"k", m.k}, {"p", m.p}}; break;
    case ModelKind::hypergraph_cover:
      params = {{"N", m.N}, {"k", m.k}, {"n_draws", m.n_draws}};
      break;
  }
  j = {{"model", to_string(m.model)}, {"params", params}};
}

void from_json(const nlohmann::json& j, ModelSpec& m) {
  try {
    m = ModelSpec{};
    m.model = model_kind_from_string(j.at("model").get<std::string>());
    const auto& params = j.at("params");
    auto need_int = [&](const char* key) {
      if (!params.contains(key) || !params.at(key).is_number_integer()) {
        throw std::invalid_argument(std::string("model params: integer '") + key + "' required");
      }
      return params.at(key).get<std::int64_t>();
    };
    auto need_real = [&](const char* key) {
      if (!params.contains(key) || !params.at(key).is_number()) {
        throw std::invalid_argument(std::string("model params: number '") + key + "' required");
      }
      return params.at(key).get<double>();
    };
    switch (m.model) {
      case ModelKind::runs:
        m.n = need_int("n");
        m.k = need_int("k");
        m.p = need_real("p");
        m.linear_runs = params.value("linear", false);
        break;
      case ModelKind::triangles:
        m.n = need_int("n");
        m.p = need_real("p");
        break;
      case ModelKind::ustat:
        m.n = need_int("n");
        m.k = need_int("k");
        m.p = need_real("p");
        break;
      case ModelKind::hypergraph_cover:
        m.N = need_int("N");
        m.k = need_int("k");
        m.n_draws = need_int("n_draws");
        break;
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("model spec: ") + e.what());
  }
}

}  // namespace assocbound
