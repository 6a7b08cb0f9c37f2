#include "assocbound/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/beta.hpp>

namespace assocbound {

LogProb LogProb::from_log(double log_value) {
  if (std::isnan(log_value)) {
    throw std::domain_error("LogProb: NaN log value");
  }
  return LogProb(log_value, 0);
}

LogProb LogProb::from_linear(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw std::domain_error("LogProb: linear value must be nonnegative, got " +
                            std::to_string(value));
  }
  return LogProb(value == 0.0 ? kNegInf : std::log(value), 0);
}

double LogProb::linear() const { return std::exp(log_value_); }

LogProb operator*(LogProb a, LogProb b) {
  if (a.is_zero() || b.is_zero()) return LogProb::zero();
  return LogProb::from_log(a.log_value() + b.log_value());
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

LogProb log_add(LogProb a, LogProb b) {
  return LogProb::from_log(log_add(a.log_value(), b.log_value()));
}

double log_binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return kNegInf;
  if (k == 0 || k == n) return 0.0;
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

std::uint64_t binom_exact(int n, int k) {
  if (n < 0 || n > 62) throw std::invalid_argument("binom_exact: n out of [0, 62]");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

bool usable(double log_value) {
  return !std::isnan(log_value) && log_value != std::numeric_limits<double>::infinity();
}

}  // namespace

ScalarMinimum minimize_scalar(const std::function<LogProb(double)>& f,
                              const MinimizeOptions& options) {
  const double t_min = options.t_min;
  const double t_max = options.t_max;
  const int grid_points = options.grid_points;
  if (!(t_min > 0.0) || !(t_min < t_max) || !std::isfinite(t_max)) {
    throw std::invalid_argument("minimize_scalar: need 0 < t_min < t_max < inf");
  }
  if (grid_points < 2) throw std::invalid_argument("minimize_scalar: grid_points < 2");
  if (!(options.refine_tolerance > 0.0)) {
    throw std::invalid_argument("minimize_scalar: refine_tolerance must be positive");
  }

  // f may throw domain_error from LogProb construction on NaN; treat that as
  // an unusable point.
  auto eval = [&f](double t) {
    try {
      return f(t).log_value();
    } catch (const std::domain_error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  const double log_lo = std::log(t_min);
  const double step = (std::log(t_max) - log_lo) / (grid_points - 1);
  std::vector<double> ts(grid_points);
  std::vector<double> vs(grid_points);
  int bad = 0;
  int best = -1;
  for (int i = 0; i < grid_points; ++i) {
    ts[i] = i == grid_points - 1 ? t_max : std::exp(log_lo + step * i);
    if (i == 0) ts[i] = t_min;
    vs[i] = eval(ts[i]);
    if (!usable(vs[i])) {
      ++bad;
      continue;
    }
    // Ties go to the larger t: a flat tail means the objective has converged.
    if (best < 0 || vs[i] <= vs[best]) best = i;
  }
  if (2 * bad > grid_points || best < 0) {
    throw std::domain_error("minimize_scalar: objective non-finite at " + std::to_string(bad) +
                            " of " + std::to_string(grid_points) + " grid points");
  }

  double best_t = ts[best];
  double best_v = vs[best];

  double a = ts[std::max(best - 1, 0)];
  double b = ts[std::min(best + 1, grid_points - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int iter = 0; iter < 500 && (b - a) > options.refine_tolerance * 0.5 * (a + b); ++iter) {
    const double c_key = usable(fc) ? fc : std::numeric_limits<double>::infinity();
    const double d_key = usable(fd) ? fd : std::numeric_limits<double>::infinity();
    if (c_key <= d_key) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
    if (usable(fc) && fc < best_v) {
      best_v = fc;
      best_t = c;
    }
    if (usable(fd) && fd < best_v) {
      best_v = fd;
      best_t = d;
    }
  }
  return {best_t, LogProb::from_log(best_v)};
}

ConfidenceInterval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double level) {
  if (trials == 0) throw std::invalid_argument("clopper_pearson: trials must be positive");
  if (successes > trials) throw std::invalid_argument("clopper_pearson: successes > trials");
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("clopper_pearson: level must lie in (0, 1)");
  }
  const double alpha = 1.0 - level;
  const double x = static_cast<double>(successes);
  const double n = static_cast<double>(trials);
  ConfidenceInterval ci{0.0, 1.0, level};
  if (successes > 0) {
    boost::math::beta_distribution<double> dist(x, n - x + 1.0);
    ci.lower = boost::math::quantile(dist, alpha / 2.0);
  }
  if (successes < trials) {
    boost::math::beta_distribution<double> dist(x + 1.0, n - x);
    ci.upper = boost::math::quantile(dist, 1.0 - alpha / 2.0);
  }
  return ci;
}

}  // namespace assocbound
