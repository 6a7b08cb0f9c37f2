#pragma once

// Numerical substrate: log-domain probabilities, binomial coefficients,
// scalar minimization over a positive parameter and exact binomial
// confidence intervals.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace assocbound {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln of a nonnegative quantity. Bounds may exceed 1, so log_value may be
// positive. -inf encodes exactly zero; NaN is never stored.
class LogProb {
 public:
  constexpr LogProb() = default;

  static LogProb from_log(double log_value);
  static LogProb from_linear(double value);
  static constexpr LogProb zero() { return LogProb(kNegInf, 0); }
  static constexpr LogProb one() { return LogProb(0.0, 0); }

  double log_value() const { return log_value_; }
  double linear() const;
  bool is_zero() const { return log_value_ == kNegInf; }

  friend bool operator==(const LogProb&, const LogProb&) = default;
  friend auto operator<=>(const LogProb& a, const LogProb& b) {
    return a.log_value_ <=> b.log_value_;
  }

 private:
  constexpr LogProb(double v, int) : log_value_(v) {}
  double log_value_ = kNegInf;
};

LogProb operator*(LogProb a, LogProb b);

// ln(e^a + e^b) without overflow or underflow.
LogProb log_add(LogProb a, LogProb b);
double log_add(double a, double b);

// ln C(n, k); -inf when k < 0 or k > n. Uses log-gamma.
double log_binom(std::int64_t n, std::int64_t k);

// Exact C(n, k) for n <= 62; the cross-check path for log_binom.
std::uint64_t binom_exact(int n, int k);

struct ScalarMinimum {
  double t_star;
  LogProb f_star;
};

struct MinimizeOptions {
  double t_min = 1e-12;
  double t_max = 50.0;
  int grid_points = 200;
  double refine_tolerance = 1e-10;
};

// Log-spaced grid search over [t_min, t_max] followed by golden-section
// refinement inside the best bracketing triple. The returned value never
// exceeds the best grid value. Throws std::invalid_argument on a bad range
// and std::domain_error when f is NaN or +inf on more than half the grid.
ScalarMinimum minimize_scalar(const std::function<LogProb(double)>& f,
                              const MinimizeOptions& options = {});

struct ConfidenceInterval {
  double lower;
  double upper;
  double level;
};

// Exact Clopper-Pearson interval by Beta-quantile inversion.
ConfidenceInterval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                                   double level);

}  // namespace assocbound
