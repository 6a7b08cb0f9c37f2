#pragma once

// Command-line surface. Exit codes: 0 success, 1 verification failure,
// 2 usage or parameter error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "assocbound/bounds.hpp"
#include "assocbound/family.hpp"
#include "assocbound/models.hpp"
#include "assocbound/oracles.hpp"

namespace assocbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 0xA55C1A7EULL;

// argv[0] is the program name.
int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "start:stop:count[:geom]"; throws std::invalid_argument on bad syntax or an
// empty grid.
struct Sweep {
  std::string param;
  std::vector<double> values;
};
Sweep parse_sweep(const std::string& text);

// "1.5" or "log:-1000".
TParam parse_t(const std::string& text);

struct ComparisonRow {
  ModelSpec spec;
  FormulaVariant variant = FormulaVariant::first_principles;
  FamilySummary summary;
  std::size_t summary_violations = 0;
  std::optional<double> truth;
  std::string truth_source;  // "oracle", "mc" or empty
  std::optional<double> truth_lower;
  std::optional<double> truth_upper;
  std::vector<BoundEntry> bounds;
  std::optional<BoundMethod> tightest;  // non-vacuous upper bound with minimal value
};

std::optional<BoundMethod> tightest_method(const std::vector<BoundEntry>& bounds);

const std::vector<std::string>& csv_header();
std::string csv_line(const ComparisonRow& row);
nlohmann::json row_json(const ComparisonRow& row);

}  // namespace assocbound::cli
