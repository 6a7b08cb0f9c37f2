#include <array>
#include <stdexcept>
#include <vector>

#include "assocbound/models.hpp"
#include "assocbound/rng.hpp"

namespace assocbound {

namespace {

bool runs_zero(const ModelSpec& s, TrialRng& rng) {
  const auto n = static_cast<std::size_t>(s.n);
  const auto k = static_cast<std::size_t>(s.k);
  std::vector<unsigned char> bits(n);
  for (auto& b : bits) b = rng.bernoulli(s.p);
  // Circular strings are scanned twice around so runs crossing the seam count.
  const std::size_t span = s.linear_runs ? n : n + k - 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < span; ++i) {
    run = bits[i % n] ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

bool ustat_zero(const ModelSpec& s, TrialRng& rng) {
  std::int64_t ones = 0;
  for (std::int64_t i = 0; i < s.n; ++i) {
    if (rng.bernoulli(s.p) && ++ones >= s.k) return false;
  }
  return true;
}

bool triangles_zero(const ModelSpec& s, TrialRng& rng) {
  if (s.n > 64) throw std::invalid_argument("triangle sampler supports n <= 64");
  const int n = static_cast<int>(s.n);
  std::array<std::uint64_t, 64> adj{};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(s.p)) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    std::uint64_t higher = adj[i] >> 1 >> i;
    for (int j = i + 1; higher != 0; ++j, higher >>= 1) {
      if ((higher & 1) && (adj[i] & adj[j])) return false;
    }
  }
  return true;
}

bool hypergraph_zero(const ModelSpec& s, TrialRng& rng) {
  const auto N = static_cast<std::uint64_t>(s.N);
  const auto k = static_cast<std::uint64_t>(s.k);
  const std::uint64_t edges = N * (N - 1) / 2;
  std::vector<std::uint64_t> covered((edges + 63) / 64, 0);
  std::uint64_t covered_count = 0;
  std::vector<std::uint64_t> chosen;
  std::vector<unsigned char> in_set(N, 0);
  chosen.reserve(k);
  for (std::int64_t draw = 0; draw < s.n_draws; ++draw) {
    // Floyd's sampling of a uniform k-subset.
    chosen.clear();
    for (std::uint64_t j = N - k; j < N; ++j) {
      const std::uint64_t t = rng.below(j + 1);
      const std::uint64_t pick = in_set[t] ? j : t;
      in_set[pick] = 1;
      chosen.push_back(pick);
    }
    for (std::size_t a = 0; a < chosen.size(); ++a) {
      for (std::size_t b = a + 1; b < chosen.size(); ++b) {
        std::uint64_t u = chosen[a], v = chosen[b];
        if (u > v) std::swap(u, v);
        const std::uint64_t e = u * N - u * (u + 1) / 2 + (v - u - 1);
        const std::uint64_t mask = std::uint64_t{1} << (e % 64);
        if (!(covered[e / 64] & mask)) {
          covered[e / 64] |= mask;
          ++covered_count;
        }
      }
    }
    for (auto c : chosen) in_set[c] = 0;
    if (covered_count == edges) return true;
  }
  return false;
}

}  // namespace

bool sample_is_zero(const ModelSpec& spec, std::uint64_t seed, std::uint64_t trial_index) {
  TrialRng rng(seed, trial_index);
  switch (spec.model) {
    case ModelKind::runs: return runs_zero(spec, rng);
    case ModelKind::ustat: return ustat_zero(spec, rng);
    case ModelKind::triangles: return triangles_zero(spec, rng);
    case ModelKind::hypergraph_cover: return hypergraph_zero(spec, rng);
  }
  return false;
}

}  // namespace assocbound
