#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "assocbound/models.hpp"
#include "assocbound/oracles.hpp"

namespace assocbound {

EstimateWithCI monte_carlo(const ModelSpec& spec, std::uint64_t trials, std::uint64_t seed,
                           double level, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("monte_carlo: trials must be >= 1");
  const auto problems = validate_for_sampling(spec);
  if (!problems.empty()) throw std::invalid_argument(problems.front());

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  std::vector<std::uint64_t> successes(workers, 0);
  auto run_block = [&](unsigned w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    std::uint64_t local = 0;
    for (std::uint64_t i = begin; i < end; ++i) local += sample_is_zero(spec, seed, i);
    successes[w] = local;
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
    for (auto& th : pool) th.join();
  }

  std::uint64_t total = 0;
  for (auto s : successes) total += s;
  const auto ci = clopper_pearson(total, trials, level);
  return {static_cast<double>(total) / static_cast<double>(trials), ci, trials, total, seed};
}

}  // namespace assocbound
