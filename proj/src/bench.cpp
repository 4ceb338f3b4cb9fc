#include "ftmd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "ftmd/cotree.hpp"
#include "ftmd/ftdp.hpp"

namespace ftmd {

namespace {

WeightMap random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(n);
  for (auto& x : w) x = static_cast<double>(rng() % 11);
  return WeightMap(std::move(w));
}

double time_once(const Cotree& tree, const WeightMap& w) {
  const auto start = std::chrono::steady_clock::now();
  const DpRun run = dp_run(tree, w);
  const ConnectedOptimum best = extract_connected_min(run);
  const auto stop = std::chrono::steady_clock::now();
  // Keeps the optimizer from discarding the work.
  if (best.weight < 0) throw std::logic_error("negative optimum");
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::vector<BenchRow> run_scaling_bench(unsigned min_exp, unsigned max_exp,
                                        std::uint64_t seed) {
  if (max_exp > 20 || min_exp > max_exp || min_exp == 0) {
    throw std::invalid_argument("bench exponents must satisfy 1 <= min <= max <= 20");
  }
  constexpr double kMinTotalSeconds = 0.02;
  constexpr int kMinReps = 3;
  std::vector<BenchRow> rows;
  for (unsigned e = min_exp; e <= max_exp; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const Cotree tree = random_cotree(n, seed * 1000003u + e);
    const WeightMap w = random_weights(n, seed ^ (std::uint64_t{e} << 32));
    double best = time_once(tree, w);
    double total = best;
    for (int rep = 1; rep < kMinReps || total < kMinTotalSeconds; ++rep) {
      const double t = time_once(tree, w);
      best = std::min(best, t);
      total += t;
    }
    rows.push_back({n, tree.node_count(), best});
  }
  return rows;
}

std::vector<double> doubling_ratios(std::span<const BenchRow> rows) {
  std::vector<double> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    out.push_back(rows[i].seconds / rows[i - 1].seconds);
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace ftmd
