#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ftmd {

struct BenchRow {
  std::size_t n = 0;
  std::size_t nodes = 0;
  double seconds = 0.0;
};

/// Times dp_run plus root extraction (no recognition) on random cotrees with
/// n = 2^min_exp .. 2^max_exp leaves and integer weights in [0, 10]. Each
/// point is the fastest of several repetitions.
std::vector<BenchRow> run_scaling_bench(unsigned min_exp, unsigned max_exp,
                                        std::uint64_t seed);

/// time(2n) / time(n) for consecutive rows.
std::vector<double> doubling_ratios(std::span<const BenchRow> rows);

double median(std::vector<double> values);

}  // namespace ftmd
