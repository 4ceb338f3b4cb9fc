#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ftmd::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotCograph = 2,
  kCheckFailed = 3,
  kVerifyFailed = 4,
};

struct SolveOptions {
  std::filesystem::path graph;
  std::optional<std::filesystem::path> weights;
  bool verify = false;
  bool oracle = false;
  bool cotree = false;
};

enum class CheckMode { Resolving, FaultTolerant, TwoNeighbourhood };

struct CheckOptions {
  std::filesystem::path graph;
  std::vector<std::uint64_t> set;
  CheckMode mode = CheckMode::FaultTolerant;
};

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(std::size_t n, std::uint64_t seed, std::ostream& out,
            std::ostream& err);
int cmd_bench(unsigned max_exp, std::uint64_t seed, std::ostream& out,
              std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftmd::cli
