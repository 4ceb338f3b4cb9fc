#include "ftmd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>

#include "ftmd/bench.hpp"
#include "ftmd/cotree.hpp"
#include "ftmd/ftdp.hpp"
#include "ftmd/io.hpp"
#include "ftmd/oracle.hpp"
#include "ftmd/resolving.hpp"

namespace ftmd::cli {

namespace {

void print_set(std::ostream& out, const VertexSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << ' ';
    out << set[i];
  }
  out << '\n';
}

// Runs `body`, mapping library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const NotCographError& e) {
    err << "error: " << e.what() << '\n';
    return kNotCograph;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = read_edge_list(opts.graph);
    const WeightMap w = opts.weights ? read_weights(*opts.weights, g.vertex_count())
                                     : WeightMap::uniform(g.vertex_count());
    const Solution sol = solve(g, w);
    out << format_weight(sol.weight) << '\n';
    print_set(out, sol.set);
    if (opts.cotree) out << "cotree " << to_sexpr(build_cotree(g)) << '\n';

    int code = kOk;
    if (opts.verify) {
      if (auto pair = find_fault_tolerance_violation(g, sol.set)) {
        out << "verify FAILED: " << pair->u << ' ' << pair->v << '\n';
        code = kVerifyFailed;
      } else {
        out << "verify ok\n";
      }
    }
    if (opts.oracle) {
      if (g.vertex_count() > kOracleMaxVertices) {
        err << "note: oracle skipped (n > " << kOracleMaxVertices << ")\n";
      } else {
        const OracleResult o = oracle_min_ft(g, w);
        const bool same = o.weight == sol.weight;
        out << "oracle " << format_weight(o.weight) << (same ? " ok" : " MISMATCH")
            << '\n';
        if (!same) code = kVerifyFailed;
      }
    }
    return code;
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = read_edge_list(opts.graph);
    VertexSet set;
    for (std::uint64_t v : opts.set) {
      if (v >= g.vertex_count()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range (n = " +
                         std::to_string(g.vertex_count()) + ")");
      }
      set.push_back(static_cast<VertexId>(v));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());

    std::optional<VertexPair> violation;
    switch (opts.mode) {
      case CheckMode::Resolving:
        violation = find_unresolved_pair(g, set);
        break;
      case CheckMode::FaultTolerant:
        violation = find_fault_tolerance_violation(g, set);
        break;
      case CheckMode::TwoNeighbourhood:
        violation = find_2nr_violation(g, set);
        break;
    }
    if (violation) {
      out << "NO: " << violation->u << ' ' << violation->v << '\n';
      return static_cast<int>(kCheckFailed);
    }
    out << "YES\n";
    return static_cast<int>(kOk);
  });
}

int cmd_gen(std::size_t n, std::uint64_t seed, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const Cotree t = random_cotree(n, seed);
    write_edge_list(out, realize(t));
    out << "# cotree " << to_sexpr(t) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_bench(unsigned max_exp, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const unsigned min_exp = std::min(10u, max_exp);
    const auto rows = run_scaling_bench(min_exp, max_exp, seed);
    out << "n nodes elapsed_ms\n";
    char buf[64];
    for (const auto& row : rows) {
      std::snprintf(buf, sizeof buf, "%.3f", row.seconds * 1e3);
      out << row.n << ' ' << row.nodes << ' ' << buf << '\n';
    }
    if (rows.size() >= 2) {
      std::snprintf(buf, sizeof buf, "%.3f", median(doubling_ratios(rows)));
      out << "# median doubling ratio " << buf << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-weight fault-tolerant resolving sets of cographs"};
  app.name("ftmd");
  app.require_subcommand(1);

  SolveOptions solve_opts;
  std::string weights_path;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a cograph given as an edge list");
  solve_cmd->add_option("graph", solve_opts.graph, "Edge-list file")->required();
  solve_cmd->add_option("-w,--weights", weights_path, "Weight file (default: all 1)");
  solve_cmd->add_flag("--verify", solve_opts.verify,
                      "Re-check the set for fault tolerance");
  solve_cmd->add_flag("--oracle", solve_opts.oracle,
                      "Cross-check the weight by exhaustive search (n <= 20)");
  solve_cmd->add_flag("--cotree", solve_opts.cotree, "Also print the cotree");

  CheckOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Test a vertex set against a property");
  check_cmd->add_option("graph", check_opts.graph, "Edge-list file")->required();
  check_cmd->add_option("vertices", check_opts.set, "Vertex ids of the set");
  const std::map<std::string, CheckMode> modes{
      {"resolving", CheckMode::Resolving},
      {"ft", CheckMode::FaultTolerant},
      {"2nr", CheckMode::TwoNeighbourhood}};
  check_cmd->add_option("-m,--mode", check_opts.mode, "resolving | ft | 2nr")
      ->required()
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a random cograph and its cotree");
  gen_cmd->add_option("n", gen_n, "Vertex count")->required();
  gen_cmd->add_option("seed", gen_seed, "Random seed")->required();

  unsigned bench_k = 17;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the DP for n = 2^10 .. 2^k");
  bench_cmd->add_option("k", bench_k, "Largest exponent (<= 20)")
      ->check(CLI::Range(1u, 20u));
  bench_cmd->add_option("seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kInputError);
  }

  if (*solve_cmd) {
    if (!weights_path.empty()) solve_opts.weights = weights_path;
    return cmd_solve(solve_opts, out, err);
  }
  if (*check_cmd) return cmd_check(check_opts, out, err);
  if (*gen_cmd) return cmd_gen(gen_n, gen_seed, out, err);
  return cmd_bench(bench_k, bench_seed, out, err);
}

}  // namespace ftmd::cli
