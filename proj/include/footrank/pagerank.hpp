#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "footrank/dataset.hpp"
#include "footrank/graph.hpp"

namespace footrank {

struct SolverConfig {
  double damping = 0.05;
  double tolerance = 1e-12;  // L1 change per sweep
  int max_iterations = 10000;
};

// Stationary probabilities of the random walk, one per team.
struct RankingVector {
  std::vector<double> pi;
  int iterations_used = 0;
  double residual = 0.0;
};

struct RankingEntry {
  int position = 0;  // 1-based
  std::string team;
  double score = 0.0;
};

struct Ranking {
  std::vector<RankingEntry> entries;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int iterations, double residual)
      : std::runtime_error("power iteration did not converge after " +
                           std::to_string(iterations) +
                           " iterations, residual " +
                           std::to_string(residual)),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Left power iteration pi <- pi*Q from the uniform vector until the L1
// change drops below cfg.tolerance, renormalized once at the end.
// cfg.damping must match Q.damping. Throws ConvergenceError if the budget
// runs out.
RankingVector power_iterate(const TransitionMatrix& Q,
                            const SolverConfig& cfg);

// Sorts teams by score descending, equal scores by roster index.
Ranking make_ranking(const std::vector<std::string>& teams,
                     const std::vector<double>& pi);

// Full pipeline: build_graph -> to_transition -> power_iterate -> sort.
Ranking rank_teams(const Dataset& dataset, int fn, const SolverConfig& cfg);

}  // namespace footrank
