#include "footrank/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace footrank {

RankingVector power_iterate(const TransitionMatrix& Q,
                            const SolverConfig& cfg) {
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0))
    throw std::invalid_argument("damping must lie in (0,1)");
  if (!(cfg.tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
  if (cfg.damping != Q.damping)
    throw std::invalid_argument(
        "solver damping does not match the transition matrix");

  const std::size_t n = Q.size();
  RankingVector result;
  result.pi.assign(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);

  double residual = 0.0;
  int iter = 0;
  for (; iter < cfg.max_iterations; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = result.pi[i];
      const auto& row = Q.rows[i];
      for (std::size_t j = 0; j < n; ++j) next[j] += p * row[j];
    }
    residual = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      residual += std::fabs(next[j] - result.pi[j]);
    result.pi.swap(next);
    if (residual < cfg.tolerance) {
      ++iter;
      break;
    }
  }
  result.iterations_used = iter;
  result.residual = residual;
  if (residual >= cfg.tolerance)
    throw ConvergenceError(cfg.max_iterations, residual);

  double sum = std::accumulate(result.pi.begin(), result.pi.end(), 0.0);
  for (double& v : result.pi) v /= sum;
  return result;
}

Ranking make_ranking(const std::vector<std::string>& teams,
                     const std::vector<double>& pi) {
  if (teams.size() != pi.size())
    throw std::invalid_argument("team/score dimension mismatch");
  std::vector<std::size_t> order(teams.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pi[a] > pi[b]; });
  Ranking r;
  r.entries.reserve(teams.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    r.entries.push_back({static_cast<int>(k) + 1, teams[order[k]],
                         pi[order[k]]});
  return r;
}

Ranking rank_teams(const Dataset& dataset, int fn, const SolverConfig& cfg) {
  MatchupGraph g = build_graph(dataset, fn);
  TransitionMatrix q = to_transition(g, cfg.damping);
  RankingVector pi = power_iterate(q, cfg);
  return make_ranking(g.teams, pi.pi);
}

}  // namespace footrank
