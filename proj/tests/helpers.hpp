#pragma once

// Test-only oracles and generators. These stay independent of the solver
// and inversion-count paths they are used to check.

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "footrank/dataset.hpp"
#include "footrank/graph.hpp"

namespace footrank::testing {

// Solves pi = pi * Q with sum(pi) = 1 directly: Gaussian elimination on
// (Q^T - I) pi = 0 with the last equation replaced by the sum constraint.
inline std::vector<double> stationary_solve(const TransitionMatrix& Q) {
  const std::size_t n = Q.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = Q.rows[j][i] - (i == j ? 1.0 : 0.0);
  for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = 1.0;
  m[n - 1][n] = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    if (std::fabs(m[col][col]) < 1e-14)
      throw std::runtime_error("singular system in stationary_solve");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<double> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = m[i][n] / m[i][i];
  return pi;
}

// O(m^2) pairwise inversion count, the definition the merge-count must match.
inline long brute_inversions(const std::vector<int>& values) {
  long inv = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inv;
  return inv;
}

// Random valid dataset over team_count teams; every pair present with
// probability pair_prob, at least one record guaranteed.
inline Dataset random_dataset(std::mt19937& rng, int team_count,
                              double pair_prob = 0.7) {
  Dataset ds;
  for (int i = 0; i < team_count; ++i)
    ds.teams.push_back("T" + std::to_string(i));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> games_dist(1, 6);
  std::uniform_int_distribution<long> goals_dist(0, 8);
  while (true) {
    ds.records.clear();
    for (int a = 0; a < team_count; ++a) {
      for (int b = a + 1; b < team_count; ++b) {
        if (coin(rng) > pair_prob) continue;
        MatchupRecord rec;
        rec.team_a = ds.teams[a];
        rec.team_b = ds.teams[b];
        rec.games = games_dist(rng);
        std::uniform_int_distribution<long> split(0, rec.games);
        rec.wins_a = split(rng);
        std::uniform_int_distribution<long> rest(0, rec.games - rec.wins_a);
        rec.wins_b = rest(rng);
        rec.draws = rec.games - rec.wins_a - rec.wins_b;
        rec.goals_a = goals_dist(rng);
        rec.goals_b = goals_dist(rng);
        ds.records.push_back(rec);
      }
    }
    if (!ds.records.empty()) return ds;
  }
}

}  // namespace footrank::testing
