#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "footrank/dataset.hpp"

namespace footrank {

inline constexpr std::size_t kDefaultTeamCap = 10000;

// Dense nonnegative weighted adjacency over roster-indexed teams for one
// weighting function. adjacency[i][j] is the weight of the directed link
// from i to j; diagonal entries are 0.
struct MatchupGraph {
  std::vector<std::string> teams;
  std::vector<std::vector<double>> adjacency;

  std::size_t size() const { return teams.size(); }
};

// Row-stochastic damped transition matrix. Rows with no outgoing weight
// (dangling nodes) are the uniform row 1/N.
struct TransitionMatrix {
  std::vector<std::vector<double>> rows;
  double damping = 0.0;

  std::size_t size() const { return rows.size(); }
};

// Applies compute_weight over both orientations of every record.
// Throws std::length_error if the roster exceeds team_cap.
MatchupGraph build_graph(const Dataset& dataset, int fn,
                         std::size_t team_cap = kDefaultTeamCap);

// Row-normalizes the adjacency and mixes in the uniform teleport term:
// Q[i][j] = (1-damping) * A[i][j] / rowsum(i) + damping/N, with dangling
// rows set to 1/N. Throws std::invalid_argument if damping is outside
// (0,1) or the graph is empty.
TransitionMatrix to_transition(const MatchupGraph& graph, double damping);

// DOT digraph with node widths proportional to rank (width = max(0.3,
// 10*rank)) and only the top_links largest-weight outgoing edges per node,
// ties broken by target index. Edge labels carry the weight to 3 decimals.
std::string export_dot(const MatchupGraph& graph,
                       const std::vector<double>& ranks, int top_links);

}  // namespace footrank
