#include "footrank/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "footrank/weights.hpp"

namespace footrank {

MatchupGraph build_graph(const Dataset& dataset, int fn,
                         std::size_t team_cap) {
  const std::size_t n = dataset.teams.size();
  if (n > team_cap)
    throw std::length_error("team count " + std::to_string(n) +
                            " exceeds cap " + std::to_string(team_cap));

  MatchupGraph g;
  g.teams = dataset.teams;
  g.adjacency.assign(n, std::vector<double>(n, 0.0));

  WeightContext ctx{std::max(summarize(dataset).max_games, 1L)};

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[dataset.teams[i]] = i;

  for (const auto& rec : dataset.records) {
    std::size_t ia = index.at(rec.team_a);
    std::size_t ib = index.at(rec.team_b);
    g.adjacency[ia][ib] = compute_weight(fn, orient(rec, rec.team_a), ctx);
    g.adjacency[ib][ia] = compute_weight(fn, orient(rec, rec.team_b), ctx);
  }
  return g;
}

TransitionMatrix to_transition(const MatchupGraph& graph, double damping) {
  const std::size_t n = graph.size();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (!(damping > 0.0 && damping < 1.0))
    throw std::invalid_argument("damping must lie in (0,1)");

  TransitionMatrix q;
  q.damping = damping;
  q.rows.assign(n, std::vector<double>(n, 0.0));
  const double uniform = 1.0 / static_cast<double>(n);
  const double teleport = damping * uniform;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = graph.adjacency[i];
    double sum = std::accumulate(row.begin(), row.end(), 0.0);
    if (sum > 0.0) {
      for (std::size_t j = 0; j < n; ++j)
        q.rows[i][j] = (1.0 - damping) * row[j] / sum + teleport;
    } else {
      // dangling node: no outgoing weight, teleport everywhere
      std::fill(q.rows[i].begin(), q.rows[i].end(), uniform);
    }
  }
  return q;
}

std::string export_dot(const MatchupGraph& graph,
                       const std::vector<double>& ranks, int top_links) {
  const std::size_t n = graph.size();
  if (ranks.size() != n)
    throw std::invalid_argument("rank vector dimension mismatch");
  if (top_links < 1)
    throw std::invalid_argument("top_links must be >= 1");

  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  };

  std::ostringstream out;
  out << "digraph matchups {\n";
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    double width = std::max(0.3, 10.0 * ranks[i]);
    std::snprintf(buf, sizeof buf, "%.3f", width);
    out << "  " << quote(graph.teams[i]) << " [width=" << buf
        << ", fixedsize=true];\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> targets;
    for (std::size_t j = 0; j < n; ++j)
      if (graph.adjacency[i][j] > 0.0) targets.push_back(j);
    std::stable_sort(targets.begin(), targets.end(),
                     [&](std::size_t a, std::size_t b) {
                       return graph.adjacency[i][a] > graph.adjacency[i][b];
                     });
    if (targets.size() > static_cast<std::size_t>(top_links))
      targets.resize(static_cast<std::size_t>(top_links));
    for (std::size_t j : targets) {
      std::snprintf(buf, sizeof buf, "%.3f", graph.adjacency[i][j]);
      out << "  " << quote(graph.teams[i]) << " -> " << quote(graph.teams[j])
          << " [label=" << buf << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace footrank
