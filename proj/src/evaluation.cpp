#include "footrank/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace footrank {

int ReferenceRanking::position_of(std::string_view team) const {
  for (size_t i = 0; i < teams.size(); ++i)
    if (teams[i] == team) return static_cast<int>(i);
  return -1;
}

ReferenceRanking parse_reference(std::string_view text) {
  ReferenceRanking ref;
  std::unordered_set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  long expected_rank = 1;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "rank,team")
        throw ParseError("header mismatch, expected 'rank,team'", line_no);
      header_seen = true;
      continue;
    }
    size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("expected 2 fields", line_no);
    long rank = 0;
    auto [ptr, ec] =
        std::from_chars(line.data(), line.data() + comma, rank);
    if (ec != std::errc() || ptr != line.data() + comma)
      throw ParseError("non-integer rank", line_no);
    if (rank != expected_rank)
      throw ParseError("ranks must increase strictly from 1; expected " +
                           std::to_string(expected_rank),
                       line_no);
    ++expected_rank;
    std::string team = line.substr(comma + 1);
    if (team.empty()) throw ParseError("empty team name", line_no);
    if (!seen.insert(team).second)
      throw ParseError("duplicate team '" + team + "'", line_no);
    ref.teams.push_back(std::move(team));
  }
  if (ref.teams.empty())
    throw ParseError("reference ranking is empty", line_no);
  return ref;
}

ReferenceRanking load_reference(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open reference file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_reference(buf.str());
}

namespace {

long merge_count(std::vector<int>& values, std::vector<int>& scratch,
                 size_t lo, size_t hi) {
  if (hi - lo < 2) return 0;
  size_t mid = lo + (hi - lo) / 2;
  long inv = merge_count(values, scratch, lo, mid) +
             merge_count(values, scratch, mid, hi);
  size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (values[a] <= values[b]) {
      scratch[out++] = values[a++];
    } else {
      inv += static_cast<long>(mid - a);
      scratch[out++] = values[b++];
    }
  }
  while (a < mid) scratch[out++] = values[a++];
  while (b < hi) scratch[out++] = values[b++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
  return inv;
}

}  // namespace

long count_inversions(std::vector<int> values) {
  std::vector<int> scratch(values.size());
  return merge_count(values, scratch, 0, values.size());
}

ComparisonReport normalized_inversions(const Ranking& produced,
                                       const ReferenceRanking& reference,
                                       int k, TruncateBy mode) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (produced.entries.empty())
    throw std::invalid_argument("produced ranking is empty");

  ComparisonReport report;
  report.k = k;

  // Reference positions of the produced teams we keep, in produced order.
  std::vector<int> positions;
  if (mode == TruncateBy::kProduced) {
    size_t limit = std::min<size_t>(k, produced.entries.size());
    for (size_t i = 0; i < limit; ++i) {
      int pos = reference.position_of(produced.entries[i].team);
      if (pos < 0)
        report.dropped.push_back(produced.entries[i].team);
      else
        positions.push_back(pos);
    }
  } else {
    std::unordered_map<std::string, int> ref_pos;
    size_t limit = std::min<size_t>(k, reference.teams.size());
    for (size_t i = 0; i < limit; ++i)
      ref_pos[reference.teams[i]] = static_cast<int>(i);
    for (const auto& e : produced.entries) {
      auto it = ref_pos.find(e.team);
      if (it != ref_pos.end()) positions.push_back(it->second);
    }
  }

  report.compared_count = static_cast<int>(positions.size());
  if (report.compared_count < 2) return report;

  report.inversions = count_inversions(positions);
  long max_inversions = static_cast<long>(report.compared_count) *
                        (report.compared_count - 1) / 2;
  report.normalized_inversions =
      static_cast<double>(report.inversions) / max_inversions;
  return report;
}

std::vector<SweepRow> damping_sweep(const Dataset& dataset,
                                    const std::vector<int>& fns,
                                    const std::vector<double>& dampings,
                                    const ReferenceRanking& reference, int k,
                                    const SolverConfig& base,
                                    TruncateBy mode) {
  if (fns.empty() || dampings.empty())
    throw std::invalid_argument("sweep lists must be non-empty");
  for (double d : dampings)
    if (!(d > 0.0 && d < 1.0))
      throw std::invalid_argument("damping must lie in (0,1)");

  std::vector<SweepRow> rows;
  rows.reserve(fns.size() * dampings.size());
  for (int fn : fns) {
    for (double d : dampings) {
      SolverConfig cfg = base;
      cfg.damping = d;
      Ranking r = rank_teams(dataset, fn, cfg);
      ComparisonReport rep = normalized_inversions(r, reference, k, mode);
      rows.push_back({fn, d, rep.normalized_inversions});
    }
  }
  return rows;
}

}  // namespace footrank
