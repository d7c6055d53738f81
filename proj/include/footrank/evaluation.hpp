#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "footrank/dataset.hpp"
#include "footrank/pagerank.hpp"

namespace footrank {

// Official ordering to score against; position 1 first. Teams absent from
// it are dropped from inversion counting ("NA" teams).
struct ReferenceRanking {
  std::vector<std::string> teams;

  // Position in the reference (0-based), or -1 if absent.
  int position_of(std::string_view team) const;
};

// Parses a `rank,team` CSV with ranks strictly increasing from 1.
ReferenceRanking parse_reference(std::string_view text);
ReferenceRanking load_reference(const std::string& path);

// Which list the top-k truncation applies to before NA removal.
enum class TruncateBy { kProduced, kReference };

struct ComparisonReport {
  int k = 0;               // truncation depth requested
  int compared_count = 0;  // teams remaining after NA removal
  long inversions = 0;
  double normalized_inversions = 0.0;
  std::vector<std::string> dropped;  // NA teams excluded
};

// Counts pairs of the produced top-k (after dropping NA teams) that appear
// in the opposite order in the reference, normalized by m(m-1)/2.
// With TruncateBy::kReference the reference is truncated to its top k
// instead and the produced ranking is filtered to that set.
// Throws std::invalid_argument on k < 2 or an empty produced ranking;
// compared_count < 2 yields score 0.
ComparisonReport normalized_inversions(const Ranking& produced,
                                       const ReferenceRanking& reference,
                                       int k,
                                       TruncateBy mode = TruncateBy::kProduced);

// Merge-sort inversion count of an integer sequence, O(m log m).
long count_inversions(std::vector<int> values);

struct SweepRow {
  int fn = 0;
  double damping = 0.0;
  double normalized_inversions = 0.0;
};

// One row per (fn, damping) in input order, each computed by rank_teams
// followed by normalized_inversions. base.damping is ignored; tolerance
// and max_iterations are taken from base.
std::vector<SweepRow> damping_sweep(const Dataset& dataset,
                                    const std::vector<int>& fns,
                                    const std::vector<double>& dampings,
                                    const ReferenceRanking& reference, int k,
                                    const SolverConfig& base = {},
                                    TruncateBy mode = TruncateBy::kProduced);

}  // namespace footrank
