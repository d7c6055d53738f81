#pragma once

#include "footrank/dataset.hpp"

namespace footrank {

inline constexpr int kWeightFnMin = 1;
inline constexpr int kWeightFnMax = 10;

// Dataset-wide context needed by weighting function 1.
struct WeightContext {
  long max_games = 1;  // G: maximum games over all pairs in the dataset
};

// Directed edge weight from team i toward opponent j, given the pair's
// statistics oriented from i's side. The ten functions:
//   1: (l/g) / (G - g + 1)
//   2: l/g
//   3: l/g + c/(c+s)
//   4: l
//   5: c/s
//   6: l/w
//   7: l/g + 0.5*d/g
//   8: c/(c+s)
//   9: c/g
//  10: c
// Zero-denominator conventions: c/(c+s) is 0 when c+s = 0; c/s with s = 0
// is c; l/w with w = 0 is l.
// Throws std::invalid_argument on fn outside 1..10, g < 1, or G < g.
double compute_weight(int fn, const OrientedStats& stats,
                      const WeightContext& ctx);

}  // namespace footrank
