#pragma once

#include <array>
#include <string_view>

#include "footrank/dataset.hpp"

namespace footrank {

// Built-in four-team fixture: six pairs of three games each, no draws.
// With weighting function 2 and damping 0.15 the expected PageRank order
// is A > C > D > B.
Dataset toy_dataset();

struct ToyExpectation {
  std::string_view team;
  double pagerank;
};

inline constexpr int kToyWeightFn = 2;
inline constexpr double kToyDamping = 0.15;
inline constexpr double kToyTolerance = 0.005;

// Expected stationary probabilities in rank order.
inline constexpr std::array<ToyExpectation, 4> kToyExpected{{
    {"A", 0.333},
    {"C", 0.281},
    {"D", 0.211},
    {"B", 0.175},
}};

}  // namespace footrank
