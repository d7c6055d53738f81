#include "footrank/weights.hpp"

#include <stdexcept>
#include <string>

namespace footrank {

namespace {

double loss_ratio(const OrientedStats& s) {
  return static_cast<double>(s.l) / static_cast<double>(s.g);
}

double conceded_share(const OrientedStats& s) {
  long total = s.c + s.s;
  if (total == 0) return 0.0;
  return static_cast<double>(s.c) / static_cast<double>(total);
}

}  // namespace

double compute_weight(int fn, const OrientedStats& stats,
                      const WeightContext& ctx) {
  if (fn < kWeightFnMin || fn > kWeightFnMax)
    throw std::invalid_argument("weight function id out of range: " +
                                std::to_string(fn));
  if (stats.g < 1)
    throw std::invalid_argument("oriented stats have zero games");
  if (ctx.max_games < stats.g)
    throw std::invalid_argument("context max games below pair games");

  // a pair of goalless draws carries no evidence and casts no vote
  if (stats.w == 0 && stats.l == 0 && stats.s == 0 && stats.c == 0)
    return 0.0;

  const double g = static_cast<double>(stats.g);
  switch (fn) {
    case 1:
      return loss_ratio(stats) / static_cast<double>(ctx.max_games - stats.g + 1);
    case 2:
      return loss_ratio(stats);
    case 3:
      return loss_ratio(stats) + conceded_share(stats);
    case 4:
      return static_cast<double>(stats.l);
    case 5:
      if (stats.c == 0) return 0.0;
      if (stats.s == 0) return static_cast<double>(stats.c);
      return static_cast<double>(stats.c) / static_cast<double>(stats.s);
    case 6:
      if (stats.l == 0) return 0.0;
      if (stats.w == 0) return static_cast<double>(stats.l);
      return static_cast<double>(stats.l) / static_cast<double>(stats.w);
    case 7:
      return loss_ratio(stats) + 0.5 * static_cast<double>(stats.d) / g;
    case 8:
      return conceded_share(stats);
    case 9:
      return static_cast<double>(stats.c) / g;
    case 10:
      return static_cast<double>(stats.c);
    default:
      return 0.0;  // unreachable
  }
}

}  // namespace footrank
