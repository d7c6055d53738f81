#include "footrank/toy.hpp"

namespace footrank {

Dataset toy_dataset() {
  Dataset ds;
  ds.teams = {"A", "B", "C", "D"};
  // goals are set to one per win; only win/loss counts drive function 2
  ds.records = {
      {"A", "B", 3, 2, 1, 0, 2, 1},
      {"A", "C", 3, 2, 1, 0, 2, 1},
      {"A", "D", 3, 3, 0, 0, 3, 0},
      {"B", "C", 3, 0, 3, 0, 0, 3},
      {"B", "D", 3, 0, 3, 0, 0, 3},
      {"C", "D", 3, 1, 2, 0, 1, 2},
  };
  return ds;
}

}  // namespace footrank
