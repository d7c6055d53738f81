#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace footrank {

// Aggregate statistics for one unordered team pair.
struct MatchupRecord {
  std::string team_a;
  std::string team_b;
  long games = 0;
  long wins_a = 0;
  long wins_b = 0;
  long draws = 0;
  long goals_a = 0;
  long goals_b = 0;
};

// A record viewed from one team's side: w = games won by that team,
// l = games lost, s = goals scored, c = goals conceded.
struct OrientedStats {
  long g = 0;
  long w = 0;
  long l = 0;
  long d = 0;
  long s = 0;
  long c = 0;
};

// Validated match-up collection. Immutable after construction; the roster
// keeps order of first appearance and may contain teams with no records.
struct Dataset {
  std::vector<std::string> teams;
  std::vector<MatchupRecord> records;

  // Index into teams, or -1 if absent.
  int index_of(std::string_view name) const;
};

struct DatasetSummary {
  long team_count = 0;
  long pair_count = 0;
  long total_games = 0;
  long total_goals = 0;
  double avg_games_per_pair = 0.0;
  double avg_goals_per_pair = 0.0;
  std::string max_games_team_a;
  std::string max_games_team_b;
  long max_games = 0;  // G: maximum games over all pairs
};

// Parse failure with the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " at line " + std::to_string(line)),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Expected header of a dataset CSV file.
inline constexpr std::string_view kDatasetHeader =
    "team_a,team_b,games,wins_a,wins_b,draws,goals_a,goals_b";

// Parses a dataset CSV. Lines of the form `#team,<name>` before the header
// register extra roster teams with no records. Throws ParseError on any
// malformed or invariant-violating input.
Dataset parse_dataset(std::string_view text);

// Reads and parses a dataset file. Throws std::runtime_error if unreadable.
Dataset load_dataset(const std::string& path);

// Serializes back to the CSV format parse_dataset accepts, including
// `#team` preamble lines for roster teams that appear in no record.
std::string to_csv(const Dataset& dataset);

// Views a record from `viewpoint`'s side. Throws std::invalid_argument if
// viewpoint is neither participant.
OrientedStats orient(const MatchupRecord& record, std::string_view viewpoint);

DatasetSummary summarize(const Dataset& dataset);

}  // namespace footrank
