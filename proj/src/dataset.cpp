#include "footrank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace footrank {

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

long parse_count(const std::string& field, const char* what, int line_no) {
  std::string t = trim(field);
  long value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ParseError(std::string("non-integer ") + what + " '" + t + "'",
                     line_no);
  if (value < 0)
    throw ParseError(std::string("negative ") + what, line_no);
  return value;
}

}  // namespace

int Dataset::index_of(std::string_view name) const {
  for (size_t i = 0; i < teams.size(); ++i)
    if (teams[i] == name) return static_cast<int>(i);
  return -1;
}

Dataset parse_dataset(std::string_view text) {
  Dataset ds;
  std::unordered_set<std::string> seen_teams;
  std::unordered_set<std::string> seen_pairs;

  auto add_team = [&](const std::string& name) {
    if (seen_teams.insert(name).second) ds.teams.push_back(name);
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty()) continue;

    if (!header_seen) {
      if (stripped.rfind("#team,", 0) == 0) {
        std::string name = trim(stripped.substr(6));
        if (name.empty())
          throw ParseError("empty team name in roster preamble", line_no);
        add_team(name);
        continue;
      }
      if (stripped != kDatasetHeader)
        throw ParseError("header mismatch, expected '" +
                             std::string(kDatasetHeader) + "'",
                         line_no);
      header_seen = true;
      continue;
    }

    auto fields = split_fields(stripped);
    if (fields.size() != 8)
      throw ParseError("expected 8 fields, got " +
                           std::to_string(fields.size()),
                       line_no);

    MatchupRecord rec;
    rec.team_a = trim(fields[0]);
    rec.team_b = trim(fields[1]);
    if (rec.team_a.empty() || rec.team_b.empty())
      throw ParseError("empty team name", line_no);
    if (rec.team_a == rec.team_b)
      throw ParseError("team plays itself ('" + rec.team_a + "')", line_no);
    rec.games = parse_count(fields[2], "games", line_no);
    rec.wins_a = parse_count(fields[3], "wins_a", line_no);
    rec.wins_b = parse_count(fields[4], "wins_b", line_no);
    rec.draws = parse_count(fields[5], "draws", line_no);
    rec.goals_a = parse_count(fields[6], "goals_a", line_no);
    rec.goals_b = parse_count(fields[7], "goals_b", line_no);
    if (rec.games < 1) throw ParseError("games must be >= 1", line_no);
    if (rec.wins_a + rec.wins_b + rec.draws != rec.games)
      throw ParseError("wins+draws exceed games", line_no);

    std::string key = rec.team_a < rec.team_b
                          ? rec.team_a + "\n" + rec.team_b
                          : rec.team_b + "\n" + rec.team_a;
    if (!seen_pairs.insert(key).second)
      throw ParseError(
          "duplicate pair " + rec.team_a + "-" + rec.team_b, line_no);

    add_team(rec.team_a);
    add_team(rec.team_b);
    ds.records.push_back(std::move(rec));
  }

  if (!header_seen) throw ParseError("empty file (missing header)", line_no);
  return ds;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

std::string to_csv(const Dataset& dataset) {
  std::unordered_set<std::string> with_records;
  for (const auto& r : dataset.records) {
    with_records.insert(r.team_a);
    with_records.insert(r.team_b);
  }
  std::ostringstream out;
  for (const auto& t : dataset.teams)
    if (!with_records.count(t)) out << "#team," << t << "\n";
  out << kDatasetHeader << "\n";
  for (const auto& r : dataset.records)
    out << r.team_a << ',' << r.team_b << ',' << r.games << ',' << r.wins_a
        << ',' << r.wins_b << ',' << r.draws << ',' << r.goals_a << ','
        << r.goals_b << "\n";
  return out.str();
}

OrientedStats orient(const MatchupRecord& record, std::string_view viewpoint) {
  OrientedStats s;
  s.g = record.games;
  s.d = record.draws;
  if (viewpoint == record.team_a) {
    s.w = record.wins_a;
    s.l = record.wins_b;
    s.s = record.goals_a;
    s.c = record.goals_b;
  } else if (viewpoint == record.team_b) {
    s.w = record.wins_b;
    s.l = record.wins_a;
    s.s = record.goals_b;
    s.c = record.goals_a;
  } else {
    throw std::invalid_argument("viewpoint '" + std::string(viewpoint) +
                                "' is not a participant of the record");
  }
  return s;
}

DatasetSummary summarize(const Dataset& dataset) {
  DatasetSummary sum;
  sum.team_count = static_cast<long>(dataset.teams.size());
  sum.pair_count = static_cast<long>(dataset.records.size());

  // Roster-order tie break for the max-games pair: compare by the index of
  // the earlier team of the pair, then the later one.
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < dataset.teams.size(); ++i)
    index[dataset.teams[i]] = static_cast<int>(i);

  std::pair<int, int> best_key{-1, -1};
  for (const auto& r : dataset.records) {
    sum.total_games += r.games;
    sum.total_goals += r.goals_a + r.goals_b;
    int ia = index[r.team_a], ib = index[r.team_b];
    std::pair<int, int> key = std::minmax(ia, ib);
    if (r.games > sum.max_games ||
        (r.games == sum.max_games && sum.max_games > 0 && key < best_key)) {
      sum.max_games = r.games;
      best_key = key;
      sum.max_games_team_a = dataset.teams[key.first];
      sum.max_games_team_b = dataset.teams[key.second];
    }
  }
  if (sum.pair_count > 0) {
    sum.avg_games_per_pair =
        static_cast<double>(sum.total_games) / sum.pair_count;
    sum.avg_goals_per_pair =
        static_cast<double>(sum.total_goals) / sum.pair_count;
  }
  return sum;
}

}  // namespace footrank
