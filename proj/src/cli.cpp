#include "footrank/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "footrank/dataset.hpp"
#include "footrank/evaluation.hpp"
#include "footrank/graph.hpp"
#include "footrank/pagerank.hpp"
#include "footrank/toy.hpp"
#include "footrank/weights.hpp"

namespace footrank {

namespace {

std::string fmt(double v, bool full_precision = false) {
  char buf[64];
  std::snprintf(buf, sizeof buf, full_precision ? "%.17g" : "%.6f", v);
  return buf;
}

// Accepts a comma-separated mix of plain values and start:stop:step ranges
// (endpoints inclusive within half a step).
std::vector<double> parse_damping_list(const std::string& text) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty())
      throw CLI::ValidationError("--dampings", "empty damping token");
    size_t c1 = token.find(':');
    if (c1 == std::string::npos) {
      out.push_back(std::stod(token));
    } else {
      size_t c2 = token.find(':', c1 + 1);
      if (c2 == std::string::npos)
        throw CLI::ValidationError("--dampings",
                                   "range must be start:stop:step");
      double lo = std::stod(token.substr(0, c1));
      double hi = std::stod(token.substr(c1 + 1, c2 - c1 - 1));
      double step = std::stod(token.substr(c2 + 1));
      if (step <= 0)
        throw CLI::ValidationError("--dampings", "step must be positive");
      for (double v = lo; v <= hi + step / 2; v += step) out.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_fn_list(const std::string& text) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

TruncateBy parse_truncate_by(const std::string& s) {
  if (s == "produced") return TruncateBy::kProduced;
  if (s == "reference") return TruncateBy::kReference;
  throw CLI::ValidationError("--truncate-by",
                             "must be 'produced' or 'reference'");
}

void print_summary_text(const DatasetSummary& s, std::ostream& out) {
  out << "team_count         " << s.team_count << "\n"
      << "pair_count         " << s.pair_count << "\n"
      << "total_games        " << s.total_games << "\n"
      << "total_goals        " << s.total_goals << "\n"
      << "avg_games_per_pair " << fmt(s.avg_games_per_pair) << "\n"
      << "avg_goals_per_pair " << fmt(s.avg_goals_per_pair) << "\n"
      << "max_games_pair     " << s.max_games_team_a << "-"
      << s.max_games_team_b << "\n"
      << "max_games          " << s.max_games << "\n";
}

int run_toy(std::ostream& out) {
  Dataset ds = toy_dataset();
  SolverConfig cfg;
  cfg.damping = kToyDamping;
  Ranking ranking = rank_teams(ds, kToyWeightFn, cfg);

  bool ok = ranking.entries.size() == kToyExpected.size();
  out << "rank,team,expected,computed,status\n";
  for (size_t i = 0; i < kToyExpected.size() && i < ranking.entries.size();
       ++i) {
    const auto& want = kToyExpected[i];
    const auto& got = ranking.entries[i];
    bool row_ok = got.team == want.team &&
                  std::fabs(got.score - want.pagerank) <= kToyTolerance;
    ok = ok && row_ok;
    out << (i + 1) << ',' << got.team << ',' << fmt(want.pagerank) << ','
        << fmt(got.score) << ',' << (row_ok ? "ok" : "MISMATCH") << "\n";
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Rank teams from pairwise match-up statistics via a damped "
               "random walk"};
  app.require_subcommand(1);

  std::string dataset_path, reference_path;
  int weight_fn = 1;
  double damping = 0.05;
  double tolerance = 1e-12;
  int max_iters = 10000;
  int top = 0;
  int top_k = 30;
  int top_links = 3;
  bool csv_summary = false;
  bool full_precision = false;
  std::string truncate_by = "produced";
  std::string fn_list = "1";
  std::string damping_list = "0.05";

  auto* validate =
      app.add_subcommand("validate", "Check a dataset file, print OK or the "
                                     "first error");
  validate->add_option("dataset", dataset_path, "dataset CSV")->required();

  auto* summary =
      app.add_subcommand("summary", "Print dataset summary statistics");
  summary->add_option("dataset", dataset_path, "dataset CSV")->required();
  summary->add_flag("--csv", csv_summary, "emit CSV instead of text");

  auto* rank = app.add_subcommand("rank", "Compute the PageRank ordering");
  rank->add_option("dataset", dataset_path, "dataset CSV")->required();
  rank->add_option("--weight-fn", weight_fn, "weighting function id 1-10")
      ->required()
      ->check(CLI::Range(kWeightFnMin, kWeightFnMax));
  rank->add_option("--damping", damping, "damping factor in (0,1)")
      ->required();
  rank->add_option("--tolerance", tolerance, "L1 convergence tolerance");
  rank->add_option("--max-iters", max_iters, "iteration budget");
  rank->add_option("--top", top, "print only the first K rows");
  rank->add_flag("--full-precision", full_precision,
                 "print scores at full precision");

  auto* compare = app.add_subcommand(
      "compare", "Score a ranking against a reference ordering");
  compare->add_option("dataset", dataset_path, "dataset CSV")->required();
  compare->add_option("--reference", reference_path, "reference CSV")
      ->required();
  compare->add_option("--weight-fn", weight_fn, "weighting function id 1-10")
      ->required()
      ->check(CLI::Range(kWeightFnMin, kWeightFnMax));
  compare->add_option("--damping", damping, "damping factor in (0,1)")
      ->required();
  compare->add_option("--top", top_k, "truncation depth (default 30)");
  compare->add_option("--truncate-by", truncate_by,
                      "truncate 'produced' or 'reference' list");

  auto* sweep = app.add_subcommand(
      "sweep", "Inversion scores over weighting functions and dampings");
  sweep->add_option("dataset", dataset_path, "dataset CSV")->required();
  sweep->add_option("--reference", reference_path, "reference CSV")
      ->required();
  sweep->add_option("--weight-fns", fn_list, "comma list, e.g. 1,2,3")
      ->required();
  sweep->add_option("--dampings", damping_list,
                    "comma list and/or start:stop:step ranges")
      ->required();
  sweep->add_option("--top", top_k, "truncation depth (default 30)");
  sweep->add_option("--truncate-by", truncate_by,
                    "truncate 'produced' or 'reference' list");

  auto* export_dot_cmd =
      app.add_subcommand("export-dot", "Emit the graph as DOT with "
                                       "rank-sized nodes");
  export_dot_cmd->add_option("dataset", dataset_path, "dataset CSV")
      ->required();
  export_dot_cmd
      ->add_option("--weight-fn", weight_fn, "weighting function id 1-10")
      ->required()
      ->check(CLI::Range(kWeightFnMin, kWeightFnMax));
  export_dot_cmd->add_option("--damping", damping, "damping factor in (0,1)")
      ->required();
  export_dot_cmd->add_option("--top-links", top_links,
                             "strongest outgoing links per node");

  auto* toy = app.add_subcommand(
      "toy", "Run the built-in four-team fixture end to end");
  (void)toy;

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      Dataset ds;
      try {
        ds = load_dataset(dataset_path);
      } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
      }
      DatasetSummary s = summarize(ds);
      out << "OK\n"
          << s.team_count << " teams, " << s.pair_count << " pairs, "
          << s.total_games << " games, " << s.total_goals << " goals\n";
      return 0;
    }

    if (summary->parsed()) {
      DatasetSummary s = summarize(load_dataset(dataset_path));
      if (csv_summary) {
        out << "team_count,pair_count,total_games,total_goals,"
               "avg_games_per_pair,avg_goals_per_pair,max_games_pair,"
               "max_games\n"
            << s.team_count << ',' << s.pair_count << ',' << s.total_games
            << ',' << s.total_goals << ',' << fmt(s.avg_games_per_pair) << ','
            << fmt(s.avg_goals_per_pair) << ',' << s.max_games_team_a << '-'
            << s.max_games_team_b << ',' << s.max_games << "\n";
      } else {
        print_summary_text(s, out);
      }
      return 0;
    }

    if (rank->parsed()) {
      Dataset ds = load_dataset(dataset_path);
      SolverConfig cfg{damping, tolerance, max_iters};
      Ranking ranking = rank_teams(ds, weight_fn, cfg);
      out << "rank,team,score\n";
      size_t limit = top > 0 ? std::min<size_t>(top, ranking.entries.size())
                             : ranking.entries.size();
      for (size_t i = 0; i < limit; ++i) {
        const auto& e = ranking.entries[i];
        out << e.position << ',' << e.team << ','
            << fmt(e.score, full_precision) << "\n";
      }
      return 0;
    }

    if (compare->parsed()) {
      Dataset ds = load_dataset(dataset_path);
      ReferenceRanking ref = load_reference(reference_path);
      SolverConfig cfg{damping, tolerance, max_iters};
      Ranking ranking = rank_teams(ds, weight_fn, cfg);
      ComparisonReport rep = normalized_inversions(
          ranking, ref, top_k, parse_truncate_by(truncate_by));
      if (rep.compared_count < 2)
        err << "warning: fewer than 2 comparable teams, score is 0\n";
      out << "k                     " << rep.k << "\n"
          << "compared_count        " << rep.compared_count << "\n"
          << "inversions            " << rep.inversions << "\n"
          << "normalized_inversions " << fmt(rep.normalized_inversions)
          << "\n";
      out << "dropped               ";
      for (size_t i = 0; i < rep.dropped.size(); ++i)
        out << (i ? ";" : "") << rep.dropped[i];
      out << "\n";
      out << "k,compared_count,inversions,normalized_inversions\n"
          << rep.k << ',' << rep.compared_count << ',' << rep.inversions
          << ',' << fmt(rep.normalized_inversions) << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      Dataset ds = load_dataset(dataset_path);
      ReferenceRanking ref = load_reference(reference_path);
      SolverConfig base;
      auto rows = damping_sweep(ds, parse_fn_list(fn_list),
                                parse_damping_list(damping_list), ref, top_k,
                                base, parse_truncate_by(truncate_by));
      out << "weight_fn,damping,normalized_inversions\n";
      for (const auto& row : rows)
        out << row.fn << ',' << fmt(row.damping) << ','
            << fmt(row.normalized_inversions) << "\n";
      return 0;
    }

    if (export_dot_cmd->parsed()) {
      Dataset ds = load_dataset(dataset_path);
      MatchupGraph g = build_graph(ds, weight_fn);
      SolverConfig cfg{damping, tolerance, max_iters};
      RankingVector pi = power_iterate(to_transition(g, damping), cfg);
      out << export_dot(g, pi.pi, top_links);
      return 0;
    }

    if (toy->parsed()) return run_toy(out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace footrank
