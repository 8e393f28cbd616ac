#include "swlane/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "swlane/dbindex.hpp"
#include "swlane/engine.hpp"
#include "swlane/error.hpp"
#include "swlane/seqmodel.hpp"

namespace swlane {

namespace {

struct IndexArgs {
  std::string input;
  std::string output;
};

struct SearchArgs {
  std::string query;
  std::string db;
  std::string matrix = "blosum62";
  int gap_open = 10;
  int gap_extend = 2;
  std::string mode = "inter-sp";
  std::size_t workers = default_workers();
  int lanes = kDefaultLanes;
  int score_block = kDefaultScoreBlock;
  int tile = kDefaultTileDepth;
  std::string sched = "guided";
  std::size_t top = 10;
};

ScoringScheme resolve_matrix(const std::string& source) {
  if (auto builtin = builtin_matrix(source)) return *builtin;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(source, ec)) {
    throw Error(Errc::UnknownMatrix,
                "'" + source + "' is neither a built-in matrix nor a readable file");
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_matrix(text.str(), source);
}

int cmd_index(const IndexArgs& args, std::ostream& out) {
  const auto sequences = read_fasta(args.input);
  const IndexStats stats = build_index(sequences, args.output);
  out << "indexed " << stats.sequences << " sequences, " << stats.residues << " residues, max length "
      << stats.max_length << '\n';
  return kExitOk;
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.mode = *parse_search_mode(args.mode);
  cfg.scheduler = *parse_schedule(args.sched);
  cfg.scheme = make_scheme(resolve_matrix(args.matrix), gap_params(args.gap_open, args.gap_extend));
  cfg.workers = args.workers;
  cfg.lanes = args.lanes;
  cfg.score_block = args.score_block;
  cfg.tile_depth = args.tile;
  cfg.top_k = args.top;

  const auto queries = read_fasta(args.query);
  if (queries.empty()) throw Error(Errc::MalformedFasta, "no query records in '" + args.query + "'");
  const DbIndex index = DbIndex::open(args.db);

  for (const auto& query : queries) {
    const SearchResult result = search(query, index, cfg);
    out << "# query " << query.name << " length " << query.length() << '\n';
    for (std::size_t r = 0; r < result.hits.size(); ++r) {
      const Hit& hit = result.hits[r];
      out << (r + 1) << '\t' << hit.subject_name << '\t' << hit.subject_length << '\t' << hit.score
          << '\n';
    }
    out.flush();
    char line[64];
    std::snprintf(line, sizeof line, "GCUPS: %.2f", result.metrics.gcups);
    err << line << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lane-parallel Smith-Waterman protein database search", "swlane"};
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* index_cmd = app.add_subcommand("index", "Build a length-sorted database index from FASTA");
  index_cmd->add_option("--input", index_args.input, "FASTA database")->required();
  index_cmd->add_option("--output", index_args.output, "Index prefix (writes .swidx and .swseq)")->required();

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Search FASTA queries against an index");
  search_cmd->add_option("--query", search_args.query, "FASTA queries")->required();
  search_cmd->add_option("--db", search_args.db, "Index prefix")->required();
  search_cmd->add_option("--matrix", search_args.matrix, "blosum62, blosum50, pam250 or a matrix file")
      ->capture_default_str();
  search_cmd->add_option("--gap-open", search_args.gap_open, "Gap open penalty")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  search_cmd->add_option("--gap-extend", search_args.gap_extend, "Gap extension penalty")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  search_cmd->add_option("--mode", search_args.mode, "Kernel")
      ->check(CLI::IsMember({"inter-sp", "inter-qp", "intra"}))
      ->capture_default_str();
  search_cmd->add_option("--workers", search_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search_cmd->add_option("--lanes", search_args.lanes, "Lanes per group")
      ->check(CLI::IsMember({4, 8, 16}))
      ->capture_default_str();
  search_cmd->add_option("--score-block", search_args.score_block, "Score profile block (divides 8)")
      ->check(CLI::IsMember({1, 2, 4, 8}))
      ->capture_default_str();
  search_cmd->add_option("--tile", search_args.tile, "Subject positions per query pass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search_cmd->add_option("--sched", search_args.sched, "Loop scheduling")
      ->check(CLI::IsMember({"guided", "dynamic", "static", "auto"}))
      ->capture_default_str();
  search_cmd->add_option("--top", search_args.top, "Hits reported per query")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("swlane");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "swlane: " << e.what() << '\n';
    const CLI::App* scope = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << scope->help();
    return kExitUsage;
  }

  try {
    if (index_cmd->parsed()) return cmd_index(index_args, out);
    return cmd_search(search_args, out, err);
  } catch (const std::exception& e) {
    err << "swlane: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace swlane
