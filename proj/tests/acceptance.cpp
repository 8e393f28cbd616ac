// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "swlane/cli.hpp"
#include "swlane/dbindex.hpp"
#include "swlane/engine.hpp"
#include "swlane/error.hpp"
#include "swlane/kernels.hpp"
#include "swlane/scoring.hpp"
#include "synthetic.hpp"
#include "tempdir.hpp"

using namespace swlane;
using testing::TempDir;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Criterion = std::function<void(Outcome&)>;

bool run(int number, const char* title, const Criterion& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d (%s): %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", number, title,
              out.detail.c_str(), secs);
  for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return out.pass;
}

const std::pair<int, int> kGaps[] = {{10, 2}, {11, 1}, {0, 0}};
const char* const kMatrices[] = {"blosum62", "blosum50"};
const int kWidths[] = {4, 8, 16};

ScoringScheme random_scheme(std::mt19937_64& rng) {
  const auto gaps = kGaps[rng() % 3];
  return testing::scheme_of(kMatrices[rng() % 2], gaps.first, gaps.second);
}

std::string describe(const ScoringScheme& s, std::size_t q, std::size_t subject) {
  return s.name + " gaps " + std::to_string(s.gap_open_extend - s.gap_extend) + "/" + std::to_string(s.gap_extend) +
         " |q|=" + std::to_string(q) + " |s|=" + std::to_string(subject);
}

// Lengths 1..400, with a third of the draws inside the full-matrix range.
std::size_t random_length(std::mt19937_64& rng) {
  if (rng() % 3 == 0) return 1 + rng() % 40;
  return 1 + rng() % 400;
}

// Criterion 1.
void oracle_equivalence(Outcome& out) {
  std::mt19937_64 rng(0xA11CE);
  const int instances = 1000;
  std::size_t pairs = 0, oracle_checks = 0;
  for (int n = 0; n < instances; ++n) {
    const ScoringScheme scheme = random_scheme(rng);
    const int width = kWidths[rng() % 3];
    const Sequence query{"q", testing::random_residues(rng, random_length(rng), (rng() % 5 == 0) ? 24 : 20)};
    std::vector<Sequence> subjects(1 + rng() % width);
    for (auto& s : subjects) s = Sequence{"s", testing::random_residues(rng, random_length(rng), 20)};

    std::vector<Score> expected;
    for (const auto& s : subjects) {
      expected.push_back(sw_scalar(query, s, scheme));
      if (query.length() <= 40 && s.length() <= 40) {
        ++oracle_checks;
        out.expect(testing::full_matrix_sw(query.residues, s.residues, scheme) == expected.back(),
                   "scalar vs full matrix: " + describe(scheme, query.length(), s.length()));
      }
    }
    pairs += subjects.size();

    const SequenceProfile sp = build_sequence_profile(subjects, width);
    const QueryProfile qp = build_query_profile(query, scheme);
    const StripedQueryProfile sqp = build_striped_profile(query, scheme, width);
    DpBuffers buf(std::max<std::size_t>(sqp.padded_query_len(), query.length()), width);
    const int blocks[] = {1, 2, 4, 8};
    const int tiles[] = {1, 2, 3, 4, 8, 16};
    const int block = blocks[rng() % 4];
    const KernelConfig cfg = set_tile_depth(tiles[rng() % 6]);

    const LaneScores via_qp = sw_inter_qp(qp, sp, scheme, buf, cfg);
    const LaneScores via_sp = sw_inter_sp(scheme, sp, query.view(), buf, block, cfg);
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      const auto where = describe(scheme, query.length(), subjects[k].length()) + " W=" + std::to_string(width);
      out.expect(via_qp[static_cast<int>(k)] == expected[k], "inter-qp: " + where);
      out.expect(via_sp[static_cast<int>(k)] == expected[k], "inter-sp: " + where);
      out.expect(sw_intra_striped(sqp, subjects[k].view(), scheme, buf) == expected[k], "intra: " + where);
    }
  }
  out.expect(oracle_checks >= 100, "too few full-matrix checks: " + std::to_string(oracle_checks));
  out.detail = std::to_string(instances) + " instances, " + std::to_string(pairs) + " pairs x 3 kernels, " +
               std::to_string(oracle_checks) + " full-matrix checks";
}

// Criterion 2.
void padding_invariance(Outcome& out) {
  std::mt19937_64 rng(0xD0117);
  const int instances = 250;
  std::size_t comparisons = 0;
  for (int n = 0; n < instances; ++n) {
    const ScoringScheme scheme = random_scheme(rng);
    const int width = kWidths[rng() % 3];
    const Sequence query{"q", testing::random_residues(rng, random_length(rng), 20)};
    std::vector<Sequence> subjects(1 + rng() % width);
    for (auto& s : subjects) s = Sequence{"s", testing::random_residues(rng, random_length(rng), 20)};
    std::vector<Score> expected;
    for (const auto& s : subjects) expected.push_back(sw_scalar(query, s, scheme));

    // Striped path: query with a DUMMY tail.
    Sequence padded = query;
    padded.residues.insert(padded.residues.end(), 1 + rng() % 31, kDummy);
    const StripedQueryProfile plain = build_striped_profile(query, scheme, width);
    const StripedQueryProfile tailed = build_striped_profile(padded, scheme, width);
    DpBuffers buf(tailed.padded_query_len() + 8, width);
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      const Score a = sw_intra_striped(plain, subjects[k].view(), scheme, buf);
      const Score b = sw_intra_striped(tailed, subjects[k].view(), scheme, buf);
      out.expect(a == expected[k] && b == expected[k],
                 "striped dummy tail: " + describe(scheme, query.length(), subjects[k].length()));
      comparisons += 2;
    }

    // Inter path: the same subjects regrouped so that L changes. A long
    // companion raises L, and each subject alone gives its own minimal L.
    const QueryProfile qp = build_query_profile(query, scheme);
    std::vector<Sequence> grown = subjects;
    if (static_cast<int>(grown.size()) == width) grown.pop_back();
    grown.push_back(Sequence{"long", testing::random_residues(rng, 400 + 1 + rng() % 100, 20)});
    const SequenceProfile base = build_sequence_profile(subjects, width);
    const SequenceProfile wide = build_sequence_profile(grown, width);
    out.expect(wide.padded_len() > base.padded_len(), "regrouping did not change L");
    const LaneScores qp_base = sw_inter_qp(qp, base, scheme, buf);
    const LaneScores sp_wide = sw_inter_sp(scheme, wide, query.view(), buf, 8);
    const LaneScores qp_wide = sw_inter_qp(qp, wide, scheme, buf);
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      const auto where = describe(scheme, query.length(), subjects[k].length());
      out.expect(qp_base[static_cast<int>(k)] == expected[k], "inter base group: " + where);
      if (k + 1 < grown.size()) {
        out.expect(qp_wide[static_cast<int>(k)] == expected[k], "inter-qp larger L: " + where);
        out.expect(sp_wide[static_cast<int>(k)] == expected[k], "inter-sp larger L: " + where);
        comparisons += 2;
      }
      const Sequence single[] = {subjects[k]};
      const SequenceProfile alone = build_sequence_profile(single, width);
      out.expect(sw_inter_sp(scheme, alone, query.view(), buf, 4)[0] == expected[k], "inter-sp alone: " + where);
      comparisons += 2;
    }
  }
  out.detail = std::to_string(instances) + " instances, " + std::to_string(comparisons) + " padded comparisons";
}

void write_fasta(const std::filesystem::path& path, const std::vector<Sequence>& seqs) {
  std::ofstream f(path);
  f << to_fasta(seqs, 60);
}

// Criterion 3.
void configuration_invariance(Outcome& out) {
  TempDir dir;
  std::mt19937_64 rng(0xC0F16);
  std::vector<Sequence> db = testing::synthetic_database_count(11, 400, 5, 350);
  const Sequence q1 = testing::synthetic_protein(rng, 220, "query_one");
  const Sequence q2 = testing::synthetic_protein(rng, 57, "query_two");
  db.push_back(testing::mutate(rng, q1, 0.15, "homolog_one"));
  db.push_back(testing::mutate(rng, q2, 0.10, "homolog_two"));
  // Duplicates force score ties, so the tie-break is part of what is compared.
  for (int i = 0; i < 6; ++i) db.push_back(Sequence{"dup" + std::to_string(i), db[static_cast<std::size_t>(i)].residues});
  write_fasta(dir / "db.fa", db);
  write_fasta(dir / "q.fa", {q1, q2});

  std::ostringstream sink, err;
  out.expect(run_cli({"index", "--input", (dir / "db.fa").string(), "--output", (dir / "db").string()}, sink, err) ==
                 kExitOk,
             "index failed: " + err.str());

  std::string reference;
  std::size_t runs = 0;
  for (const char* mode : {"inter-sp", "inter-qp", "intra"})
    for (const char* workers : {"1", "2", "8"})
      for (const char* sched : {"guided", "dynamic", "static"})
        for (const char* lanes : {"4", "8", "16"})
          for (const char* block : {"4", "8"})
            for (const char* tile : {"1", "4"}) {
              std::ostringstream o, e;
              const int code = run_cli({"search", "--query", (dir / "q.fa").string(), "--db", (dir / "db").string(),
                                        "--mode", mode, "--workers", workers, "--sched", sched, "--lanes", lanes,
                                        "--score-block", block, "--tile", tile, "--top", "1000"},
                                       o, e);
              const std::string where = std::string(mode) + " workers=" + workers + " sched=" + sched +
                                        " W=" + lanes + " N=" + block + " T=" + tile;
              out.expect(code == kExitOk, "exit " + std::to_string(code) + ": " + where + " " + e.str());
              if (runs++ == 0) reference = o.str();
              out.expect(o.str() == reference, "output differs: " + where);
            }
  const auto lines = std::count(reference.begin(), reference.end(), '\n');
  out.expect(lines == 2 + 2 * static_cast<long>(db.size()), "unexpected output size");
  out.detail = std::to_string(runs) + " configurations byte-identical (" + std::to_string(lines) + " lines each)";
}

// Criterion 4.
void workflow_fidelity(Outcome& out) {
  std::mt19937_64 rng(0xF1602);
  std::vector<Sequence> db = testing::synthetic_database_count(21, 9999, 20, 300);
  const Sequence query = testing::synthetic_protein(rng, 250, "query");
  db.insert(db.begin() + 4321, Sequence{"planted", query.residues});
  for (int i = 0; i < 20; ++i) db.push_back(Sequence{"tie" + std::to_string(i), db[static_cast<std::size_t>(i)].residues});
  db.resize(10'000);
  const DbIndex index = DbIndex::from_sequences(db);
  ScoringScheme scheme = testing::scheme_of("blosum62", 10, 2);
  const Score self = sw_scalar(query, query, scheme);

  std::vector<Score> expected(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) expected[i] = sw_scalar(query.view(), index.residues(i), scheme);
  std::vector<Score> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  std::size_t tied = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) tied += sorted[i] == sorted[i - 1];

  for (const SearchMode mode : {SearchMode::InterSP, SearchMode::InterQP, SearchMode::Intra}) {
    const std::string tag(to_string(mode));
    SearchConfig cfg;
    cfg.scheme = scheme;
    cfg.mode = mode;
    cfg.top_k = index.size();
    const SearchResult r = search(query, index, cfg);
    out.expect(r.scores.size() == index.size() && r.hits.size() == index.size(), tag + ": not one score per subject");
    out.expect(r.scores == expected, tag + ": scores differ from the scalar reference");
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < r.hits.size(); ++i) {
      const Hit& h = r.hits[i];
      seen.insert(h.subject_index);
      out.expect(h.score == expected[h.subject_index] && h.subject_name == index.name(h.subject_index) &&
                     h.subject_length == index.length(h.subject_index),
                 tag + ": hit fields do not match subject " + std::to_string(h.subject_index));
      if (i > 0) {
        const Hit& p = r.hits[i - 1];
        out.expect(p.score > h.score || (p.score == h.score && p.subject_index < h.subject_index),
                   tag + ": ranking order broken at rank " + std::to_string(i));
      }
    }
    out.expect(seen.size() == index.size(), tag + ": duplicate or missing subjects in ranking");
    out.expect(!r.hits.empty() && r.hits[0].subject_name == "planted" && r.hits[0].score == self,
               tag + ": planted copy not first with self score");
    out.expect(r.metrics.cells == query.length() * index.total_residues(), tag + ": cell count");
  }
  out.detail = "10000 subjects x 3 modes, planted copy first with self score " + std::to_string(self) + ", " +
               std::to_string(tied) + " tied scores ordered by index";
}

std::vector<char> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::vector<char>(std::istreambuf_iterator<char>(in), {});
}

void spill(const std::filesystem::path& p, const std::vector<char>& bytes) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::optional<Errc> open_error(const std::filesystem::path& prefix) {
  try {
    DbIndex::open(prefix);
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Criterion 5.
void index_round_trip(Outcome& out) {
  TempDir dir;
  std::mt19937_64 rng(0x1DE8);
  std::size_t total = 0;
  for (int round = 0; round < 20; ++round) {
    std::vector<Sequence> seqs(1 + rng() % 500);
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      seqs[i] = testing::random_sequence(rng, 1, round % 2 ? 40 : 900, "rec_" + std::to_string(round) + "_" + std::to_string(i));
    }
    total += seqs.size();
    const auto prefix = dir / ("db" + std::to_string(round));
    const IndexStats stats = build_index(seqs, prefix);
    const DbIndex index = DbIndex::open(prefix);
    std::vector<Sequence> sorted = seqs;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Sequence& a, const Sequence& b) { return a.length() < b.length(); });
    out.expect(index.mapped(), "index not served from a mapping");
    out.expect(index.size() == seqs.size() && stats.sequences == seqs.size(), "sequence count");
    std::uint64_t residues = 0;
    for (std::size_t i = 0; i < index.size() && i < sorted.size(); ++i) {
      residues += index.length(i);
      out.expect(index.sequence(i) == sorted[i], "record " + std::to_string(i) + " differs after round trip");
      if (i > 0) out.expect(index.length(i - 1) <= index.length(i), "ascending length order broken");
    }
    out.expect(residues == index.total_residues() && residues == stats.residues, "residue total");
  }

  // Corruptions of a small index, each mapped to the error it must raise.
  const std::vector<Sequence> sample{Sequence{"five", encode("ARNDC")}, Sequence{"two", encode("QE")},
                                     Sequence{"nine", encode("GHILKMFPS")}};
  build_index(sample, dir / "small");
  const auto idx = slurp(index_file(dir / "small"));
  const auto seq = slurp(payload_file(dir / "small"));
  struct Case {
    const char* name;
    std::function<void(std::vector<char>&, std::vector<char>&)> damage;
    Errc expected;
  };
  const std::vector<Case> cases{
      {"wrong magic", [](auto& i, auto&) { i[3] ^= 0x20; }, Errc::BadMagic},
      {"short file", [](auto& i, auto&) { i.resize(5); }, Errc::BadMagic},
      {"wrong version", [](auto& i, auto&) { i[8] = 9; }, Errc::VersionMismatch},
      {"truncated header", [](auto& i, auto&) { i.resize(30); }, Errc::TruncatedFile},
      {"truncated record table", [](auto& i, auto&) { i.resize(kIndexHeaderBytes + kRecordBytes + 3); }, Errc::TruncatedFile},
      {"truncated name blob", [](auto& i, auto&) { i.pop_back(); }, Errc::TruncatedFile},
      {"truncated payload", [](auto&, auto& s) { s.resize(s.size() - 9); }, Errc::TruncatedFile},
      {"empty payload", [](auto&, auto& s) { s.clear(); }, Errc::TruncatedFile},
      {"trailing bytes", [](auto& i, auto&) { i.push_back(0); }, Errc::CorruptRecordTable},
      {"length order", [](auto& i, auto&) { i[kIndexHeaderBytes + 8] = 7; }, Errc::CorruptRecordTable},
      {"zero length", [](auto& i, auto&) { i[kIndexHeaderBytes + 8] = 0; }, Errc::CorruptRecordTable},
      {"payload offset", [](auto& i, auto&) { i[kIndexHeaderBytes + kRecordBytes] = 3; }, Errc::CorruptRecordTable},
      {"name offset", [](auto& i, auto&) { i[kIndexHeaderBytes + 12] = 120; }, Errc::CorruptRecordTable},
      {"residue total", [](auto& i, auto&) { i[24] = 17; }, Errc::CorruptRecordTable},
      {"max length", [](auto& i, auto&) { i[32] = 4; }, Errc::CorruptRecordTable},
      {"residue code", [](auto&, auto& s) { s[1] = 31; }, Errc::CorruptRecordTable},
  };
  for (const auto& c : cases) {
    auto i = idx;
    auto s = seq;
    c.damage(i, s);
    spill(index_file(dir / "small"), i);
    spill(payload_file(dir / "small"), s);
    const auto got = open_error(dir / "small");
    out.expect(got == c.expected, std::string(c.name) + ": expected " + std::string(errc_name(c.expected)) + ", got " +
                                      (got ? std::string(errc_name(*got)) : std::string("no error")));
  }
  out.expect(open_error(dir / "absent") == Errc::IoError, "missing files should raise IoError");
  spill(index_file(dir / "small"), idx);
  spill(payload_file(dir / "small"), seq);
  out.expect(!open_error(dir / "small"), "restored index does not open");
  out.detail = "20 databases, " + std::to_string(total) + " records preserved in ascending order; " +
               std::to_string(cases.size() + 1) + " corruption cases raise their errors";
}

// Criterion 6.
void throughput(Outcome& out) {
  const auto db_seqs = testing::synthetic_database(2024, 5'000'000);
  const DbIndex index = DbIndex::from_sequences(db_seqs);
  SearchConfig cfg;
  cfg.scheme = testing::scheme_of("blosum62", 10, 2);
  std::printf("    database: %zu sequences, %llu residues, max length %u, mean length %.0f, workers %zu\n", index.size(),
              static_cast<unsigned long long>(index.total_residues()), index.max_length(),
              static_cast<double>(index.total_residues()) / static_cast<double>(index.size()), cfg.workers);
  std::printf("    %6s %10s %10s %10s %8s\n", "qlen", "inter-sp", "inter-qp", "intra", "sp/qp");
  out.expect(index.total_residues() >= 5'000'000, "database smaller than 5M residues");

  std::mt19937_64 rng(375);
  std::string ratios;
  for (const std::size_t qlen : {144u, 375u, 1000u}) {
    const Sequence query = testing::synthetic_protein(rng, qlen, "q" + std::to_string(qlen));
    double gcups[3];
    std::vector<Score> first;
    int m = 0;
    for (const SearchMode mode : {SearchMode::InterSP, SearchMode::InterQP, SearchMode::Intra}) {
      cfg.mode = mode;
      const SearchResult r = search(query, index, cfg);
      gcups[m++] = r.metrics.gcups;
      out.expect(std::isfinite(r.metrics.gcups) && r.metrics.gcups > 0, "no throughput figure");
      if (first.empty()) first = r.scores;
      out.expect(r.scores == first, std::string(to_string(mode)) + " scores differ at qlen " + std::to_string(qlen));
    }
    const double ratio = gcups[0] / gcups[1];
    std::printf("    %6zu %10.3f %10.3f %10.3f %8.2f\n", qlen, gcups[0], gcups[1], gcups[2], ratio);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%zu:%.2f", ratios.empty() ? "" : " ", qlen, ratio);
    ratios += buf;
  }
  out.detail = "GCUPS reported for 3 modes x 3 query lengths; sp/qp ratio " + ratios;
}

// Criterion 7.
void scheduler_contract(Outcome& out) {
  std::size_t schedules = 0;
  for (const std::size_t items : {1u, 10u, 100u, 10'000u})
    for (const std::size_t workers : {1u, 3u, 8u})
      for (const std::size_t min_chunk : {1u, 16u})
        for (const SchedulePolicy policy : {SchedulePolicy::Guided, SchedulePolicy::Dynamic, SchedulePolicy::Static})
          for (const bool threaded : {false, true}) {
            const std::string where = std::string(to_string(policy)) + " items=" + std::to_string(items) +
                                      " workers=" + std::to_string(workers) + " min=" + std::to_string(min_chunk) +
                                      (threaded ? " threaded" : "");
            ChunkScheduler sched(items, workers, policy, min_chunk);
            std::vector<std::vector<Chunk>> issued(workers);
            if (threaded) {
              std::vector<std::thread> team;
              for (std::size_t w = 0; w < workers; ++w)
                team.emplace_back([&, w] {
                  while (auto c = sched.next_chunk(w)) issued[w].push_back(*c);
                });
              for (auto& t : team) t.join();
            } else {
              // Round-robin in issue order, which fixes the guided sequence.
              std::vector<Chunk> order;
              bool any = true;
              while (any) {
                any = false;
                for (std::size_t w = 0; w < workers; ++w)
                  if (auto c = sched.next_chunk(w)) {
                    issued[w].push_back(*c);
                    order.push_back(*c);
                    any = true;
                  }
              }
              if (policy == SchedulePolicy::Guided) {
                std::size_t remaining = items;
                for (const Chunk& c : order) {
                  const std::size_t want =
                      std::min(remaining, std::max((remaining + 2 * workers - 1) / (2 * workers), min_chunk));
                  out.expect(c.count == want, where + ": guided chunk " + std::to_string(c.count) + " != " +
                                                  std::to_string(want));
                  remaining -= c.count;
                }
                const std::size_t first =
                    std::min(items, std::max((items + 2 * workers - 1) / (2 * workers), min_chunk));
                out.expect(!order.empty() && order.front().first == 0 && order.front().count == first,
                           where + ": guided first chunk");
              }
              if (policy == SchedulePolicy::Dynamic)
                for (std::size_t k = 0; k + 1 < order.size(); ++k)
                  out.expect(order[k].count == min_chunk, where + ": dynamic chunk size");
            }
            std::vector<Chunk> all;
            for (std::size_t w = 0; w < workers; ++w) {
              if (policy == SchedulePolicy::Static)
                out.expect(issued[w].size() <= 1, where + ": static issued more than one span to a worker");
              all.insert(all.end(), issued[w].begin(), issued[w].end());
            }
            std::sort(all.begin(), all.end(), [](const Chunk& a, const Chunk& b) { return a.first < b.first; });
            std::size_t cursor = 0;
            for (const Chunk& c : all) {
              out.expect(c.count > 0 && c.first == cursor, where + ": gap or overlap at " + std::to_string(c.first));
              cursor = c.first + c.count;
            }
            out.expect(cursor == items, where + ": range not covered");
            if (policy == SchedulePolicy::Static) {
              std::size_t lo = items, hi = 0;
              for (std::size_t w = 0; w < workers; ++w) {
                const std::size_t n = issued[w].empty() ? 0 : issued[w][0].count;
                lo = std::min(lo, n);
                hi = std::max(hi, n);
              }
              out.expect(hi - lo <= 1, where + ": static spans unbalanced");
            }
            ++schedules;
          }
  out.detail = std::to_string(schedules) + " schedules partition exactly; guided sizes match the formula";
}

}  // namespace

int main() {
  std::printf("swlane acceptance suite\n");
  std::fflush(stdout);
  int failed = 0;
  failed += !run(1, "oracle equivalence", oracle_equivalence);
  failed += !run(2, "padding invariance", padding_invariance);
  failed += !run(3, "configuration invariance", configuration_invariance);
  failed += !run(4, "workflow fidelity", workflow_fidelity);
  failed += !run(5, "index round-trip", index_round_trip);
  failed += !run(6, "throughput harness", throughput);
  failed += !run(7, "scheduler contract", scheduler_contract);
  std::printf("%d of 7 criteria passed\n", 7 - failed);
  return failed == 0 ? 0 : 1;
}
