// Throughput comparison: the three lane-parallel kernels inside the threaded
// search engine against the scalar reference on one thread.
//
//   swlane_bench [--residues N] [--workers N] [--reference-subjects N] [--lengths 144,375,1000]

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>

#include "swlane/engine.hpp"
#include "synthetic.hpp"

using namespace swlane;

int main(int argc, char** argv) {
  std::uint64_t residues = 5'000'000;
  std::size_t workers = default_workers();
  std::size_t reference_subjects = 2000;
  std::vector<std::size_t> lengths{144, 375, 1000};

  CLI::App app{"Lane kernel throughput benchmark"};
  app.add_option("--residues", residues, "Synthetic database size in residues")->capture_default_str();
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--reference-subjects", reference_subjects, "Subjects timed with the scalar reference")
      ->capture_default_str();
  app.add_option("--lengths", lengths, "Query lengths")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const auto db_seqs = testing::synthetic_database(2024, residues);
  const DbIndex db = DbIndex::from_sequences(db_seqs);
  std::printf("database: %zu sequences, %llu residues, max length %u; workers %zu\n", db.size(),
              static_cast<unsigned long long>(db.total_residues()), db.max_length(), workers);
  std::printf("%8s %10s %10s %10s %10s %10s\n", "qlen", "scalar", "inter-qp", "inter-sp", "intra", "sp/qp");

  SearchConfig cfg;
  cfg.scheme = make_scheme(*builtin_matrix("blosum62"), gap_params(10, 2));
  cfg.workers = workers;

  std::mt19937_64 rng(7);
  for (const std::size_t qlen : lengths) {
    const Sequence query = testing::synthetic_protein(rng, qlen, "q" + std::to_string(qlen));

    const std::size_t n = std::min(reference_subjects, db.size());
    std::uint64_t ref_cells = 0;
    const auto t0 = std::chrono::steady_clock::now();
    Score sink = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t s = i * db.size() / n;
      sink ^= sw_scalar(query.view(), db.residues(s), cfg.scheme);
      ref_cells += qlen * db.length(s);
    }
    const double ref_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double scalar_gcups = ref_seconds > 0 ? ref_cells / ref_seconds / 1e9 : 0.0;

    double gcups[3];
    const SearchMode modes[3] = {SearchMode::InterQP, SearchMode::InterSP, SearchMode::Intra};
    for (int m = 0; m < 3; ++m) {
      cfg.mode = modes[m];
      gcups[m] = search(query, db, cfg).metrics.gcups;
    }
    std::printf("%8zu %10.3f %10.3f %10.3f %10.3f %10.3f%s\n", qlen, scalar_gcups, gcups[0], gcups[1], gcups[2],
                gcups[1] / gcups[0], sink == -1 ? "!" : "");
  }
  return 0;
}
