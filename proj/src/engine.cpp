#include "swlane/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swlane/error.hpp"

namespace swlane {

namespace {

using SubjectScore = std::pair<std::size_t, Score>;

// Runs setup(team_size) once, then body(worker_id) on every thread of a team
// of up to `workers` threads.
template <class Setup, class Body>
void run_team(std::size_t workers, Setup&& setup, Body&& body) {
#ifdef _OPENMP
#pragma omp parallel num_threads(static_cast<int>(workers))
  {
#pragma omp single
    setup(static_cast<std::size_t>(omp_get_num_threads()));
    body(static_cast<std::size_t>(omp_get_thread_num()));
  }
#else
  setup(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) threads.emplace_back([&body, w] { body(w); });
  for (auto& t : threads) t.join();
#endif
}

bool ranks_before(const std::vector<Score>& scores, std::size_t a, std::size_t b) {
  if (scores[a] != scores[b]) return scores[a] > scores[b];
  return a < b;
}

}  // namespace

std::optional<SearchMode> parse_search_mode(std::string_view text) {
  if (text == "inter-sp") return SearchMode::InterSP;
  if (text == "inter-qp") return SearchMode::InterQP;
  if (text == "intra") return SearchMode::Intra;
  return std::nullopt;
}

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::InterSP: return "inter-sp";
    case SearchMode::InterQP: return "inter-qp";
    case SearchMode::Intra: return "intra";
  }
  return "?";
}

std::optional<SchedulePolicy> parse_schedule(std::string_view text) {
  if (text == "guided" || text == "auto") return SchedulePolicy::Guided;
  if (text == "dynamic") return SchedulePolicy::Dynamic;
  if (text == "static") return SchedulePolicy::Static;
  return std::nullopt;
}

std::string_view to_string(SchedulePolicy policy) {
  switch (policy) {
    case SchedulePolicy::Guided: return "guided";
    case SchedulePolicy::Dynamic: return "dynamic";
    case SchedulePolicy::Static: return "static";
  }
  return "?";
}

std::size_t default_workers() noexcept {
  return std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
}

std::vector<std::size_t> rank_subjects(const std::vector<Score>& scores) {
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ranks_before(scores, a, b); });
  return order;
}

SearchResult search(const Sequence& query, const DbIndex& index, const SearchConfig& config) {
  if (query.length() == 0) throw Error(Errc::InvalidArgument, "empty query");
  if (index.empty()) throw Error(Errc::EmptyDatabase, "database has no sequences");
  if (config.workers < 1) throw Error(Errc::InvalidArgument, "need at least one worker");
  if (config.top_k < 1) throw Error(Errc::InvalidArgument, "top_k must be at least 1");
  if (!is_supported_width(config.lanes)) {
    throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(config.lanes));
  }
  if (config.mode == SearchMode::InterSP && (config.score_block < 1 || 8 % config.score_block != 0)) {
    // Profiles are padded to multiples of 8, so the block must divide 8.
    throw Error(Errc::BlockMismatch, "score block " + std::to_string(config.score_block) +
                                         " does not divide the profile padding of 8");
  }
  const ScoringScheme& scheme = config.scheme;
  check_gaps(scheme);
  check_overflow(query.length(), scheme);

  const int lanes = config.lanes;
  const KernelConfig kernel_cfg = set_tile_depth(config.tile_depth);
  const bool intra = config.mode == SearchMode::Intra;

  // Stage (i): whatever profile the mode needs.
  QueryProfile query_profile;
  StripedQueryProfile striped_profile;
  std::size_t capacity = query.length();
  if (config.mode == SearchMode::InterQP) query_profile = build_query_profile(query, scheme);
  if (intra) {
    striped_profile = build_striped_profile(query, scheme, lanes);
    capacity = striped_profile.padded_query_len();
  }

  const std::size_t subjects = index.size();
  const std::size_t items = work_items(index, intra ? WorkMode::Intra : WorkMode::Inter, lanes);
  const std::size_t workers = config.workers;

  BufferPool pool(workers);
  std::vector<std::vector<SubjectScore>> partial(workers);
  std::optional<ChunkScheduler> scheduler;
  std::atomic<bool> failed{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  // Stages (ii) and (iii): workers drain the scheduler, then join.
  const auto start = std::chrono::steady_clock::now();
  auto setup = [&](std::size_t team) {
    scheduler.emplace(items, team, config.scheduler, config.min_chunk);
  };
  run_team(workers, setup, [&](std::size_t worker) {
    try {
      DpBuffers& buffers = pool.acquire(worker, capacity, lanes);
      auto& out = partial[worker];
      SequenceProfile profile;
      ScoreProfile score_profile;
      std::vector<std::span<const ResidueCode>> members;
      members.reserve(static_cast<std::size_t>(lanes));

      while (!failed.load(std::memory_order_relaxed)) {
        const auto chunk = scheduler->next_chunk(worker);
        if (!chunk) break;
        for (std::size_t item = chunk->first; item < chunk->first + chunk->count; ++item) {
          if (intra) {
            out.emplace_back(item, sw_intra_striped(striped_profile, index.residues(item), scheme, buffers));
            continue;
          }
          const std::size_t first = item * static_cast<std::size_t>(lanes);
          const std::size_t count = std::min<std::size_t>(lanes, subjects - first);
          members.clear();
          for (std::size_t s = first; s < first + count; ++s) members.push_back(index.residues(s));
          profile.assign(members, lanes, first);
          const LaneScores lane_scores =
              config.mode == SearchMode::InterQP
                  ? sw_inter_qp(query_profile, profile, scheme, buffers, kernel_cfg)
                  : sw_inter_sp(scheme, profile, query.view(), buffers, config.score_block,
                                kernel_cfg, &score_profile);
          for (std::size_t k = 0; k < count; ++k) out.emplace_back(first + k, lane_scores[static_cast<int>(k)]);
        }
      }
    } catch (...) {
      failed.store(true);
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  const auto stop = std::chrono::steady_clock::now();
  if (failure) std::rethrow_exception(failure);

  SearchResult result;
  result.scores.assign(subjects, -1);
  for (const auto& list : partial) {
    for (const auto& [subject, score] : list) result.scores[subject] = score;
  }
  for (std::size_t s = 0; s < subjects; ++s) {
    if (result.scores[s] < 0) {
      throw Error(Errc::InvalidArgument, "subject " + std::to_string(s) + " was never scored");
    }
  }

  result.metrics.cells = static_cast<std::uint64_t>(query.length()) * index.total_residues();
  result.metrics.seconds = std::chrono::duration<double>(stop - start).count();
  result.metrics.gcups = result.metrics.seconds > 0.0
                             ? static_cast<double>(result.metrics.cells) / result.metrics.seconds / 1e9
                             : 0.0;

  // Stage (iv): rank.
  const std::size_t k = std::min(config.top_k, subjects);
  std::vector<std::size_t> order(subjects);
  for (std::size_t i = 0; i < subjects; ++i) order[i] = i;
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) { return ranks_before(result.scores, a, b); });
  result.hits.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t s = order[r];
    result.hits.push_back(Hit{s, std::string(index.name(s)), index.length(s), result.scores[s]});
  }
  return result;
}

}  // namespace swlane
