#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swlane/dbindex.hpp"
#include "swlane/kernels.hpp"
#include "swlane/scoring.hpp"

namespace swlane {

enum class SearchMode { InterSP, InterQP, Intra };
enum class SchedulePolicy { Guided, Dynamic, Static };

std::optional<SearchMode> parse_search_mode(std::string_view text);
std::string_view to_string(SearchMode mode);
// Accepts guided, dynamic, static; auto is an alias for guided.
std::optional<SchedulePolicy> parse_schedule(std::string_view text);
std::string_view to_string(SchedulePolicy policy);

std::size_t default_workers() noexcept;

struct SearchConfig {
  SearchMode mode = SearchMode::InterSP;
  ScoringScheme scheme;
  std::size_t workers = default_workers();
  int lanes = kDefaultLanes;
  int score_block = kDefaultScoreBlock;
  int tile_depth = kDefaultTileDepth;
  SchedulePolicy scheduler = SchedulePolicy::Guided;
  std::size_t min_chunk = 16;
  std::size_t top_k = 10;
};

struct Chunk {
  std::size_t first = 0;
  std::size_t count = 0;
};

// Hands out contiguous item ranges. next_chunk is safe to call concurrently.
//   guided:  max(ceil(remaining / (2 * workers)), min_chunk), clamped
//   dynamic: min_chunk
//   static:  `workers` balanced spans, worker w receives span w once
class ChunkScheduler {
 public:
  ChunkScheduler(std::size_t items, std::size_t workers, SchedulePolicy policy,
                 std::size_t min_chunk);

  std::optional<Chunk> next_chunk(std::size_t worker);

  std::size_t items() const noexcept { return items_; }
  std::size_t workers() const noexcept { return workers_; }

 private:
  std::size_t items_;
  std::size_t workers_;
  SchedulePolicy policy_;
  std::size_t min_chunk_;
  std::mutex mutex_;
  std::size_t cursor_ = 0;
  std::vector<bool> static_taken_;
};

// Balanced contiguous split: the first (items % parts) spans get one extra.
Chunk static_span(std::size_t items, std::size_t parts, std::size_t index) noexcept;

// One DpBuffers per worker, kept for the lifetime of a search.
class BufferPool {
 public:
  explicit BufferPool(std::size_t workers) : slots_(workers) {}

  // Same worker, same or smaller capacity: the buffers already held, untouched.
  DpBuffers& acquire(std::size_t worker, std::size_t capacity, int lanes);

  std::size_t workers() const noexcept { return slots_.size(); }

 private:
  std::vector<std::unique_ptr<DpBuffers>> slots_;
};

struct Hit {
  std::size_t subject_index = 0;  // position in length-sorted order
  std::string subject_name;
  std::uint32_t subject_length = 0;
  Score score = 0;
};

struct SearchMetrics {
  std::uint64_t cells = 0;
  double seconds = 0.0;
  double gcups = 0.0;
};

struct SearchResult {
  std::vector<Hit> hits;      // top_k, score descending then subject index ascending
  std::vector<Score> scores;  // every subject, indexed by sorted position
  SearchMetrics metrics;
};

SearchResult search(const Sequence& query, const DbIndex& index, const SearchConfig& config);

// Full ordering used for ranking: score descending, subject index ascending.
std::vector<std::size_t> rank_subjects(const std::vector<Score>& scores);

}  // namespace swlane
