#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "swlane/aligned.hpp"
#include "swlane/scoring.hpp"

namespace swlane {

// Per-worker linear-space DP state. Rows hold (capacity + 1) lane groups of W
// scores: one row of H and one row of the gap state carried between outer
// iterations. Allocated once and reused across alignments.
class DpBuffers {
 public:
  DpBuffers() = default;
  DpBuffers(std::size_t capacity, int width);

  std::size_t capacity() const noexcept { return capacity_; }
  int width() const noexcept { return width_; }

  Score* h_row() noexcept { return h_row_.data(); }
  Score* gap_row() noexcept { return gap_row_.data(); }
  // Second H row for the striped kernel, which ping-pongs between columns.
  Score* aux_row() noexcept { return aux_row_.data(); }
  std::size_t row_scores() const noexcept { return h_row_.size(); }

  void zero();

 private:
  std::size_t capacity_ = 0;
  int width_ = 0;
  AlignedVector<Score> h_row_;
  AlignedVector<Score> gap_row_;
  AlignedVector<Score> aux_row_;
};

struct LaneScores {
  int width = 0;
  std::array<Score, kMaxLanes> scores{};

  std::span<const Score> view() const noexcept { return {scores.data(), static_cast<std::size_t>(width)}; }
  Score operator[](int lane) const noexcept { return scores[lane]; }
};

inline constexpr int kDefaultTileDepth = 4;

struct KernelConfig {
  int tile_depth = kDefaultTileDepth;
};

// Tile depth T: inter-sequence kernels advance T subject positions per pass
// over the query. Values below 1 are raised to 1.
KernelConfig set_tile_depth(int depth);

// Number of passes over the query for a profile of padded length L.
std::size_t tile_passes(std::size_t padded_len, int tile_depth) noexcept;

// Throws InvalidArgument unless 0 <= gap_extend <= gap_open_extend.
void check_gaps(const ScoringScheme& scheme);

// Throws OverflowRisk when query_len * max|score| cannot be held in 31 bits.
void check_overflow(std::size_t query_len, const ScoringScheme& scheme);

// Scalar linear-space reference.
Score sw_scalar(std::span<const ResidueCode> query, std::span<const ResidueCode> subject,
                const ScoringScheme& scheme);
Score sw_scalar(const Sequence& query, const Sequence& subject, const ScoringScheme& scheme);

// One alignment per lane, substitution scores gathered from the query profile.
LaneScores sw_inter_qp(const QueryProfile& qp, const SequenceProfile& sp,
                       const ScoringScheme& scheme, DpBuffers& buf, KernelConfig cfg = {});

// One alignment per lane, substitution scores read from a score profile
// rebuilt every `block` subject positions. `score_profile` is scratch.
LaneScores sw_inter_sp(const ScoringScheme& scheme, const SequenceProfile& sp,
                       std::span<const ResidueCode> query, DpBuffers& buf,
                       int block = kDefaultScoreBlock, KernelConfig cfg = {},
                       ScoreProfile* score_profile = nullptr);

// Striped single-pair kernel with lazy cross-segment gap correction.
Score sw_intra_striped(const StripedQueryProfile& sqp, std::span<const ResidueCode> subject,
                       const ScoringScheme& scheme, DpBuffers& buf);

}  // namespace swlane
