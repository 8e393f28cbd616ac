#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swlane/aligned.hpp"
#include "swlane/seqmodel.hpp"

namespace swlane {

using Score = std::int32_t;
using SubstitutionMatrix = std::array<std::array<Score, kCodeSlots>, kCodeSlots>;

inline constexpr int kMaxLanes = 16;
inline constexpr int kDefaultLanes = 16;
inline constexpr int kDefaultScoreBlock = 8;
// Rows covered by a score profile: every real residue plus the padding code.
inline constexpr int kScoreProfileRows = kAlphabetSize + 1;

bool is_supported_width(int lanes) noexcept;

struct GapParams {
  Score extend = 0;       // cost of each further gap residue
  Score open_extend = 0;  // cost of the first gap residue (open + extend)
};

// A gap of k residues costs open + k * extend.
GapParams gap_params(int open, int extend);

struct ScoringScheme {
  std::string name;
  SubstitutionMatrix matrix{};  // rows/columns >= kDummy are zero
  Score gap_extend = 0;
  Score gap_open_extend = 0;

  Score score(ResidueCode a, ResidueCode b) const noexcept { return matrix[a][b]; }
  Score max_abs_entry() const noexcept;
  bool symmetric() const noexcept;
};

// Built-in names: blosum62, blosum50, pam250 (case-insensitive).
std::optional<ScoringScheme> builtin_matrix(std::string_view name);

// Whitespace-separated square matrix: a header row of residue letters, then one
// row per letter starting with its label. Lines starting with '#' are ignored.
ScoringScheme parse_matrix(std::string_view text, std::string name = "custom");
std::string serialize_matrix(const ScoringScheme& scheme);

// Built-in name, or matrix text.
ScoringScheme load_matrix(std::string_view source);

ScoringScheme make_scheme(ScoringScheme matrix, GapParams gaps);

// Sequential-layout query profile: row i slot r = score(query[i], r).
class QueryProfile {
 public:
  QueryProfile() = default;
  QueryProfile(std::span<const ResidueCode> query, const ScoringScheme& scheme);

  std::size_t query_len() const noexcept { return query_len_; }
  std::span<const Score, kCodeSlots> row(std::size_t i) const noexcept {
    return std::span<const Score, kCodeSlots>(rows_.data() + i * kCodeSlots, kCodeSlots);
  }
  std::span<const ResidueCode> query() const noexcept { return query_; }

 private:
  std::size_t query_len_ = 0;
  AlignedVector<Score> rows_;
  std::vector<ResidueCode> query_;
};

QueryProfile build_query_profile(const Sequence& query, const ScoringScheme& scheme);

// W consecutive subjects interleaved position-major: data[p * W + k] is lane k
// at position p. Positions past a member's end (and absent lanes) hold kDummy.
class SequenceProfile {
 public:
  static constexpr std::size_t kNoSource = static_cast<std::size_t>(-1);

  SequenceProfile() = default;

  // Overwrites this profile in place; lane k takes members[k] and records
  // first_source + k as its source index.
  void assign(std::span<const std::span<const ResidueCode>> members, int width,
              std::size_t first_source = 0);

  int width() const noexcept { return width_; }
  std::size_t padded_len() const noexcept { return padded_len_; }
  std::size_t real_lanes() const noexcept { return real_lanes_; }
  // kNoSource for an absent lane.
  std::size_t source(int lane) const noexcept { return sources_[lane]; }
  std::size_t member_length(int lane) const noexcept { return lengths_[lane]; }

  const ResidueCode* row(std::size_t position) const noexcept {
    return data_.data() + position * width_;
  }
  std::span<const ResidueCode> data() const noexcept { return data_; }

 private:
  int width_ = 0;
  std::size_t padded_len_ = 0;
  std::size_t real_lanes_ = 0;
  std::array<std::size_t, kMaxLanes> sources_{};
  std::array<std::size_t, kMaxLanes> lengths_{};
  AlignedVector<ResidueCode> data_;
};

std::size_t round_up(std::size_t value, std::size_t multiple) noexcept;

SequenceProfile build_sequence_profile(std::span<const Sequence> members, int width);

// Substitution scores between every residue code and a block of `block`
// consecutive profile positions: at(r, n)[k] = score(r, profile[j0 + n][k]).
class ScoreProfile {
 public:
  ScoreProfile() = default;

  void assign(const ScoringScheme& scheme, const SequenceProfile& profile, std::size_t j0,
              int block);

  int width() const noexcept { return width_; }
  int block() const noexcept { return block_; }
  std::size_t start() const noexcept { return start_; }
  const Score* at(ResidueCode r, int n) const noexcept {
    return entries_.data() + (static_cast<std::size_t>(r) * block_ + n) * width_;
  }

 private:
  int width_ = 0;
  int block_ = 0;
  std::size_t start_ = 0;
  AlignedVector<Score> entries_;
};

ScoreProfile build_score_profile(const ScoringScheme& scheme, const SequenceProfile& profile,
                                 std::size_t j0, int block = kDefaultScoreBlock);

// Striped query profile: the padded query is cut into W segments of length
// s = Q'/W; group i lane k of table r holds score(query[k * s + i], r).
class StripedQueryProfile {
 public:
  StripedQueryProfile() = default;
  StripedQueryProfile(std::span<const ResidueCode> query, const ScoringScheme& scheme, int width);

  int width() const noexcept { return width_; }
  std::size_t query_len() const noexcept { return query_len_; }
  std::size_t padded_query_len() const noexcept { return segment_len_ * width_; }
  std::size_t segment_len() const noexcept { return segment_len_; }

  // s groups of W scores for residue r.
  const Score* table(ResidueCode r) const noexcept {
    return tables_.data() + static_cast<std::size_t>(r) * segment_len_ * width_;
  }

  // Sequential row for query position i, read back out of the striped tables.
  std::array<Score, kCodeSlots> destripe_row(std::size_t i) const;

 private:
  int width_ = 0;
  std::size_t query_len_ = 0;
  std::size_t segment_len_ = 0;
  AlignedVector<Score> tables_;
};

StripedQueryProfile build_striped_profile(const Sequence& query, const ScoringScheme& scheme,
                                          int width = kDefaultLanes);

}  // namespace swlane
