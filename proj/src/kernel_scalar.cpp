#include <algorithm>
#include <limits>
#include <vector>

#include "swlane/error.hpp"
#include "swlane/kernels.hpp"

namespace swlane {

DpBuffers::DpBuffers(std::size_t capacity, int width)
    : capacity_(capacity),
      width_(width),
      h_row_((capacity + 1) * static_cast<std::size_t>(width), 0),
      gap_row_((capacity + 1) * static_cast<std::size_t>(width), 0),
      aux_row_((capacity + 1) * static_cast<std::size_t>(width), 0) {
  if (!is_supported_width(width)) {
    throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(width));
  }
}

void DpBuffers::zero() {
  std::fill(h_row_.begin(), h_row_.end(), 0);
  std::fill(gap_row_.begin(), gap_row_.end(), 0);
  std::fill(aux_row_.begin(), aux_row_.end(), 0);
}

KernelConfig set_tile_depth(int depth) { return KernelConfig{std::max(depth, 1)}; }

std::size_t tile_passes(std::size_t padded_len, int tile_depth) noexcept {
  if (padded_len == 0) return 0;
  const std::size_t depth = std::min<std::size_t>(std::max(tile_depth, 1), padded_len);
  return (padded_len + depth - 1) / depth;
}

void check_gaps(const ScoringScheme& scheme) {
  if (scheme.gap_extend < 0 || scheme.gap_open_extend < scheme.gap_extend) {
    throw Error(Errc::InvalidArgument, "gap costs need 0 <= extend <= open + extend");
  }
}

void check_overflow(std::size_t query_len, const ScoringScheme& scheme) {
  const auto bound = static_cast<unsigned long long>(query_len) *
                     static_cast<unsigned long long>(scheme.max_abs_entry());
  if (bound >= (1ULL << 31)) {
    throw Error(Errc::OverflowRisk, "query length " + std::to_string(query_len) +
                                        " times max score " +
                                        std::to_string(scheme.max_abs_entry()) +
                                        " exceeds 32-bit lanes");
  }
}

Score sw_scalar(std::span<const ResidueCode> query, std::span<const ResidueCode> subject,
                const ScoringScheme& scheme) {
  if (query.empty() || subject.empty()) throw Error(Errc::InvalidArgument, "empty sequence");
  check_gaps(scheme);
  check_overflow(query.size(), scheme);

  const Score alpha = scheme.gap_extend;
  const Score beta = scheme.gap_open_extend;
  // h[j] = H(i-1, j) and e[j] = E(i-1, j) on entry to row i.
  std::vector<Score> h(subject.size() + 1, 0);
  std::vector<Score> e(subject.size() + 1, 0);
  Score best = 0;

  for (std::size_t i = 1; i <= query.size(); ++i) {
    const auto& row = scheme.matrix[query[i - 1]];
    Score diag = h[0];
    Score left = 0;  // H(i, 0)
    Score f = 0;     // F(i, 0)
    for (std::size_t j = 1; j <= subject.size(); ++j) {
      const Score up_gap = std::max(e[j] - alpha, h[j] - beta);
      f = std::max(f - alpha, left - beta);
      const Score cell = std::max({0, diag + row[subject[j - 1]], up_gap, f});
      diag = h[j];
      h[j] = cell;
      e[j] = up_gap;
      left = cell;
      best = std::max(best, cell);
    }
  }
  return best;
}

Score sw_scalar(const Sequence& query, const Sequence& subject, const ScoringScheme& scheme) {
  return sw_scalar(query.view(), subject.view(), scheme);
}

}  // namespace swlane
