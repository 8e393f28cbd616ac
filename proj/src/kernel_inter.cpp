#include <algorithm>
#include <vector>

#include "swlane/error.hpp"
#include "swlane/kernels.hpp"
#include "swlane/lanes.hpp"

// Inter-sequence kernels: each lane aligns the query against one member of a
// sequence profile. The outer loop walks subject positions in tiles of T; the
// inner loop walks the whole query once per tile. Per query position the
// buffers hold H and the subject-axis gap of the last column of the previous
// tile; the query-axis gap and H of the row above live in per-tile registers.

namespace swlane {

namespace {

using lanes::Vec;

constexpr int kStackTile = 16;

struct TileState {
  Score alpha;
  Score beta;
  std::size_t query_len;
  Score* h_row;
  Score* gap_row;
};

// Columns [j0, j0 + depth) against the whole query. `subst(i, t)` yields the
// lane scores of query position i against tile column t. kDepth > 0 fixes the
// depth at compile time.
template <int W, int kDepth, class Subst>
inline void tile_pass(const TileState& st, int depth, Vec<W>* up, Vec<W>* up_gap, Vec<W>& best,
                      Subst&& subst) {
  const int n = kDepth > 0 ? kDepth : depth;
  for (int t = 0; t < n; ++t) {
    up[t] = lanes::splat<W>(0);
    up_gap[t] = lanes::splat<W>(0);
  }
  Vec<W> diag_next = lanes::splat<W>(0);
  Vec<W> acc = best;
  for (std::size_t i = 1; i <= st.query_len; ++i) {
    Score* h_slot = st.h_row + i * W;
    Score* gap_slot = st.gap_row + i * W;
    Vec<W> left = lanes::load<W>(h_slot);
    Vec<W> left_gap = lanes::load<W>(gap_slot);
    Vec<W> diag = diag_next;
    diag_next = left;
    for (int t = 0; t < n; ++t) {
      const Vec<W> f = lanes::max(lanes::sub(left_gap, st.alpha), lanes::sub(left, st.beta));
      const Vec<W> e = lanes::max(lanes::sub(up_gap[t], st.alpha), lanes::sub(up[t], st.beta));
      Vec<W> h = lanes::max0(lanes::add(diag, subst(i - 1, t)));
      h = lanes::max(h, lanes::max(e, f));
      diag = up[t];
      up[t] = h;
      up_gap[t] = e;
      left = h;
      left_gap = f;
      acc = lanes::max(acc, h);
    }
    lanes::store<W>(h_slot, left);
    lanes::store<W>(gap_slot, left_gap);
  }
  best = acc;
}

template <int W, class Subst>
inline void run_tile(const TileState& st, int depth, int full_depth, std::vector<Vec<W>>& spill,
                     Vec<W>& best, Subst&& subst) {
  if (depth > kStackTile) {
    spill.resize(2 * static_cast<std::size_t>(depth));
    tile_pass<W, 0>(st, depth, spill.data(), spill.data() + depth, best, subst);
    return;
  }
  Vec<W> up[kStackTile];
  Vec<W> up_gap[kStackTile];
  if (depth == full_depth) {
    switch (depth) {
      case 1: return tile_pass<W, 1>(st, depth, up, up_gap, best, subst);
      case 2: return tile_pass<W, 2>(st, depth, up, up_gap, best, subst);
      case 4: return tile_pass<W, 4>(st, depth, up, up_gap, best, subst);
      case 8: return tile_pass<W, 8>(st, depth, up, up_gap, best, subst);
      default: break;
    }
  }
  tile_pass<W, 0>(st, depth, up, up_gap, best, subst);
}

void check_inputs(const SequenceProfile& sp, std::size_t query_len, const ScoringScheme& scheme,
                  DpBuffers& buf) {
  if (sp.width() != buf.width()) {
    throw Error(Errc::LaneMismatch, "profile has " + std::to_string(sp.width()) +
                                        " lanes, buffers " + std::to_string(buf.width()));
  }
  if (query_len == 0) throw Error(Errc::InvalidArgument, "empty query");
  if (query_len > buf.capacity()) {
    throw Error(Errc::CapacityExceeded, "query length " + std::to_string(query_len) +
                                            " exceeds buffer capacity " +
                                            std::to_string(buf.capacity()));
  }
  check_gaps(scheme);
}

template <int W>
LaneScores finish(const Vec<W>& best, const SequenceProfile& sp) {
  LaneScores out;
  out.width = W;
  for (int k = 0; k < W; ++k) out.scores[k] = sp.source(k) == SequenceProfile::kNoSource ? 0 : best.v[k];
  return out;
}

template <int W>
LaneScores inter_qp(const QueryProfile& qp, const SequenceProfile& sp, const ScoringScheme& scheme,
                    DpBuffers& buf, int tile_depth) {
  const std::size_t q = qp.query_len();
  std::fill_n(buf.h_row(), (q + 1) * W, 0);
  std::fill_n(buf.gap_row(), (q + 1) * W, 0);
  const TileState st{scheme.gap_extend, scheme.gap_open_extend, q, buf.h_row(), buf.gap_row()};

  const std::size_t len = sp.padded_len();
  const int depth = static_cast<int>(std::min<std::size_t>(std::max(tile_depth, 1), len));
  std::vector<Vec<W>> spill;
  Vec<W> best = lanes::splat<W>(0);
  for (std::size_t j0 = 0; j0 < len; j0 += depth) {
    const int n = static_cast<int>(std::min<std::size_t>(depth, len - j0));
    const ResidueCode* columns = sp.row(j0);
    run_tile<W>(st, n, depth, spill, best, [&](std::size_t i, int t) {
      return lanes::gather<W>(qp.row(i).data(), columns + static_cast<std::size_t>(t) * W);
    });
  }
  return finish<W>(best, sp);
}

template <int W>
LaneScores inter_sp(const ScoringScheme& scheme, const SequenceProfile& sp,
                    std::span<const ResidueCode> query, DpBuffers& buf, int block, int tile_depth,
                    ScoreProfile& score_profile) {
  const std::size_t q = query.size();
  std::fill_n(buf.h_row(), (q + 1) * W, 0);
  std::fill_n(buf.gap_row(), (q + 1) * W, 0);
  const TileState st{scheme.gap_extend, scheme.gap_open_extend, q, buf.h_row(), buf.gap_row()};

  const std::size_t len = sp.padded_len();
  // A tile never straddles two score-profile blocks.
  const int depth = std::min({std::max(tile_depth, 1), block, static_cast<int>(len)});
  std::vector<Vec<W>> spill;
  Vec<W> best = lanes::splat<W>(0);
  const ResidueCode* residues = query.data();
  for (std::size_t b0 = 0; b0 < len; b0 += block) {
    score_profile.assign(scheme, sp, b0, block);
    for (int t0 = 0; t0 < block; t0 += depth) {
      const int n = std::min(depth, block - t0);
      run_tile<W>(st, n, depth, spill, best, [&](std::size_t i, int t) {
        return lanes::load<W>(score_profile.at(residues[i], t0 + t));
      });
    }
  }
  return finish<W>(best, sp);
}

}  // namespace

LaneScores sw_inter_qp(const QueryProfile& qp, const SequenceProfile& sp,
                       const ScoringScheme& scheme, DpBuffers& buf, KernelConfig cfg) {
  check_inputs(sp, qp.query_len(), scheme, buf);
  switch (sp.width()) {
    case 4: return inter_qp<4>(qp, sp, scheme, buf, cfg.tile_depth);
    case 8: return inter_qp<8>(qp, sp, scheme, buf, cfg.tile_depth);
    case 16: return inter_qp<16>(qp, sp, scheme, buf, cfg.tile_depth);
    default: throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(sp.width()));
  }
}

LaneScores sw_inter_sp(const ScoringScheme& scheme, const SequenceProfile& sp,
                       std::span<const ResidueCode> query, DpBuffers& buf, int block,
                       KernelConfig cfg, ScoreProfile* score_profile) {
  check_inputs(sp, query.size(), scheme, buf);
  if (block < 1 || sp.padded_len() % static_cast<std::size_t>(block) != 0) {
    throw Error(Errc::BlockMismatch, "score block " + std::to_string(block) +
                                         " does not divide profile length " +
                                         std::to_string(sp.padded_len()));
  }
  for (auto r : query) {
    if (r >= kScoreProfileRows) throw Error(Errc::InvalidArgument, "query holds a reserved code");
  }
  ScoreProfile local;
  ScoreProfile& scratch = score_profile ? *score_profile : local;
  switch (sp.width()) {
    case 4: return inter_sp<4>(scheme, sp, query, buf, block, cfg.tile_depth, scratch);
    case 8: return inter_sp<8>(scheme, sp, query, buf, block, cfg.tile_depth, scratch);
    case 16: return inter_sp<16>(scheme, sp, query, buf, block, cfg.tile_depth, scratch);
    default: throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(sp.width()));
  }
}

}  // namespace swlane
