#include <algorithm>
#include <utility>

#include "swlane/error.hpp"
#include "swlane/kernels.hpp"
#include "swlane/lanes.hpp"

// Striped intra-sequence kernel. The padded query is split into W segments of
// s positions; lane group i holds query positions {k * s + i}. For each subject
// residue one pass over the s groups updates H and the subject-axis gap E; the
// query-axis gap F runs down each lane's segment. F values that should cross
// from the end of segment k into the start of segment k + 1 are applied by the
// lazy correction loop afterwards.

namespace swlane {

namespace {

using lanes::Vec;

// Lanes whose carried gap can still raise a stored score or outlive the
// main-pass gap at the next position.
template <int W>
inline bool needs_correction(const Vec<W>& f, const Vec<W>& h, Score alpha, Score beta) {
  bool hit = false;
  for (int k = 0; k < W; ++k) hit |= f.v[k] > 0 && f.v[k] - alpha > h.v[k] - beta;
  return hit;
}

template <int W>
Score striped(const StripedQueryProfile& sqp, std::span<const ResidueCode> subject,
              const ScoringScheme& scheme, DpBuffers& buf) {
  const std::size_t segs = sqp.segment_len();
  const Score alpha = scheme.gap_extend;
  const Score beta = scheme.gap_open_extend;

  Score* h_load = buf.h_row();
  Score* h_store = buf.aux_row();
  Score* e_row = buf.gap_row();
  std::fill_n(h_load, segs * W, 0);
  std::fill_n(h_store, segs * W, 0);
  std::fill_n(e_row, segs * W, 0);

  Vec<W> best = lanes::splat<W>(0);
  for (const ResidueCode residue : subject) {
    const Score* prof = sqp.table(residue);
    Vec<W> f = lanes::splat<W>(0);
    Vec<W> h_diag = lanes::shift_up(lanes::load<W>(h_load + (segs - 1) * W));

    for (std::size_t i = 0; i < segs; ++i) {
      Vec<W> h = lanes::add(h_diag, lanes::load<W>(prof + i * W));
      const Vec<W> e = lanes::load<W>(e_row + i * W);
      h = lanes::max0(lanes::max(h, lanes::max(e, f)));
      best = lanes::max(best, h);
      lanes::store<W>(h_store + i * W, h);
      const Vec<W> h_open = lanes::sub(h, beta);
      lanes::store<W>(e_row + i * W, lanes::max(lanes::sub(e, alpha), h_open));
      f = lanes::max(lanes::sub(f, alpha), h_open);
      h_diag = lanes::load<W>(h_load + i * W);
    }

    // Lazy correction; ends once no lane's carry matters. The carry shrinks by
    // alpha per step and lane 0 restarts at zero after every wrap, so with
    // alpha == 0 it still dies out within W wraps.
    f = lanes::shift_up(f);
    std::size_t i = 0;
    for (;;) {
      Vec<W> h = lanes::load<W>(h_store + i * W);
      if (!needs_correction(f, h, alpha, beta)) break;
      h = lanes::max(h, f);
      best = lanes::max(best, h);
      lanes::store<W>(h_store + i * W, h);
      const Vec<W> e = lanes::load<W>(e_row + i * W);
      lanes::store<W>(e_row + i * W, lanes::max(e, lanes::sub(h, beta)));
      f = lanes::sub(f, alpha);
      if (++i == segs) {
        i = 0;
        f = lanes::shift_up(f);
      }
    }
    std::swap(h_load, h_store);
  }

  Score score = 0;
  for (int k = 0; k < W; ++k) score = std::max(score, best.v[k]);
  return score;
}

}  // namespace

Score sw_intra_striped(const StripedQueryProfile& sqp, std::span<const ResidueCode> subject,
                       const ScoringScheme& scheme, DpBuffers& buf) {
  if (sqp.width() != buf.width()) {
    throw Error(Errc::LaneMismatch, "striped profile has " + std::to_string(sqp.width()) +
                                        " lanes, buffers " + std::to_string(buf.width()));
  }
  if (subject.empty()) throw Error(Errc::InvalidArgument, "empty subject");
  if (sqp.padded_query_len() > buf.capacity()) {
    throw Error(Errc::CapacityExceeded, "padded query length " +
                                            std::to_string(sqp.padded_query_len()) +
                                            " exceeds buffer capacity " +
                                            std::to_string(buf.capacity()));
  }
  check_gaps(scheme);
  switch (sqp.width()) {
    case 4: return striped<4>(sqp, subject, scheme, buf);
    case 8: return striped<8>(sqp, subject, scheme, buf);
    case 16: return striped<16>(sqp, subject, scheme, buf);
    default: throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(sqp.width()));
  }
}

}  // namespace swlane
