#pragma once

#include <algorithm>
#include <cstdint>

// Fixed-width integer lane groups. Each operation is a constant-trip loop the
// compiler lowers to whatever vector width the target offers.

namespace swlane::lanes {

template <int W>
struct alignas(W * sizeof(std::int32_t)) Vec {
  std::int32_t v[W];
};

template <int W>
inline Vec<W> splat(std::int32_t x) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = x;
  return r;
}

template <int W>
inline Vec<W> load(const std::int32_t* p) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = p[k];
  return r;
}

template <int W>
inline void store(std::int32_t* p, const Vec<W>& a) {
  for (int k = 0; k < W; ++k) p[k] = a.v[k];
}

template <int W>
inline Vec<W> add(const Vec<W>& a, const Vec<W>& b) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = a.v[k] + b.v[k];
  return r;
}

template <int W>
inline Vec<W> sub(const Vec<W>& a, std::int32_t b) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = a.v[k] - b;
  return r;
}

template <int W>
inline Vec<W> max(const Vec<W>& a, const Vec<W>& b) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = std::max(a.v[k], b.v[k]);
  return r;
}

template <int W>
inline Vec<W> max0(const Vec<W>& a) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = std::max(a.v[k], 0);
  return r;
}

// Lane k takes lane k-1; lane 0 takes zero.
template <int W>
inline Vec<W> shift_up(const Vec<W>& a) {
  Vec<W> r;
  r.v[0] = 0;
  for (int k = 1; k < W; ++k) r.v[k] = a.v[k - 1];
  return r;
}

// r[k] = table[idx[k]]
template <int W>
inline Vec<W> gather(const std::int32_t* table, const std::uint8_t* idx) {
  Vec<W> r;
  for (int k = 0; k < W; ++k) r.v[k] = table[idx[k]];
  return r;
}

// True when a[k] > b[k] in some lane.
template <int W>
inline bool any_greater(const Vec<W>& a, const Vec<W>& b) {
  bool hit = false;
  for (int k = 0; k < W; ++k) hit |= a.v[k] > b.v[k];
  return hit;
}

}  // namespace swlane::lanes
