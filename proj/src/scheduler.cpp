#include <algorithm>

#include "swlane/engine.hpp"
#include "swlane/error.hpp"

namespace swlane {

Chunk static_span(std::size_t items, std::size_t parts, std::size_t index) noexcept {
  if (parts == 0 || index >= parts) return Chunk{items, 0};
  const std::size_t base = items / parts;
  const std::size_t extra = items % parts;
  const std::size_t first = index * base + std::min(index, extra);
  return Chunk{first, base + (index < extra ? 1 : 0)};
}

ChunkScheduler::ChunkScheduler(std::size_t items, std::size_t workers, SchedulePolicy policy,
                               std::size_t min_chunk)
    : items_(items),
      workers_(std::max<std::size_t>(workers, 1)),
      policy_(policy),
      min_chunk_(std::max<std::size_t>(min_chunk, 1)),
      static_taken_(policy == SchedulePolicy::Static ? workers_ : 0, false) {}

std::optional<Chunk> ChunkScheduler::next_chunk(std::size_t worker) {
  std::lock_guard lock(mutex_);
  if (policy_ == SchedulePolicy::Static) {
    if (worker >= workers_ || static_taken_[worker]) return std::nullopt;
    static_taken_[worker] = true;
    const Chunk span = static_span(items_, workers_, worker);
    if (span.count == 0) return std::nullopt;
    return span;
  }

  const std::size_t remaining = items_ - cursor_;
  if (remaining == 0) return std::nullopt;
  std::size_t size = min_chunk_;
  if (policy_ == SchedulePolicy::Guided) {
    const std::size_t share = (remaining + 2 * workers_ - 1) / (2 * workers_);
    size = std::max(share, min_chunk_);
  }
  size = std::min(size, remaining);
  const Chunk chunk{cursor_, size};
  cursor_ += size;
  return chunk;
}

DpBuffers& BufferPool::acquire(std::size_t worker, std::size_t capacity, int lanes) {
  if (worker >= slots_.size()) {
    throw Error(Errc::InvalidArgument, "worker " + std::to_string(worker) + " outside pool of " +
                                           std::to_string(slots_.size()));
  }
  auto& slot = slots_[worker];
  if (!slot || slot->capacity() < capacity || slot->width() != lanes) {
    slot = std::make_unique<DpBuffers>(capacity, lanes);
  }
  return *slot;
}

}  // namespace swlane
