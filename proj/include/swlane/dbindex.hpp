#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "swlane/seqmodel.hpp"

namespace swlane {

// On-disk layout, little-endian:
//   <prefix>.swidx  "SWLANE01", u32 version, u32 reserved, u64 numSequences,
//                   u64 totalResidues, u32 maxLen, u32 nameBlobBytes,
//                   numSequences x {u64 payloadOffset, u32 length, u32 nameOffset},
//                   name blob of NUL-terminated headers
//   <prefix>.swseq  residue codes per record, each zero-padded to 8 bytes
inline constexpr std::string_view kIndexMagic = "SWLANE01";
inline constexpr std::uint32_t kIndexVersion = 1;
inline constexpr std::size_t kIndexHeaderBytes = 40;
inline constexpr std::size_t kRecordBytes = 16;
inline constexpr std::size_t kPayloadAlignment = 8;

struct IndexRecord {
  std::uint64_t payload_offset = 0;
  std::uint32_t length = 0;
  std::uint32_t name_offset = 0;
};

struct IndexStats {
  std::uint64_t sequences = 0;
  std::uint64_t residues = 0;
  std::uint32_t max_length = 0;
};

std::filesystem::path index_file(const std::filesystem::path& prefix);
std::filesystem::path payload_file(const std::filesystem::path& prefix);

// Stable sort by ascending length, then writes both files.
IndexStats build_index(std::span<const Sequence> sequences, const std::filesystem::path& out_prefix);

class MappedFile;

// Length-sorted, immutable database. Either mapped from disk or held in memory.
class DbIndex {
 public:
  static DbIndex open(const std::filesystem::path& prefix);
  // Same ordering and layout as build_index + open, without touching disk.
  static DbIndex from_sequences(std::span<const Sequence> sequences);

  DbIndex(DbIndex&&) noexcept;
  DbIndex& operator=(DbIndex&&) noexcept;
  ~DbIndex();

  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  std::uint64_t total_residues() const noexcept { return total_residues_; }
  std::uint32_t max_length() const noexcept { return max_length_; }

  const IndexRecord& record(std::size_t i) const noexcept { return records_[i]; }
  std::uint32_t length(std::size_t i) const noexcept { return records_[i].length; }
  std::span<const ResidueCode> residues(std::size_t i) const noexcept {
    return payload_.subspan(records_[i].payload_offset, records_[i].length);
  }
  std::string_view name(std::size_t i) const noexcept;
  Sequence sequence(std::size_t i) const;

  // True when the payload is served straight from a file mapping.
  bool mapped() const noexcept { return payload_map_ != nullptr; }

 private:
  DbIndex() = default;

  std::vector<IndexRecord> records_;
  std::uint64_t total_residues_ = 0;
  std::uint32_t max_length_ = 0;
  std::span<const ResidueCode> payload_;
  std::span<const char> names_;

  std::unique_ptr<MappedFile> index_map_;
  std::unique_ptr<MappedFile> payload_map_;
  std::vector<ResidueCode> owned_payload_;
  std::vector<char> owned_names_;
};

enum class WorkMode { Inter, Intra };

// Inter: ceil(n / W) profile groups of consecutive records. Intra: n.
std::size_t work_items(const DbIndex& index, WorkMode mode, int width);

}  // namespace swlane
