#include "swlane/dbindex.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <numeric>

#include "swlane/error.hpp"
#include "swlane/scoring.hpp"

namespace swlane {

namespace {

template <class T>
void put_le(std::vector<char>& out, T value) {
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    out.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * b)) & 0xff));
  }
}

template <class T>
T get_le(const char* p) {
  std::uint64_t value = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    value |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[b])) << (8 * b);
  }
  return static_cast<T>(value);
}

std::string errno_text() { return std::strerror(errno); }

struct Layout {
  std::vector<IndexRecord> records;
  std::vector<char> names;
  std::uint64_t total_residues = 0;
  std::uint32_t max_length = 0;
  std::uint64_t payload_bytes = 0;
};

// Stable length order plus offsets; shared by build_index and from_sequences.
Layout plan_layout(std::span<const Sequence> sequences, std::vector<std::size_t>& order) {
  if (sequences.empty()) throw Error(Errc::EmptyDatabase, "no sequences to index");
  order.resize(sequences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sequences[a].length() < sequences[b].length();
  });

  Layout layout;
  layout.records.reserve(sequences.size());
  for (const std::size_t src : order) {
    const auto& seq = sequences[src];
    if (seq.length() == 0) throw Error(Errc::EmptyRecord, "sequence '" + seq.name + "' is empty");
    if (seq.length() > UINT32_MAX) throw Error(Errc::InvalidArgument, "sequence too long");
    if (seq.name.find('\0') != std::string::npos) {
      throw Error(Errc::InvalidArgument, "sequence name contains NUL");
    }
    if (layout.names.size() + seq.name.size() + 1 > UINT32_MAX) {
      throw Error(Errc::InvalidArgument, "name blob exceeds 4 GiB");
    }
    IndexRecord rec;
    rec.payload_offset = layout.payload_bytes;
    rec.length = static_cast<std::uint32_t>(seq.length());
    rec.name_offset = static_cast<std::uint32_t>(layout.names.size());
    layout.names.insert(layout.names.end(), seq.name.begin(), seq.name.end());
    layout.names.push_back('\0');
    layout.payload_bytes += round_up(seq.length(), kPayloadAlignment);
    layout.total_residues += seq.length();
    layout.max_length = std::max(layout.max_length, rec.length);
    layout.records.push_back(rec);
  }
  return layout;
}

void write_file(const std::filesystem::path& path, const char* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot create '" + path.string() + "'");
  out.write(data, static_cast<std::streamsize>(size));
  out.close();
  if (!out) throw Error(Errc::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace

// Read-only whole-file mapping.
class MappedFile {
 public:
  explicit MappedFile(const std::filesystem::path& path) {
    const int fd = ::open(path.c_str(), O_RDONLY);
    if (fd < 0) throw Error(Errc::IoError, "cannot open '" + path.string() + "': " + errno_text());
    struct stat st {};
    if (::fstat(fd, &st) != 0) {
      const auto why = errno_text();
      ::close(fd);
      throw Error(Errc::IoError, "cannot stat '" + path.string() + "': " + why);
    }
    size_ = static_cast<std::size_t>(st.st_size);
    if (size_ > 0) {
      void* p = ::mmap(nullptr, size_, PROT_READ, MAP_PRIVATE, fd, 0);
      if (p == MAP_FAILED) {
        const auto why = errno_text();
        ::close(fd);
        throw Error(Errc::IoError, "cannot map '" + path.string() + "': " + why);
      }
      data_ = static_cast<const char*>(p);
    }
    ::close(fd);
  }
  MappedFile(const MappedFile&) = delete;
  MappedFile& operator=(const MappedFile&) = delete;
  ~MappedFile() {
    if (data_) ::munmap(const_cast<char*>(data_), size_);
  }

  const char* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }

 private:
  const char* data_ = nullptr;
  std::size_t size_ = 0;
};

std::filesystem::path index_file(const std::filesystem::path& prefix) {
  return std::filesystem::path(prefix.string() + ".swidx");
}

std::filesystem::path payload_file(const std::filesystem::path& prefix) {
  return std::filesystem::path(prefix.string() + ".swseq");
}

IndexStats build_index(std::span<const Sequence> sequences, const std::filesystem::path& out_prefix) {
  std::vector<std::size_t> order;
  const Layout layout = plan_layout(sequences, order);

  std::vector<char> header;
  header.reserve(kIndexHeaderBytes + layout.records.size() * kRecordBytes + layout.names.size());
  header.insert(header.end(), kIndexMagic.begin(), kIndexMagic.end());
  put_le<std::uint32_t>(header, kIndexVersion);
  put_le<std::uint32_t>(header, 0);
  put_le<std::uint64_t>(header, layout.records.size());
  put_le<std::uint64_t>(header, layout.total_residues);
  put_le<std::uint32_t>(header, layout.max_length);
  put_le<std::uint32_t>(header, static_cast<std::uint32_t>(layout.names.size()));
  for (const auto& rec : layout.records) {
    put_le<std::uint64_t>(header, rec.payload_offset);
    put_le<std::uint32_t>(header, rec.length);
    put_le<std::uint32_t>(header, rec.name_offset);
  }
  header.insert(header.end(), layout.names.begin(), layout.names.end());

  std::vector<char> payload(layout.payload_bytes, 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& seq = sequences[order[r]];
    std::memcpy(payload.data() + layout.records[r].payload_offset, seq.residues.data(), seq.length());
  }

  write_file(payload_file(out_prefix), payload.data(), payload.size());
  write_file(index_file(out_prefix), header.data(), header.size());
  return IndexStats{layout.records.size(), layout.total_residues, layout.max_length};
}

DbIndex::DbIndex(DbIndex&&) noexcept = default;
DbIndex& DbIndex::operator=(DbIndex&&) noexcept = default;
DbIndex::~DbIndex() = default;

DbIndex DbIndex::open(const std::filesystem::path& prefix) {
  const auto idx_path = index_file(prefix);
  const auto seq_path = payload_file(prefix);
  DbIndex db;
  db.index_map_ = std::make_unique<MappedFile>(idx_path);
  const char* base = db.index_map_->data();
  const std::size_t size = db.index_map_->size();
  const std::string where = " in '" + idx_path.string() + "'";

  if (size < kIndexMagic.size() || std::memcmp(base, kIndexMagic.data(), kIndexMagic.size()) != 0) {
    throw Error(Errc::BadMagic, "missing SWLANE01 magic" + where);
  }
  if (size < kIndexHeaderBytes) throw Error(Errc::TruncatedFile, "header cut short" + where);
  const auto version = get_le<std::uint32_t>(base + 8);
  if (version != kIndexVersion) {
    throw Error(Errc::VersionMismatch, "version " + std::to_string(version) + ", expected " +
                                           std::to_string(kIndexVersion) + where);
  }
  const auto count = get_le<std::uint64_t>(base + 16);
  const auto total = get_le<std::uint64_t>(base + 24);
  const auto max_len = get_le<std::uint32_t>(base + 32);
  const auto name_bytes = get_le<std::uint32_t>(base + 36);

  if (count > (size - kIndexHeaderBytes) / kRecordBytes) {
    throw Error(Errc::TruncatedFile, std::to_string(count) + " records do not fit" + where);
  }
  const std::size_t names_at = kIndexHeaderBytes + static_cast<std::size_t>(count) * kRecordBytes;
  if (size < names_at + name_bytes) throw Error(Errc::TruncatedFile, "name blob cut short" + where);
  if (size > names_at + name_bytes) {
    throw Error(Errc::CorruptRecordTable, "trailing bytes after name blob" + where);
  }
  db.names_ = std::span<const char>(base + names_at, name_bytes);

  auto corrupt = [&](std::size_t i, const std::string& why) {
    throw Error(Errc::CorruptRecordTable, "record " + std::to_string(i) + ": " + why + where);
  };
  db.records_.resize(static_cast<std::size_t>(count));
  std::uint64_t expected_offset = 0;
  std::uint64_t residues = 0;
  std::uint32_t longest = 0;
  for (std::size_t i = 0; i < db.records_.size(); ++i) {
    const char* p = base + kIndexHeaderBytes + i * kRecordBytes;
    IndexRecord rec{get_le<std::uint64_t>(p), get_le<std::uint32_t>(p + 8),
                    get_le<std::uint32_t>(p + 12)};
    if (rec.length == 0) corrupt(i, "zero length");
    if (i > 0 && rec.length < db.records_[i - 1].length) corrupt(i, "length order violated");
    if (rec.payload_offset != expected_offset) corrupt(i, "unexpected payload offset");
    if (rec.name_offset >= name_bytes) corrupt(i, "name offset out of range");
    if (std::memchr(base + names_at + rec.name_offset, '\0', name_bytes - rec.name_offset) == nullptr) {
      corrupt(i, "unterminated name");
    }
    expected_offset += round_up(rec.length, kPayloadAlignment);
    residues += rec.length;
    longest = std::max(longest, rec.length);
    db.records_[i] = rec;
  }
  if (residues != total) throw Error(Errc::CorruptRecordTable, "residue total mismatch" + where);
  if (longest != max_len) throw Error(Errc::CorruptRecordTable, "max length mismatch" + where);
  db.total_residues_ = total;
  db.max_length_ = max_len;

  db.payload_map_ = std::make_unique<MappedFile>(seq_path);
  if (db.payload_map_->size() < expected_offset) {
    throw Error(Errc::TruncatedFile, "payload holds " + std::to_string(db.payload_map_->size()) +
                                         " bytes, records need " + std::to_string(expected_offset) +
                                         " in '" + seq_path.string() + "'");
  }
  db.payload_ = std::span<const ResidueCode>(
      reinterpret_cast<const ResidueCode*>(db.payload_map_->data()), db.payload_map_->size());
  // Kernels index 32-slot score rows by residue code.
  for (std::size_t i = 0; i < db.records_.size(); ++i) {
    for (const auto code : db.residues(i)) {
      if (code >= kAlphabetSize) {
        throw Error(Errc::CorruptRecordTable, "record " + std::to_string(i) +
                                                  ": residue code out of range in '" +
                                                  seq_path.string() + "'");
      }
    }
  }
  return db;
}

DbIndex DbIndex::from_sequences(std::span<const Sequence> sequences) {
  std::vector<std::size_t> order;
  Layout layout = plan_layout(sequences, order);
  DbIndex db;
  db.owned_payload_.assign(layout.payload_bytes, 0);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& seq = sequences[order[r]];
    std::copy(seq.residues.begin(), seq.residues.end(),
              db.owned_payload_.begin() + static_cast<std::ptrdiff_t>(layout.records[r].payload_offset));
  }
  db.owned_names_ = std::move(layout.names);
  db.records_ = std::move(layout.records);
  db.total_residues_ = layout.total_residues;
  db.max_length_ = layout.max_length;
  db.payload_ = db.owned_payload_;
  db.names_ = db.owned_names_;
  return db;
}

std::string_view DbIndex::name(std::size_t i) const noexcept {
  return std::string_view(names_.data() + records_[i].name_offset);
}

Sequence DbIndex::sequence(std::size_t i) const {
  const auto r = residues(i);
  return Sequence{std::string(name(i)), std::vector<ResidueCode>(r.begin(), r.end())};
}

std::size_t work_items(const DbIndex& index, WorkMode mode, int width) {
  if (mode == WorkMode::Intra) return index.size();
  const auto w = static_cast<std::size_t>(std::max(width, 1));
  return (index.size() + w - 1) / w;
}

}  // namespace swlane
