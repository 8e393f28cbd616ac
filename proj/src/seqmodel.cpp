#include "swlane/seqmodel.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "swlane/error.hpp"

namespace swlane {

namespace {

constexpr std::array<std::int8_t, 26> make_letter_table() {
  std::array<std::int8_t, 26> table{};
  for (auto& slot : table) slot = -1;
  for (int code = 0; code < kAlphabetSize; ++code) {
    const char ch = kAlphabet[code];
    if (ch >= 'A' && ch <= 'Z') table[ch - 'A'] = static_cast<std::int8_t>(code);
  }
  return table;
}

constexpr auto kLetterTable = make_letter_table();
constexpr ResidueCode kUnknown = 22;  // 'X'
static_assert(kAlphabet[kUnknown] == 'X');

bool is_blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; }

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidResidue: return "InvalidResidue";
    case Errc::MalformedFasta: return "MalformedFasta";
    case Errc::EmptyRecord: return "EmptyRecord";
    case Errc::UnknownMatrix: return "UnknownMatrix";
    case Errc::MalformedMatrix: return "MalformedMatrix";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyProfile: return "EmptyProfile";
    case Errc::BlockOutOfRange: return "BlockOutOfRange";
    case Errc::BlockMismatch: return "BlockMismatch";
    case Errc::OverflowRisk: return "OverflowRisk";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::LaneMismatch: return "LaneMismatch";
    case Errc::EmptyDatabase: return "EmptyDatabase";
    case Errc::IoError: return "IoError";
    case Errc::BadMagic: return "BadMagic";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::TruncatedFile: return "TruncatedFile";
    case Errc::CorruptRecordTable: return "CorruptRecordTable";
  }
  return "Unknown";
}

ResidueCode encode_residue(char ch, std::size_t position) {
  if (ch == '*') return 23;
  char upper = ch;
  if (upper >= 'a' && upper <= 'z') upper = static_cast<char>(upper - 'a' + 'A');
  if (upper >= 'A' && upper <= 'Z') {
    const auto code = kLetterTable[upper - 'A'];
    return code < 0 ? kUnknown : static_cast<ResidueCode>(code);
  }
  std::ostringstream msg;
  msg << "byte 0x" << std::hex << (static_cast<unsigned>(static_cast<unsigned char>(ch)))
      << std::dec << " at offset " << position << " is not a residue letter";
  throw InvalidResidueError(ch, position, msg.str());
}

char decode_residue(ResidueCode code) {
  if (code >= kAlphabetSize) {
    throw Error(Errc::InvalidArgument, "residue code " + std::to_string(code) + " has no letter");
  }
  return kAlphabet[code];
}

std::vector<ResidueCode> encode(std::string_view letters) {
  std::vector<ResidueCode> out;
  out.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) out.push_back(encode_residue(letters[i], i));
  return out;
}

std::string decode(std::span<const ResidueCode> codes) {
  std::string out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(decode_residue(code));
  return out;
}

std::vector<Sequence> parse_fasta(std::string_view text) {
  std::vector<Sequence> records;
  std::size_t pos = 0;

  // Blank lines ahead of the first header are tolerated; anything else is not.
  while (pos < text.size() && (is_blank(text[pos]) || text[pos] == '\n')) ++pos;
  if (pos == text.size()) return records;
  if (text[pos] != '>') {
    throw Error(Errc::MalformedFasta,
                "input does not start with a '>' header (offset " + std::to_string(pos) + ")");
  }

  auto finish = [&records]() {
    if (!records.empty() && records.back().residues.empty()) {
      throw Error(Errc::EmptyRecord, "record '" + records.back().name + "' has no residues");
    }
  };

  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t line_start = pos;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!line.empty() && line.front() == '>') {
      finish();
      records.push_back(Sequence{std::string(line.substr(1)), {}});
      continue;
    }
    auto& residues = records.back().residues;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (is_blank(ch)) continue;
      try {
        residues.push_back(encode_residue(ch, line_start + i));
      } catch (const InvalidResidueError& e) {
        throw InvalidResidueError(e.byte(), e.position(),
                                  std::string(e.what()) + " in record '" + records.back().name + "'");
      }
    }
  }
  finish();
  return records;
}

std::vector<Sequence> read_fasta(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "failed reading '" + path + "'");
  return parse_fasta(buffer.str());
}

std::string to_fasta(std::span<const Sequence> sequences, std::size_t line_width) {
  if (line_width == 0) line_width = 60;
  std::string out;
  for (const auto& seq : sequences) {
    out += '>';
    out += seq.name;
    out += '\n';
    for (std::size_t i = 0; i < seq.residues.size(); i += line_width) {
      const auto n = std::min(line_width, seq.residues.size() - i);
      out += decode(std::span(seq.residues).subspan(i, n));
      out += '\n';
    }
  }
  return out;
}

}  // namespace swlane
