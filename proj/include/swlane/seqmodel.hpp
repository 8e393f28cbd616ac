#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swlane {

// Residue codes 0..23 follow kAlphabet; 24 is the padding residue; 25..31 are
// reserved so that every code indexes a 32-slot score row.
using ResidueCode = std::uint8_t;

inline constexpr std::string_view kAlphabet = "ARNDCQEGHILKMFPSTWYVBZX*";
inline constexpr int kAlphabetSize = 24;
inline constexpr ResidueCode kDummy = 24;
inline constexpr int kCodeSlots = 32;

struct Sequence {
  std::string name;
  std::vector<ResidueCode> residues;

  std::size_t length() const noexcept { return residues.size(); }
  std::span<const ResidueCode> view() const noexcept { return residues; }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Letters outside the alphabet map to 'X'. `position` is only used for the
// error report.
ResidueCode encode_residue(char ch, std::size_t position = 0);
char decode_residue(ResidueCode code);

std::vector<ResidueCode> encode(std::string_view letters);
std::string decode(std::span<const ResidueCode> codes);

std::vector<Sequence> parse_fasta(std::string_view text);
std::vector<Sequence> read_fasta(const std::string& path);

// Inverse of parse_fasta; wraps residue lines at `line_width`.
std::string to_fasta(std::span<const Sequence> sequences, std::size_t line_width = 60);

}  // namespace swlane
