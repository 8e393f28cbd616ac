#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swlane {

enum class Errc {
  InvalidResidue,
  MalformedFasta,
  EmptyRecord,
  UnknownMatrix,
  MalformedMatrix,
  InvalidArgument,
  EmptyProfile,
  BlockOutOfRange,
  BlockMismatch,
  OverflowRisk,
  CapacityExceeded,
  LaneMismatch,
  EmptyDatabase,
  IoError,
  BadMagic,
  VersionMismatch,
  TruncatedFile,
  CorruptRecordTable,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library is an Error; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class InvalidResidueError : public Error {
 public:
  InvalidResidueError(char byte, std::size_t position, const std::string& what)
      : Error(Errc::InvalidResidue, what), byte_(byte), position_(position) {}

  char byte() const noexcept { return byte_; }
  // Byte offset in the input the residue came from.
  std::size_t position() const noexcept { return position_; }

 private:
  char byte_;
  std::size_t position_;
};

}  // namespace swlane
