#include "swlane/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "swlane/error.hpp"
#include "swlane/scoring_data.hpp"

namespace swlane {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

int strict_code(char letter) {
  const auto pos = kAlphabet.find(static_cast<char>(std::toupper(static_cast<unsigned char>(letter))));
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

bool is_supported_width(int lanes) noexcept { return lanes == 4 || lanes == 8 || lanes == 16; }

GapParams gap_params(int open, int extend) {
  if (open < 0 || extend < 0) {
    throw Error(Errc::InvalidArgument, "gap penalties must be non-negative (open " +
                                           std::to_string(open) + ", extend " +
                                           std::to_string(extend) + ")");
  }
  return GapParams{extend, open + extend};
}

Score ScoringScheme::max_abs_entry() const noexcept {
  Score best = 0;
  for (const auto& row : matrix)
    for (auto v : row) best = std::max(best, v < 0 ? -v : v);
  return best;
}

bool ScoringScheme::symmetric() const noexcept {
  for (int a = 0; a < kCodeSlots; ++a)
    for (int b = a + 1; b < kCodeSlots; ++b)
      if (matrix[a][b] != matrix[b][a]) return false;
  return true;
}

ScoringScheme parse_matrix(std::string_view text, std::string name) {
  ScoringScheme scheme;
  scheme.name = std::move(name);

  std::vector<int> columns;
  std::vector<bool> seen_row(kAlphabetSize, false);
  std::size_t rows = 0;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    auto fail = [&](const std::string& why) {
      throw Error(Errc::MalformedMatrix, "line " + std::to_string(line_no) + ": " + why);
    };

    if (columns.empty()) {
      for (const auto& tok : tokens) {
        if (tok.size() != 1) fail("header token '" + tok + "' is not a single letter");
        const int code = strict_code(tok[0]);
        if (code < 0) fail("header letter '" + tok + "' is not in the alphabet");
        if (std::find(columns.begin(), columns.end(), code) != columns.end()) {
          fail("duplicate header letter '" + tok + "'");
        }
        columns.push_back(code);
      }
      continue;
    }

    if (tokens.front().size() != 1 || strict_code(tokens.front()[0]) < 0) {
      fail("row does not start with a residue label");
    }
    const int row_code = strict_code(tokens.front()[0]);
    if (std::find(columns.begin(), columns.end(), row_code) == columns.end()) {
      fail("row label '" + tokens.front() + "' does not appear in the header");
    }
    if (seen_row[row_code]) fail("duplicate row '" + tokens.front() + "'");
    seen_row[row_code] = true;
    if (tokens.size() != columns.size() + 1) {
      fail("row '" + tokens.front() + "' has " + std::to_string(tokens.size() - 1) +
           " values, expected " + std::to_string(columns.size()));
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string& tok = tokens[c + 1];
      char* end = nullptr;
      const long value = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0' || value < -1000000 || value > 1000000) {
        fail("bad score '" + tok + "'");
      }
      scheme.matrix[row_code][columns[c]] = static_cast<Score>(value);
    }
    ++rows;
  }

  if (columns.empty()) throw Error(Errc::MalformedMatrix, "no header row");
  if (rows != columns.size()) {
    throw Error(Errc::MalformedMatrix, "matrix has " + std::to_string(rows) + " rows but " +
                                           std::to_string(columns.size()) + " columns");
  }
  return scheme;
}

std::string serialize_matrix(const ScoringScheme& scheme) {
  std::ostringstream out;
  out << ' ';
  for (int c = 0; c < kAlphabetSize; ++c) out << "  " << kAlphabet[c];
  out << '\n';
  for (int r = 0; r < kAlphabetSize; ++r) {
    out << kAlphabet[r];
    for (int c = 0; c < kAlphabetSize; ++c) {
      const auto v = scheme.matrix[r][c];
      out << ' ' << (v >= 0 && v < 10 ? " " : "") << v;
    }
    out << '\n';
  }
  return out.str();
}

std::optional<ScoringScheme> builtin_matrix(std::string_view name) {
  const std::string lower = lowercase(name);
  const auto text = detail::builtin_matrix_text(lower);
  if (text.empty()) return std::nullopt;
  return parse_matrix(text, lower);
}

ScoringScheme load_matrix(std::string_view source) {
  if (auto builtin = builtin_matrix(source)) return *builtin;
  // A single token without whitespace can only have been meant as a name.
  if (source.find_first_of(" \t\n") == std::string_view::npos) {
    throw Error(Errc::UnknownMatrix, "no built-in matrix named '" + std::string(source) + "'");
  }
  return parse_matrix(source);
}

ScoringScheme make_scheme(ScoringScheme matrix, GapParams gaps) {
  matrix.gap_extend = gaps.extend;
  matrix.gap_open_extend = gaps.open_extend;
  return matrix;
}

std::size_t round_up(std::size_t value, std::size_t multiple) noexcept {
  return (value + multiple - 1) / multiple * multiple;
}

QueryProfile::QueryProfile(std::span<const ResidueCode> query, const ScoringScheme& scheme)
    : query_len_(query.size()), rows_(query.size() * kCodeSlots), query_(query.begin(), query.end()) {
  for (std::size_t i = 0; i < query.size(); ++i) {
    std::copy(scheme.matrix[query[i]].begin(), scheme.matrix[query[i]].end(),
              rows_.begin() + i * kCodeSlots);
  }
}

QueryProfile build_query_profile(const Sequence& query, const ScoringScheme& scheme) {
  if (query.length() == 0) throw Error(Errc::InvalidArgument, "empty query");
  return QueryProfile(query.view(), scheme);
}

void SequenceProfile::assign(std::span<const std::span<const ResidueCode>> members, int width,
                             std::size_t first_source) {
  if (!is_supported_width(width)) {
    throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(width));
  }
  if (members.empty()) throw Error(Errc::EmptyProfile, "sequence profile needs at least one member");
  if (members.size() > static_cast<std::size_t>(width)) {
    throw Error(Errc::InvalidArgument, std::to_string(members.size()) + " members exceed " +
                                           std::to_string(width) + " lanes");
  }

  std::size_t longest = 0;
  for (const auto& m : members) longest = std::max(longest, m.size());

  width_ = width;
  real_lanes_ = members.size();
  padded_len_ = round_up(std::max<std::size_t>(longest, 1), 8);
  data_.assign(padded_len_ * width_, kDummy);
  for (int k = 0; k < width_; ++k) {
    const bool present = static_cast<std::size_t>(k) < members.size();
    sources_[k] = present ? first_source + k : kNoSource;
    lengths_[k] = present ? members[k].size() : 0;
    if (!present) continue;
    const auto& m = members[k];
    for (std::size_t p = 0; p < m.size(); ++p) data_[p * width_ + k] = m[p];
  }
}

SequenceProfile build_sequence_profile(std::span<const Sequence> members, int width) {
  std::vector<std::span<const ResidueCode>> views;
  views.reserve(members.size());
  for (const auto& m : members) views.push_back(m.view());
  SequenceProfile profile;
  profile.assign(views, width);
  return profile;
}

void ScoreProfile::assign(const ScoringScheme& scheme, const SequenceProfile& profile,
                          std::size_t j0, int block) {
  if (block < 1 || j0 % static_cast<std::size_t>(block) != 0 ||
      j0 + static_cast<std::size_t>(block) > profile.padded_len()) {
    throw Error(Errc::BlockOutOfRange, "block of " + std::to_string(block) + " at " +
                                           std::to_string(j0) + " outside profile of length " +
                                           std::to_string(profile.padded_len()));
  }
  width_ = profile.width();
  block_ = block;
  start_ = j0;
  entries_.resize(static_cast<std::size_t>(kScoreProfileRows) * block_ * width_);
  Score* out = entries_.data();
  for (int r = 0; r < kScoreProfileRows; ++r) {
    const auto& matrix_row = scheme.matrix[r];
    for (int n = 0; n < block_; ++n) {
      const ResidueCode* residues = profile.row(j0 + n);
      for (int k = 0; k < width_; ++k) *out++ = matrix_row[residues[k]];
    }
  }
}

ScoreProfile build_score_profile(const ScoringScheme& scheme, const SequenceProfile& profile,
                                 std::size_t j0, int block) {
  ScoreProfile sp;
  sp.assign(scheme, profile, j0, block);
  return sp;
}

StripedQueryProfile::StripedQueryProfile(std::span<const ResidueCode> query,
                                         const ScoringScheme& scheme, int width)
    : width_(width), query_len_(query.size()) {
  if (!is_supported_width(width)) {
    throw Error(Errc::LaneMismatch, "unsupported lane width " + std::to_string(width));
  }
  if (query.empty()) throw Error(Errc::InvalidArgument, "empty query");
  segment_len_ = round_up(query.size(), width) / width;
  tables_.assign(static_cast<std::size_t>(kCodeSlots) * segment_len_ * width_, 0);
  for (int r = 0; r < kCodeSlots; ++r) {
    Score* table = tables_.data() + static_cast<std::size_t>(r) * segment_len_ * width_;
    for (std::size_t i = 0; i < segment_len_; ++i) {
      for (int k = 0; k < width_; ++k) {
        const std::size_t position = k * segment_len_ + i;
        const ResidueCode q = position < query.size() ? query[position] : kDummy;
        table[i * width_ + k] = scheme.matrix[q][r];
      }
    }
  }
}

std::array<Score, kCodeSlots> StripedQueryProfile::destripe_row(std::size_t i) const {
  const std::size_t k = i / segment_len_;
  const std::size_t group = i % segment_len_;
  std::array<Score, kCodeSlots> row{};
  for (int r = 0; r < kCodeSlots; ++r) row[r] = table(static_cast<ResidueCode>(r))[group * width_ + k];
  return row;
}

StripedQueryProfile build_striped_profile(const Sequence& query, const ScoringScheme& scheme,
                                          int width) {
  return StripedQueryProfile(query.view(), scheme, width);
}

}  // namespace swlane
