#pragma once

// Test-only helpers: a full-matrix Smith-Waterman evaluator kept independent
// of the library's linear-space kernels, plus random input generators.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swlane/scoring.hpp"
#include "swlane/seqmodel.hpp"

namespace swlane::testing {

// Materializes the whole H, E, F matrices with boundary rows and columns.
inline Score full_matrix_sw(const std::vector<ResidueCode>& s1, const std::vector<ResidueCode>& s2,
                            const ScoringScheme& scheme) {
  const std::size_t n = s1.size();
  const std::size_t m = s2.size();
  std::vector<std::vector<long>> H(n + 1, std::vector<long>(m + 1, 0));
  std::vector<std::vector<long>> E(n + 1, std::vector<long>(m + 1, 0));
  std::vector<std::vector<long>> F(n + 1, std::vector<long>(m + 1, 0));
  const long alpha = scheme.gap_extend;
  const long beta = scheme.gap_open_extend;
  long best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      E[i][j] = std::max(E[i - 1][j] - alpha, H[i - 1][j] - beta);
      F[i][j] = std::max(F[i][j - 1] - alpha, H[i][j - 1] - beta);
      H[i][j] = std::max({0L, H[i - 1][j - 1] + scheme.matrix[s1[i - 1]][s2[j - 1]], E[i][j], F[i][j]});
      best = std::max(best, H[i][j]);
    }
  }
  return static_cast<Score>(best);
}

inline std::vector<ResidueCode> random_residues(std::mt19937_64& rng, std::size_t len,
                                                int alphabet = kAlphabetSize) {
  std::uniform_int_distribution<int> pick(0, alphabet - 1);
  std::vector<ResidueCode> out(len);
  for (auto& r : out) r = static_cast<ResidueCode>(pick(rng));
  return out;
}

// Mostly the 20 standard amino acids; occasionally the full alphabet.
inline Sequence random_sequence(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                                const std::string& name = "s") {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution full(0.2);
  return Sequence{name, random_residues(rng, len(rng), full(rng) ? kAlphabetSize : 20)};
}

// Copy of `base` with random point mutations, so alignments have real structure.
inline Sequence mutate(std::mt19937_64& rng, const Sequence& base, double rate, const std::string& name) {
  Sequence out{name, base.residues};
  std::bernoulli_distribution hit(rate);
  std::uniform_int_distribution<int> pick(0, 19);
  for (auto& r : out.residues)
    if (hit(rng)) r = static_cast<ResidueCode>(pick(rng));
  return out;
}

inline ScoringScheme scheme_of(const std::string& matrix, int open, int extend) {
  return make_scheme(*builtin_matrix(matrix), gap_params(open, extend));
}

}  // namespace swlane::testing
