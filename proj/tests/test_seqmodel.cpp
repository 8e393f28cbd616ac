#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "swlane/error.hpp"
#include "swlane/seqmodel.hpp"

using namespace swlane;

TEST_CASE("encode_residue follows the fixed alphabet") {
  CHECK(encode_residue('A') == 0);
  CHECK(encode_residue('*') == 23);
  CHECK(encode_residue('a') == 0);
  CHECK(encode_residue('X') == 22);
  // Letters outside the alphabet collapse to X.
  CHECK(encode_residue('j') == 22);
  CHECK(encode_residue('O') == 22);
  CHECK(encode_residue('U') == 22);
  for (int code = 0; code < kAlphabetSize; ++code) {
    CHECK(encode_residue(kAlphabet[code]) == code);
  }
}

TEST_CASE("encode_residue rejects non-letters with byte and position") {
  try {
    encode_residue('3', 17);
    FAIL("expected InvalidResidue");
  } catch (const InvalidResidueError& e) {
    CHECK(e.code() == Errc::InvalidResidue);
    CHECK(e.byte() == '3');
    CHECK(e.position() == 17);
  }
  CHECK_THROWS_AS(encode_residue('-'), InvalidResidueError);
}

TEST_CASE("decode/encode round-trip over every real code") {
  for (int code = 0; code < kAlphabetSize; ++code) {
    CHECK(encode_residue(decode_residue(static_cast<ResidueCode>(code))) == code);
  }
  CHECK_THROWS_AS(decode_residue(kDummy), Error);
}

TEST_CASE("parse_fasta basic records") {
  auto one = parse_fasta(">q\nAR\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].name == "q");
  CHECK(one[0].residues == std::vector<ResidueCode>{0, 1});

  auto two = parse_fasta(">a\nA\n>b\nRN\n");
  REQUIRE(two.size() == 2);
  CHECK(two[0].length() == 1);
  CHECK(two[1].length() == 2);
  CHECK(two[1].name == "b");
}

TEST_CASE("parse_fasta tolerates CR, blank lines and interior whitespace") {
  auto recs = parse_fasta("\n>sp|P1 some protein\r\nAR ND\r\n\r\nC Q\tE\r\n>x\nG");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].name == "sp|P1 some protein");
  CHECK(decode(recs[0].residues) == "ARNDCQE");
  CHECK(decode(recs[1].residues) == "G");
  CHECK(parse_fasta("").empty());
}

TEST_CASE("parse_fasta errors") {
  auto code_of = [](std::string_view text) {
    try {
      parse_fasta(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code_of(">x\n\n") == Errc::EmptyRecord);
  CHECK(code_of(">x\nAA\n>y\n>z\nA\n") == Errc::EmptyRecord);
  CHECK(code_of("ACGT\n") == Errc::MalformedFasta);
  CHECK(code_of(">x\nAC1T\n") == Errc::InvalidResidue);

  try {
    parse_fasta(">first\nAA\n>second\nA#\n");
    FAIL("expected InvalidResidue");
  } catch (const InvalidResidueError& e) {
    CHECK(e.byte() == '#');
    CHECK(e.position() == 19);
    CHECK(std::string(e.what()).find("second") != std::string::npos);
  }
}

TEST_CASE("parse_fasta inverts to_fasta for random sequence lists") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> count(1, 6);
    std::vector<Sequence> seqs;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      seqs.push_back(testing::random_sequence(rng, 1, 150, "rec " + std::to_string(trial) + "_" + std::to_string(i)));
    }
    std::uniform_int_distribution<std::size_t> width(1, 80);
    CHECK(parse_fasta(to_fasta(seqs, width(rng))) == seqs);
  }
}
