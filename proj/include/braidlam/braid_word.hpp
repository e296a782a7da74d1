#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlam/bigint.hpp"

namespace braidlam {

// A powered half-twist letter D(lo,hi)^power.  sigma_i == D(i,i+1)^±1,
// the Garside element of B_n == D(1,n).
struct BraidLetter {
  int lo = 0;
  int hi = 0;
  Int power;

  bool same_band(const BraidLetter& o) const { return lo == o.lo && hi == o.hi; }
  bool operator==(const BraidLetter& o) const {
    return lo == o.lo && hi == o.hi && power == o.power;
  }
};

// A word over the D(i,j) alphabet in normal form: no zero powers and
// adjacent letters use distinct bands.
struct BraidWord {
  int n = 1;
  std::vector<BraidLetter> letters;

  bool operator==(const BraidWord& o) const { return n == o.n && letters == o.letters; }
  bool empty() const { return letters.empty(); }
};

struct ArtinLetter {
  int index = 0;  // 1..n-1
  int sign = 1;   // ±1
  bool operator==(const ArtinLetter& o) const { return index == o.index && sign == o.sign; }
};

// Exact Delta-length record: s letters with their |power| values, plus a
// floating-point value of sum log2(|k|+1).
struct DeltaLength {
  std::vector<Int> abs_powers;
  double value = 0.0;
  size_t letter_count() const { return abs_powers.size(); }
};

BraidWord normalize(std::vector<BraidLetter> letters, int n);
BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& w);
BraidWord include_shift(const BraidWord& w);

DeltaLength delta_length_exact(const BraidWord& w);
double delta_length(const BraidWord& w);

// Total Artin letter count of the expansion (without building it).
Int artin_length(const BraidWord& w);

// Expands D(i,j)^k into sigma letters; throws std::length_error when the
// expansion would exceed `cap` letters.
std::vector<ArtinLetter> expand_to_artin(const BraidWord& w, const Int& cap = Int(1) << 20);

BraidWord word_from_artin(const std::vector<ArtinLetter>& letters, int n);

// Image of strand positions under the braid: perm[i] = position where the
// strand starting at i ends (1-based).  Computed per letter in O(n).
std::vector<int> strand_permutation(const BraidWord& w);

// Deletes the strand that starts (and ends) at position `strand`, giving a
// word over n-1 strands.  Throws std::invalid_argument if that strand does
// not return to its starting position.
BraidWord remove_strand(const BraidWord& w, int strand);

// Text grammar: tokens `s<i>`, `s<i>^-1`, `D(<i>,<j>)^<k>`, whitespace
// separated.  Leftmost letter acts last on laminations.
BraidWord parse_word(const std::string& text, int n);
std::string format_word(const BraidWord& w);

}  // namespace braidlam
