#pragma once

#include <vector>

#include "braidlam/arc_diagram.hpp"
#include "braidlam/bigint.hpp"
#include "braidlam/braid_word.hpp"

namespace braidlam {

// Coordinate vector of an integral lamination in D_n: 2n-2 integers
// (a_1, b_1, ..., a_{n-1}, b_{n-1}), not all zero.  In terms of the
// closure model on m = n+1 marked points (point 1 is the disk's leftmost
// boundary point), a_i is half the difference between the numbers of
// strands passing above and below interior point i+1, and b_i is half the
// difference of the minimal vertical cut counts of the two gaps flanking
// that point.
struct CoordVector {
  int n = 2;
  std::vector<Int> entries;  // size 2n-2, interleaved a,b

  CoordVector() : entries(2) {}
  CoordVector(int n_, std::vector<Int> e);

  Int& a(int i) { return entries[2 * (i - 1)]; }
  Int& b(int i) { return entries[2 * (i - 1) + 1]; }
  const Int& a(int i) const { return entries[2 * (i - 1)]; }
  const Int& b(int i) const { return entries[2 * (i - 1) + 1]; }

  bool is_zero() const;
  bool operator==(const CoordVector& o) const { return n == o.n && entries == o.entries; }
};

// Per-gap slot counts of the closure model: for g = 0..m, the number of
// upper-arc arrivals/departures and lower arrivals/departures in gap g.
// This is the decoded, run-length form of a tight multicurve.
struct GapCounts {
  int m = 0;
  std::vector<Int> au, du, al, dl;  // size m+1

  Int gap_slots(int g) const { return au[g] + du[g]; }
  Int total_slots() const;
  Int norm() const;  // slots outside gap 0
  bool empty() const { return total_slots() == 0; }
};

namespace lamination_coords {

// The explicit cascade between coordinates and gap counts.  decode picks
// the canonical minimal representative (no components enclosing a single
// point or everything); encode inverts it exactly.
GapCounts decode(const CoordVector& v);
CoordVector encode(const GapCounts& gc);

// Desk-scale expansion of gap counts into the explicit slot model and back.
ArcDiagram expand(const GapCounts& gc);
GapCounts contract(const ArcDiagram& d);

CoordVector standard_e(int n);
CoordVector standard_e2(int n);

Int norm(const CoordVector& v);

CoordVector apply_artin(const CoordVector& v, int i, int sign);
CoordVector apply_word(const CoordVector& v, const BraidWord& w);

// Spiral structure of v around the block lo..hi (Lemma on fast powers of
// a half-twist): k0 = leftmost minimiser of k -> norm(D(lo,hi)^k v),
// m_strings = number of arcs crossing the block boundary (the multiplier
// of the surrounding-circles lamination L0 in the linear regime),
// direction = sign of twisting present at v (0 when theta = 0).
struct SpiralInfo {
  int lo = 0, hi = 0;
  Int k0;
  Int m_strings;
  Int theta;
  int direction = 0;
};

SpiralInfo detect_spiral(const CoordVector& v, int lo, int hi);

// D(lo,hi)^N v in time polynomial in (n, log|N|, log norm).
CoordVector apply_delta_power(const CoordVector& v, int lo, int hi, const Int& N);

// Coordinates of k circles around punctures lo..hi of D_n (the L0 of the
// spiral formulas).
CoordVector circles(int n, int lo, int hi, const Int& k);

}  // namespace lamination_coords

// arc_oracle-side bridges (independent stats path for to_coords).
namespace arc_oracle {
CoordVector to_coords(const ArcDiagram& d);
ArcDiagram from_coords(const CoordVector& v, const Int& cap = Int(100000));
}  // namespace arc_oracle

}  // namespace braidlam
