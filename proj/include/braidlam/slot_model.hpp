#pragma once

#include <vector>

#include "braidlam/bigint.hpp"
#include "braidlam/coords.hpp"

namespace braidlam {

// Run-length form of the slot model: arcs carry a multiplicity and occupy
// contiguous slot intervals inside their gaps.  The slots of arc endpoint
// intervals pair in the reversed (rainbow) order: left ol+t <-> right
// orr+count-1-t.  A self-paired arc (both endpoints equal) means the
// interval folds onto itself: ol+t <-> ol+count-1-t.
//
// All lamination operations here are polynomial in (n, number of arcs,
// log of slot counts); this is the compressed path the untangler and the
// coordinate action run on.
struct CArc {
  int gl = 0;
  Int ol;
  int gr = 0;
  Int orr;
  Int count;

  bool self_paired() const { return gl == gr && ol == orr; }
};

struct CompressedLam {
  int m = 0;
  std::vector<Int> ngap;  // m+1 entries
  std::vector<CArc> ups, downs;

  bool empty() const;
};

namespace slot_model {

// Structural checks (interval partitions, ordering); throws on failure.
void validate(const CompressedLam& c);

CompressedLam from_gap_counts(const GapCounts& gc);
GapCounts to_gap_counts(const CompressedLam& c);

// Desk-scale expansion (throws if total slots exceed cap).
ArcDiagram expand(const CompressedLam& c, const Int& cap = Int(1000000));
CompressedLam compress(const ArcDiagram& d);

Int total_slots(const CompressedLam& c);
Int norm(const CompressedLam& c);

// Removes puncture-free bigons at block level until tight.
void tighten(CompressedLam& c);

// Merges adjacent parallel arcs (canonical compact form).
void merge_runs(CompressedLam& c);

// Half-twist of marked points p, p+1; tightened and merged.
CompressedLam twist_points(const CompressedLam& c, int p, int sign);

}  // namespace slot_model

}  // namespace braidlam
