#pragma once

#include <string>
#include <vector>

#include "braidlam/bigint.hpp"

namespace braidlam {

// Explicit slot model of a tight closed multicurve on m marked points of
// the real axis.  Slot i is the i-th intersection with the axis, left to
// right; gap[i] in 0..m says between which marked points it lies (gap 0 is
// left of point 1).  up/down give the partner slot joined by the arc in the
// upper/lower half-plane.  Both matchings are non-crossing and, when the
// diagram is tight, no arc has both ends in one gap.
//
// Integral laminations of the punctured disk D_n are represented by their
// closure: m = n+1, point 1 plays the role of the disk's leftmost boundary
// point and points 2..m are the punctures 1..n.  Slots in gap 0 are the
// closure arcs, one per non-closed component.
//
// This module is the desk-scale brute-force oracle: everything is O(slots).
struct ArcDiagram {
  int m = 0;
  std::vector<int> gap;
  std::vector<int> up;
  std::vector<int> down;

  size_t slots() const { return gap.size(); }
  bool operator==(const ArcDiagram& o) const {
    return m == o.m && gap == o.gap && up == o.up && down == o.down;
  }
};

namespace arc_oracle {

// Structural soundness: matchings are fixed-point-free involutions,
// non-crossing, gaps sorted and in range.  Throws on violation.
void validate(const ArcDiagram& d);

bool is_tight(const ArcDiagram& d);

// Removes puncture-free bigons (arcs with both ends in one gap) until tight.
ArcDiagram tighten(ArcDiagram d);

// Half-twist of marked points p, p+1 (1 <= p < m).  sign=+1 is the twist
// whose square spirals positively in our convention; sign=-1 its inverse.
// Result is tightened.
ArcDiagram twist_points(const ArcDiagram& d, int p, int sign);

// Connected components as lists of slot indices.
std::vector<std::vector<int>> components(const ArcDiagram& d);

// Marked points enclosed by the component through the given slots
// (winding parity of the downward ray from each point).
std::vector<int> enclosed_points(const ArcDiagram& d, const std::vector<int>& comp);

// Lamination validity on top of tightness: no component enclosing fewer
// than 2 or all m points.
bool is_valid_lamination(const ArcDiagram& d);

// --- closure-model constructors (m = n+1) ---

// Closure of the standard diagram E in D_n: circles around points 1..j for
// j = 2..n.
ArcDiagram e_diagram(int n);
// Closure of E_2: one circle around points 1..2.
ArcDiagram e2_diagram(int n);
// k parallel circles around points lo..hi of the m-point model.
ArcDiagram circle_stack(int m, int lo, int hi, long k);

// --- D_n-side views ---

inline int punctures(const ArcDiagram& d) { return d.m - 1; }

// Norm of the underlying lamination (axis crossings inside D_n): slots not
// in gap 0.
Int lamination_norm(const ArcDiagram& d);

// Number of components of the lamination (closed = of the closure; both
// are equal since closing arcs merge nothing).
Int count_components(const ArcDiagram& d);

// A component is odd/even by its crossing count inside D_n.
bool all_components_odd(const ArcDiagram& d);

// Component is relaxed when it crosses the axis inside D_n at most twice.
bool is_relaxed(const ArcDiagram& d);

// Action of the braid generator sigma_i^{±1} of B_n on the closure model
// (twist of points i+1, i+2).  Tight in, tight out.
ArcDiagram act_artin(const ArcDiagram& d, int i, int sign);

// Debug dump: one line per component listing signed slot indices
// (positive = upper arc leaves to the right).
std::string dump(const ArcDiagram& d);

}  // namespace arc_oracle

}  // namespace braidlam
