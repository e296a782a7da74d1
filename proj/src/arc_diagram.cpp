#include "braidlam/arc_diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braidlam {
namespace arc_oracle {

namespace {

void check_noncrossing(const std::vector<int>& match, const char* side) {
  std::vector<int> stack;
  for (int i = 0; i < (int)match.size(); ++i) {
    if (match[i] > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != match[i])
        throw std::logic_error(std::string("crossing arcs in ") + side + " matching");
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw std::logic_error("unclosed arc");
}

}  // namespace

void validate(const ArcDiagram& d) {
  const int n = (int)d.slots();
  if ((int)d.up.size() != n || (int)d.down.size() != n)
    throw std::logic_error("matching size mismatch");
  for (int i = 0; i < n; ++i) {
    if (d.gap[i] < 0 || d.gap[i] > d.m) throw std::logic_error("gap out of range");
    if (i > 0 && d.gap[i] < d.gap[i - 1]) throw std::logic_error("gaps not sorted");
    for (const auto* mt : {&d.up, &d.down}) {
      int j = (*mt)[i];
      if (j < 0 || j >= n || j == i || (*mt)[j] != i) throw std::logic_error("bad matching");
    }
  }
  check_noncrossing(d.up, "upper");
  check_noncrossing(d.down, "lower");
}

bool is_tight(const ArcDiagram& d) {
  for (int i = 0; i < (int)d.slots(); ++i) {
    if (d.gap[i] == d.gap[d.up[i]]) return false;
    if (d.gap[i] == d.gap[d.down[i]]) return false;
  }
  return true;
}

namespace {

ArcDiagram erase_slots(const ArcDiagram& d, int x, int y) {
  // removes slots x < y; assumes their arcs have been spliced already and
  // up/down entries for x,y are stale.
  ArcDiagram r;
  r.m = d.m;
  const int n = (int)d.slots();
  std::vector<int> map(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (i != x && i != y) map[i] = k++;
  r.gap.resize(k);
  r.up.resize(k);
  r.down.resize(k);
  for (int i = 0; i < n; ++i) {
    if (map[i] < 0) continue;
    r.gap[map[i]] = d.gap[i];
    r.up[map[i]] = map[d.up[i]];
    r.down[map[i]] = map[d.down[i]];
  }
  return r;
}

}  // namespace

ArcDiagram tighten(ArcDiagram d) {
  bool changed = true;
  while (changed) {
    changed = false;
    const int n = (int)d.slots();
    for (int i = 0; i + 1 < n && !changed; ++i) {
      // adjacent in-gap pair in either matching
      for (bool upper : {true, false}) {
        auto& mt = upper ? d.up : d.down;
        auto& other = upper ? d.down : d.up;
        if (mt[i] == i + 1 && d.gap[i] == d.gap[i + 1]) {
          int a = other[i], b = other[i + 1];
          if (a == i + 1) {
            // closed null curve: both arcs join the same two slots
          } else {
            other[a] = b;
            other[b] = a;
          }
          d = erase_slots(d, i, i + 1);
          changed = true;
          break;
        }
      }
    }
  }
  return d;
}

namespace {

ArcDiagram flip_ud(ArcDiagram d) {
  std::swap(d.up, d.down);
  return d;
}

// Counterclockwise half-twist of points p, p+1.  See twist derivation in
// the docs: the preimage of the axis is an S-curve which crosses every
// gap-p arc once above (u block), traverses the core reversed, and crosses
// every gap-p arc once below (l block).
ArcDiagram twist_ccw(const ArcDiagram& d, int p) {
  const int n = (int)d.slots();
  std::vector<int> core;
  for (int i = 0; i < n; ++i)
    if (d.gap[i] == p) core.push_back(i);
  const int k = (int)core.size();

  ArcDiagram r;
  r.m = d.m;
  const int nn = n + 2 * k;
  r.gap.assign(nn, 0);
  r.up.assign(nn, -1);
  r.down.assign(nn, -1);

  // layout: [gap<p slots] [u block k] [core reversed k] [l block k] [gap>p]
  std::vector<int> map(n, -1);
  int pos = 0;
  for (int i = 0; i < n && d.gap[i] < p; ++i) map[i] = pos++;
  const int ubase = pos;
  pos += k;
  for (int j = 0; j < k; ++j) map[core[k - 1 - j]] = pos++;  // reversed
  const int lbase = pos;
  pos += k;
  for (int i = 0; i < n; ++i)
    if (d.gap[i] > p) map[i] = pos++;

  for (int i = 0; i < n; ++i) {
    int g = d.gap[i];
    r.gap[map[i]] = g;  // core keeps gap p; others unchanged
  }
  for (int j = 0; j < k; ++j) {
    r.gap[ubase + j] = p - 1;
    r.gap[lbase + j] = p + 1;
  }

  // untouched arcs
  for (int i = 0; i < n; ++i) {
    if (d.gap[i] == p) continue;
    int ju = d.up[i], jd = d.down[i];
    if (d.gap[ju] != p) {
      r.up[map[i]] = map[ju];
      r.up[map[ju]] = map[i];
    }
    if (d.gap[jd] != p) {
      r.down[map[i]] = map[jd];
      r.down[map[jd]] = map[i];
    }
  }
  // surgery arcs: for the i-th core slot s (original order), with old
  // partners a = up[s], b = down[s]:
  //   upper: (a ~ u_i) and (s ~ l_i);  lower: (u_i ~ s) and (l_i ~ b).
  for (int i = 0; i < k; ++i) {
    int s = core[i];
    int a = d.up[s], b = d.down[s];
    if (d.gap[a] == p || d.gap[b] == p)
      throw std::logic_error("twist_ccw: input not tight at gap p");
    int u = ubase + i, l = lbase + i;
    r.up[map[a]] = u;
    r.up[u] = map[a];
    r.up[map[s]] = l;
    r.up[l] = map[s];
    r.down[u] = map[s];
    r.down[map[s]] = u;
    r.down[l] = map[b];
    r.down[map[b]] = l;
  }
  return tighten(std::move(r));
}

}  // namespace

ArcDiagram twist_points(const ArcDiagram& d, int p, int sign) {
  if (p < 1 || p + 1 > d.m) throw std::out_of_range("twist_points: bad point index");
  if (!is_tight(d)) throw std::logic_error("twist_points: input not tight");
  if (sign == 1) return twist_ccw(d, p);
  if (sign == -1) return flip_ud(twist_ccw(flip_ud(d), p));
  throw std::invalid_argument("twist_points: sign must be ±1");
}

std::vector<std::vector<int>> components(const ArcDiagram& d) {
  const int n = (int)d.slots();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    int cur = i;
    bool via_up = true;
    do {
      if (!seen[cur]) {
        seen[cur] = true;
        comp.push_back(cur);
      }
      cur = via_up ? d.up[cur] : d.down[cur];
      via_up = !via_up;
    } while (cur != i || !via_up);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> enclosed_points(const ArcDiagram& d, const std::vector<int>& comp) {
  std::set<int> in(comp.begin(), comp.end());
  std::vector<int> pts;
  for (int q = 1; q <= d.m; ++q) {
    // parity of crossings of the downward ray from point q = number of
    // lower arcs of the component spanning q.
    int c = 0;
    for (int i : comp) {
      int j = d.down[i];
      if (j < i) continue;
      // lower arc (i, j) spans q iff gap[i] < q <= gap[j]
      if (d.gap[i] < q && q <= d.gap[j]) ++c;
    }
    if (c % 2 == 1) pts.push_back(q);
  }
  return pts;
}

bool is_valid_lamination(const ArcDiagram& d) {
  if (!is_tight(d)) return false;
  for (const auto& comp : components(d)) {
    auto pts = enclosed_points(d, comp);
    if ((int)pts.size() < 2 || (int)pts.size() == d.m) return false;
  }
  return true;
}

ArcDiagram e_diagram(int n) {
  if (n < 2) throw std::invalid_argument("e_diagram: n must be >= 2");
  const int m = n + 1;
  ArcDiagram d;
  d.m = m;
  // gap 0: n-1 slots (outermost circle first), then one slot in each of
  // gaps 2..n.  Circle j (around points 1..j) uses gap-0 slot for size j
  // and the slot in gap j.
  const int N = 2 * (n - 1);
  d.gap.resize(N);
  d.up.resize(N);
  d.down.resize(N);
  for (int i = 0; i < n - 1; ++i) d.gap[i] = 0;
  for (int i = 0; i < n - 1; ++i) d.gap[n - 1 + i] = 2 + i;
  for (int i = 0; i < n - 1; ++i) {
    // gap-0 slot i (outer to inner) belongs to circle of size m-1-i
    int right = n - 1 + (m - 1 - i) - 2;
    d.up[i] = right;
    d.up[right] = i;
    d.down[i] = right;
    d.down[right] = i;
  }
  validate(d);
  return d;
}

ArcDiagram e2_diagram(int n) {
  if (n < 2) throw std::invalid_argument("e2_diagram: n must be >= 2");
  return circle_stack(n + 1, 1, 2, 1);
}

ArcDiagram circle_stack(int m, int lo, int hi, long k) {
  if (!(1 <= lo && lo < hi && hi <= m)) throw std::invalid_argument("circle_stack: bad block");
  if (k < 0) throw std::invalid_argument("circle_stack: negative multiplicity");
  ArcDiagram d;
  d.m = m;
  d.gap.resize(2 * k);
  d.up.resize(2 * k);
  d.down.resize(2 * k);
  for (long i = 0; i < k; ++i) d.gap[i] = lo - 1;
  for (long i = 0; i < k; ++i) d.gap[k + i] = hi;
  for (long i = 0; i < k; ++i) {
    // left slot i (outer to inner) pairs with right slot k-1-i..  right
    // slots are inner to outer left-to-right.
    long right = k + (k - 1 - i);
    d.up[i] = (int)right;
    d.up[right] = (int)i;
    d.down[i] = (int)right;
    d.down[right] = (int)i;
  }
  if (k) validate(d);
  return d;
}

Int lamination_norm(const ArcDiagram& d) {
  Int c = 0;
  for (int g : d.gap)
    if (g != 0) ++c;
  return c;
}

Int count_components(const ArcDiagram& d) { return Int(components(d).size()); }

bool all_components_odd(const ArcDiagram& d) {
  for (const auto& comp : components(d)) {
    long inside = 0;
    for (int i : comp)
      if (d.gap[i] != 0) ++inside;
    if (inside % 2 == 0) return false;
  }
  return true;
}

bool is_relaxed(const ArcDiagram& d) {
  for (const auto& comp : components(d)) {
    long inside = 0;
    for (int i : comp)
      if (d.gap[i] != 0) ++inside;
    if (inside > 2) return false;
  }
  return true;
}

ArcDiagram act_artin(const ArcDiagram& d, int i, int sign) {
  int n = punctures(d);
  if (i < 1 || i >= n) throw std::out_of_range("act_artin: sigma index out of range");
  return twist_points(d, i + 1, sign);
}

std::string dump(const ArcDiagram& d) {
  std::ostringstream out;
  for (const auto& comp : components(d)) {
    for (int i : comp) out << (d.up[i] > i ? '+' : '-') << i << '@' << d.gap[i] << ' ';
    out << '\n';
  }
  return out.str();
}

}  // namespace arc_oracle
}  // namespace braidlam
