#include "braidlam/slot_model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace braidlam {

bool CompressedLam::empty() const {
  for (const auto& x : ngap)
    if (x != 0) return false;
  return true;
}

namespace slot_model {

namespace {

int end_gap(const CArc& a, int side) { return side ? a.gr : a.gl; }
const Int& end_off(const CArc& a, int side) { return side ? a.orr : a.ol; }

void normalize_ends(CArc& a) {
  if (!a.self_paired() && std::make_pair(a.gl, a.ol) > std::make_pair(a.gr, a.orr)) {
    std::swap(a.gl, a.gr);
    std::swap(a.ol, a.orr);
  }
}

// Splits arcs of `list` so that no endpoint interval in gap g straddles the
// cut between slots x-1 and x.  Self-paired intervals split symmetrically.
void cut_at(std::vector<CArc>& list, int g, const Int& x) {
  size_t n = list.size();
  for (size_t ix = 0; ix < n; ++ix) {
    CArc a = list[ix];
    if (a.self_paired()) {
      if (a.gl != g || x <= a.ol || x >= a.ol + a.count) continue;
      Int lo = x - a.ol, hi = a.count - lo;
      if (lo == hi) {
        // centre cut: the fold becomes an ordinary adjacent in-gap arc
        list[ix] = CArc{g, a.ol, g, x, lo};
        continue;
      }
      Int w = std::min(lo, hi);
      CArc outer{g, a.ol, g, a.ol + a.count - w, w};
      CArc mid{g, a.ol + w, g, a.ol + w, a.count - 2 * w};
      list[ix] = outer;
      list.push_back(mid);
      continue;
    }
    for (int side : {0, 1}) {
      if (end_gap(a, side) != g) continue;
      const Int& o = end_off(a, side);
      if (x <= o || x >= o + a.count) continue;
      Int w = x - o;
      CArc first = a, second = a;
      if (side == 0) {
        first.count = w;
        first.orr = a.orr + (a.count - w);
        second.ol = a.ol + w;
        second.count = a.count - w;
      } else {
        first.count = w;
        first.ol = a.ol + (a.count - w);
        second.count = a.count - w;
        second.orr = a.orr + w;
      }
      list[ix] = first;
      list.push_back(second);
      break;
    }
  }
}

void shift_gap(std::vector<CArc>& list, int g, const Int& from, const Int& delta) {
  for (auto& a : list) {
    bool self = a.self_paired();
    if (a.gl == g && a.ol >= from) a.ol += delta;
    if (self) {
      a.orr = a.ol;
      continue;
    }
    if (a.gr == g && a.orr >= from) a.orr += delta;
    normalize_ends(a);
  }
}

}  // namespace

void validate(const CompressedLam& c) {
  if ((int)c.ngap.size() != c.m + 1) throw std::logic_error("compressed: ngap size");
  for (const auto* list : {&c.ups, &c.downs}) {
    std::vector<std::vector<std::pair<Int, Int>>> iv(c.m + 1);
    for (const auto& a : *list) {
      if (a.count <= 0) throw std::logic_error("compressed: nonpositive count");
      if (a.self_paired()) {
        if (a.count % 2 != 0) throw std::logic_error("compressed: odd self fold");
        iv[a.gl].push_back({a.ol, a.count});
      } else {
        if (std::make_pair(a.gl, a.ol) > std::make_pair(a.gr, a.orr))
          throw std::logic_error("compressed: endpoints out of order");
        iv[a.gl].push_back({a.ol, a.count});
        iv[a.gr].push_back({a.orr, a.count});
      }
    }
    for (int g = 0; g <= c.m; ++g) {
      std::sort(iv[g].begin(), iv[g].end());
      Int at = 0;
      for (auto& [o, cnt] : iv[g]) {
        if (o != at) throw std::logic_error("compressed: interval gap/overlap");
        at += cnt;
      }
      if (at != c.ngap[g]) throw std::logic_error("compressed: gap total mismatch");
    }
  }
}

CompressedLam from_gap_counts(const GapCounts& gc) {
  CompressedLam c;
  c.m = gc.m;
  c.ngap.assign(c.m + 1, 0);
  for (int g = 0; g <= c.m; ++g) c.ngap[g] = gc.au[g] + gc.du[g];

  auto build = [&](const std::vector<Int>& arr, const std::vector<Int>& dep,
                   std::vector<CArc>& out) {
    struct Block {
      int gap;
      Int off, cnt;
    };
    std::vector<Block> stack;
    for (int g = 0; g <= c.m; ++g) {
      Int need = arr[g];
      Int at = 0;
      while (need > 0) {
        if (stack.empty()) throw std::logic_error("gap counts: arrival underflow");
        Block& top = stack.back();
        Int take = std::min(need, top.cnt);
        out.push_back({top.gap, top.off + top.cnt - take, g, at, take});
        top.cnt -= take;
        if (top.cnt == 0) stack.pop_back();
        at += take;
        need -= take;
      }
      if (dep[g] > 0) stack.push_back({g, arr[g], dep[g]});
    }
    if (!stack.empty()) throw std::logic_error("gap counts: unbalanced");
  };
  build(gc.au, gc.du, c.ups);
  build(gc.al, gc.dl, c.downs);
  validate(c);
  return c;
}

GapCounts to_gap_counts(const CompressedLam& c) {
  GapCounts gc;
  gc.m = c.m;
  gc.au.assign(c.m + 1, 0);
  gc.du.assign(c.m + 1, 0);
  gc.al.assign(c.m + 1, 0);
  gc.dl.assign(c.m + 1, 0);
  auto scan = [&](const std::vector<CArc>& list, std::vector<Int>& arr, std::vector<Int>& dep) {
    for (const auto& a : list) {
      if (a.gl == a.gr) throw std::logic_error("to_gap_counts: not tight");
      dep[a.gl] += a.count;
      arr[a.gr] += a.count;
    }
  };
  scan(c.ups, gc.au, gc.du);
  scan(c.downs, gc.al, gc.dl);
  return gc;
}

Int total_slots(const CompressedLam& c) {
  Int t = 0;
  for (const auto& x : c.ngap) t += x;
  return t;
}

Int norm(const CompressedLam& c) { return total_slots(c) - c.ngap[0]; }

ArcDiagram expand(const CompressedLam& c, const Int& cap) {
  Int tot = total_slots(c);
  if (tot > cap) throw std::length_error("expand: slot count exceeds cap");
  long n = tot.convert_to<long>();
  ArcDiagram d;
  d.m = c.m;
  d.gap.resize(n);
  d.up.assign(n, -1);
  d.down.assign(n, -1);
  std::vector<long> base(c.m + 2, 0);
  for (int g = 0; g <= c.m; ++g) base[g + 1] = base[g] + c.ngap[g].convert_to<long>();
  for (int g = 0; g <= c.m; ++g)
    for (long i = base[g]; i < base[g + 1]; ++i) d.gap[i] = g;
  auto place = [&](const std::vector<CArc>& list, std::vector<int>& match) {
    for (const auto& a : list) {
      long cnt = a.count.convert_to<long>();
      long l = base[a.gl] + a.ol.convert_to<long>();
      long r = a.self_paired() ? l : base[a.gr] + a.orr.convert_to<long>();
      for (long t = 0; t < cnt; ++t) {
        long x = l + t, y = r + cnt - 1 - t;
        match[x] = (int)y;
        match[y] = (int)x;
      }
    }
  };
  place(c.ups, d.up);
  place(c.downs, d.down);
  arc_oracle::validate(d);
  return d;
}

CompressedLam compress(const ArcDiagram& d) {
  CompressedLam c;
  c.m = d.m;
  c.ngap.assign(d.m + 1, 0);
  std::vector<long> base(d.m + 1, -1);
  std::vector<long> local(d.slots());
  for (size_t i = 0; i < d.slots(); ++i) {
    int g = d.gap[i];
    if (base[g] < 0) base[g] = (long)i;
    local[i] = (long)i - base[g];
    c.ngap[g] += 1;
  }
  auto gather = [&](const std::vector<int>& match, std::vector<CArc>& out) {
    std::vector<bool> done(d.slots(), false);
    for (size_t i = 0; i < d.slots(); ++i) {
      if (done[i] || match[i] < (int)i) continue;
      long j = match[i];
      long len = 1;
      while ((long)(i + len) < j - len && i + len < d.slots() && !done[i + len] &&
             match[i + len] == j - len && d.gap[i + len] == d.gap[i] && d.gap[j - len] == d.gap[j])
        ++len;
      for (long t = 0; t < len; ++t) {
        done[i + t] = true;
        done[j - t] = true;
      }
      out.push_back({d.gap[i], Int(local[i]), d.gap[j], Int(local[j] - len + 1), Int(len)});
    }
  };
  gather(d.up, c.ups);
  gather(d.down, c.downs);
  validate(c);
  return c;
}

namespace {

// Cancels an adjacent in-gap bigon block of `list` (index idx) against the
// axis, splicing the other matching through the vanished slots.
void cancel_bigon(CompressedLam& c, bool upper, size_t idx) {
  auto& list = upper ? c.ups : c.downs;
  auto& other = upper ? c.downs : c.ups;
  const CArc a = list[idx];
  const int g = a.gl;
  Int runo, runc;
  if (a.self_paired()) {
    runo = a.ol;
    runc = a.count;
  } else {
    runo = a.ol;
    runc = 2 * a.count;
  }
  const Int rend = runo + runc;
  list.erase(list.begin() + idx);

  cut_at(other, g, runo);
  cut_at(other, g, rend);

  // reflection through the removed arc: slot x pairs with refl(x)
  auto refl_lo = [&](const Int& off, const Int& cnt) { return runo + rend - off - cnt; };

  // Chase the other-side structure through the run.  Work at interval
  // granularity; split arcs on demand.
  auto inside = [&](const CArc& b, int side) {
    return end_gap(b, side) == g && end_off(b, side) >= runo && end_off(b, side) < rend;
  };

  // find the arc covering [off, off+cnt) inside the run; split to size
  auto find_cover = [&](const Int& off, const Int& cnt, int& side_out) -> size_t {
    for (;;) {
      for (size_t i = 0; i < other.size(); ++i) {
        const CArc& b = other[i];
        for (int side : {0, 1}) {
          if (side == 1 && b.self_paired()) continue;
          if (end_gap(b, side) != g) continue;
          const Int& o = end_off(b, side);
          if (o <= off && off < o + b.count) {
            if (o < off) {
              cut_at(other, g, off);
              goto retry;
            }
            if (b.count > cnt) {
              cut_at(other, g, off + cnt);
              goto retry;
            }
            if (b.count < cnt) throw std::logic_error("bigon chase: cover too small");
            side_out = side;
            return i;
          }
        }
      }
      throw std::logic_error("bigon chase: no cover");
    retry:;
    }
  };

  // start points: arcs with exactly one end inside the run
  std::vector<CArc> emitted;
  for (;;) {
    // pick a boundary arc
    size_t start = other.size();
    int start_in_side = -1;
    for (size_t i = 0; i < other.size() && start == other.size(); ++i) {
      const CArc& b = other[i];
      if (b.self_paired()) continue;
      bool in0 = inside(b, 0), in1 = inside(b, 1);
      if (in0 != in1) {
        start = i;
        start_in_side = in0 ? 0 : 1;
      }
    }
    if (start == other.size()) break;

    CArc b = other[start];
    other.erase(other.begin() + start);
    int osd = start_in_side ^ 1;
    // accumulated outside end
    int out_gap = end_gap(b, osd);
    Int out_off = end_off(b, osd);
    Int cnt = b.count;
    Int cur = end_off(b, start_in_side);  // interval inside the run
    for (;;) {
      Int mirror = refl_lo(cur, cnt);
      int side = -1;
      size_t ci = find_cover(mirror, cnt, side);
      CArc cb = other[ci];
      other.erase(other.begin() + ci);
      if (cb.self_paired()) {
        // fold: the mirror interval maps onto itself reversed; same interval
        // continues the chase.  Composition of two reversals keeps cnt.
        if (cb.count != cnt) throw std::logic_error("bigon chase: fold size");
        cur = mirror;
        // after the fold we are at the same interval again; reflecting once
        // more would loop -- a fold directly at the mirror means the chase
        // returns through the fold: new current = mirror interval of the
        // fold is itself, so continue with cur = mirror and the next
        // reflection uses the fold's pairing already consumed.  The fold
        // composed with the bigon reflection is a translation; its orbits
        // close up only through other arcs, so simply continue.
        continue;
      }
      bool cin0 = inside(cb, 0), cin1 = inside(cb, 1);
      if (side == 0 ? !cin0 : !cin1) throw std::logic_error("bigon chase: cover not inside");
      int other_side = side ^ 1;
      if ((other_side == 0 && cin0) || (other_side == 1 && cin1)) {
        // both ends inside: pass through and keep chasing
        cur = end_off(cb, other_side);
        continue;
      }
      // exits: splice and emit
      CArc na{out_gap, out_off, end_gap(cb, other_side), end_off(cb, other_side), cnt};
      normalize_ends(na);
      emitted.push_back(na);
      break;
    }
  }

  // leftover arcs fully inside the run are closed null components: drop
  {
    std::vector<CArc> keep;
    for (auto& b : other) {
      bool drop;
      if (b.self_paired())
        drop = inside(b, 0);
      else
        drop = inside(b, 0) && inside(b, 1);
      if (!drop) keep.push_back(b);
    }
    other = std::move(keep);
  }
  for (auto& e : emitted) other.push_back(e);

  shift_gap(c.ups, g, rend, -runc);
  shift_gap(c.downs, g, rend, -runc);
  c.ngap[g] -= runc;
}

}  // namespace

void tighten(CompressedLam& c) {
  for (;;) {
    bool found = false;
    bool bu = false;
    size_t bi = 0;
    Int brun;
    for (int u = 0; u < 2; ++u) {
      auto& list = u ? c.ups : c.downs;
      for (size_t i = 0; i < list.size(); ++i) {
        const auto& a = list[i];
        Int run;
        if (a.self_paired())
          run = a.count;
        else if (a.gl == a.gr && a.orr == a.ol + a.count)
          run = 2 * a.count;
        else
          continue;
        if (!found || run < brun) {
          found = true;
          bu = (u == 1);
          bi = i;
          brun = run;
        }
      }
    }
    if (!found) {
      for (const auto* list : {&c.ups, &c.downs})
        for (const auto& a : *list)
          if (a.gl == a.gr && !a.self_paired() && a.orr != a.ol + a.count)
            throw std::logic_error("tighten: stuck separated in-gap arc");
      return;
    }
    cancel_bigon(c, bu, bi);
  }
}

void merge_runs(CompressedLam& c) {
  for (auto* list : {&c.ups, &c.downs}) {
    bool merged = true;
    while (merged) {
      merged = false;
      for (size_t i = 0; i < list->size() && !merged; ++i)
        for (size_t j = 0; j < list->size() && !merged; ++j) {
          if (i == j) continue;
          CArc& x = (*list)[i];
          CArc& y = (*list)[j];
          if (x.self_paired() || y.self_paired()) continue;
          if (x.gl == y.gl && y.ol == x.ol + x.count && x.gr == y.gr &&
              x.orr == y.orr + y.count) {
            x.count += y.count;
            x.orr = y.orr;
            list->erase(list->begin() + j);
            merged = true;
          }
        }
    }
  }
}

namespace {

CompressedLam flip_ud(CompressedLam c) {
  std::swap(c.ups, c.downs);
  return c;
}

CompressedLam twist_ccw(const CompressedLam& in, int p) {
  CompressedLam c = in;
  const Int k = c.ngap[p];

  // refine gap-p incidences of both matchings against each other
  for (bool again = true; again;) {
    again = false;
    std::vector<Int> cuts;
    for (const auto* list : {&c.ups, &c.downs})
      for (const auto& a : *list)
        for (int side : {0, 1}) {
          if (side == 1 && a.self_paired()) continue;
          if (end_gap(a, side) != p) continue;
          cuts.push_back(end_off(a, side));
          cuts.push_back(end_off(a, side) + a.count);
        }
    for (const auto& x : cuts) {
      for (auto* list : {&c.ups, &c.downs})
        for (const auto& a : *list)
          for (int side : {0, 1}) {
            if (side == 1 && a.self_paired()) continue;
            if (end_gap(a, side) != p) continue;
            const Int& o = end_off(a, side);
            if (x > o && x < o + a.count) {
              cut_at(*list, p, x);
              again = true;
            }
          }
      if (again) break;
    }
  }

  struct Inc {
    size_t arc;
    int side;
    Int cnt;
  };
  std::map<Int, Inc> upc, dnc;
  for (size_t i = 0; i < c.ups.size(); ++i)
    for (int side : {0, 1}) {
      const auto& a = c.ups[i];
      if (a.gl == p && a.gr == p) throw std::logic_error("twist: input not tight at gap p");
      if (side == 1 && a.self_paired()) continue;
      if (end_gap(a, side) != p) continue;
      upc[end_off(a, side)] = {i, side, a.count};
    }
  for (size_t i = 0; i < c.downs.size(); ++i)
    for (int side : {0, 1}) {
      const auto& a = c.downs[i];
      if (a.gl == p && a.gr == p) throw std::logic_error("twist: input not tight at gap p");
      if (side == 1 && a.self_paired()) continue;
      if (end_gap(a, side) != p) continue;
      dnc[end_off(a, side)] = {i, side, a.count};
    }

  shift_gap(c.ups, p + 1, Int(0), k);
  shift_gap(c.downs, p + 1, Int(0), k);

  const Int np1 = c.ngap[p - 1];
  std::vector<CArc> nups, ndowns;
  std::vector<bool> updead(c.ups.size(), false), dndead(c.downs.size(), false);

  auto walk = dnc.begin();
  for (auto& [off, uin] : upc) {
    if (walk == dnc.end() || walk->first != off || walk->second.cnt != uin.cnt)
      throw std::logic_error("twist: up/down chunk tables misaligned");
    Inc din = walk->second;
    ++walk;
    const Int cnt = uin.cnt;
    const CArc A = c.ups[uin.arc];
    const CArc B = c.downs[din.arc];
    updead[uin.arc] = true;
    dndead[din.arc] = true;
    int sA = uin.side ^ 1;
    int sB = din.side ^ 1;
    // the S-curve surgery: outside-up ~ u-chunk, core ~ l-chunk above;
    // u-chunk ~ core, l-chunk ~ outside-down below.  The core flips.
    int gA = end_gap(A, sA);
    Int oA = end_off(A, sA);
    if (gA == p + 1) oA += k;  // account for the shift above
    int gB = end_gap(B, sB);
    Int oB = end_off(B, sB);
    if (gB == p + 1) oB += k;
    CArc a1{gA, oA, p - 1, np1 + off, cnt};
    normalize_ends(a1);
    CArc a2{p, k - off - cnt, p + 1, off, cnt};
    CArc d1{p - 1, np1 + off, p, k - off - cnt, cnt};
    CArc d2{gB, oB, p + 1, off, cnt};
    normalize_ends(d2);
    nups.push_back(a1);
    nups.push_back(a2);
    ndowns.push_back(d1);
    ndowns.push_back(d2);
  }
  if (walk != dnc.end()) throw std::logic_error("twist: leftover down chunks");

  std::vector<CArc> ups2, downs2;
  for (size_t i = 0; i < c.ups.size(); ++i)
    if (!updead[i]) ups2.push_back(c.ups[i]);
  for (size_t i = 0; i < c.downs.size(); ++i)
    if (!dndead[i]) downs2.push_back(c.downs[i]);
  for (auto& a : nups) ups2.push_back(a);
  for (auto& a : ndowns) downs2.push_back(a);
  c.ups = std::move(ups2);
  c.downs = std::move(downs2);
  c.ngap[p - 1] += k;
  c.ngap[p + 1] += k;

  tighten(c);
  merge_runs(c);
  validate(c);
  return c;
}

}  // namespace

CompressedLam twist_points(const CompressedLam& c, int p, int sign) {
  if (p < 1 || p + 1 > c.m) throw std::out_of_range("twist_points: bad point index");
  if (sign == 1) return twist_ccw(c, p);
  if (sign == -1) return flip_ud(twist_ccw(flip_ud(c), p));
  throw std::invalid_argument("twist_points: sign must be ±1");
}

}  // namespace slot_model
}  // namespace braidlam
