#include "braidlam/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidlam {

BraidWord normalize(std::vector<BraidLetter> letters, int n) {
  if (n < 1) throw std::invalid_argument("normalize: n must be >= 1");
  BraidWord w;
  w.n = n;
  for (const auto& l : letters) {
    if (!(1 <= l.lo && l.lo < l.hi && l.hi <= n))
      throw std::out_of_range("normalize: letter indices out of range");
    if (l.power == 0) continue;
    if (!w.letters.empty() && w.letters.back().same_band(l)) {
      w.letters.back().power += l.power;
      if (w.letters.back().power == 0) {
        w.letters.pop_back();
        // merging may expose a new adjacent equal-band pair; fold back
        while (w.letters.size() >= 2) {
          auto& a = w.letters[w.letters.size() - 2];
          auto& b = w.letters.back();
          if (!a.same_band(b)) break;
          a.power += b.power;
          w.letters.pop_back();
          if (a.power == 0) w.letters.pop_back();
        }
      }
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw std::invalid_argument("concat: strand count mismatch");
  std::vector<BraidLetter> ls = u.letters;
  ls.insert(ls.end(), v.letters.begin(), v.letters.end());
  return normalize(std::move(ls), u.n);
}

BraidWord invert(const BraidWord& w) {
  BraidWord r;
  r.n = w.n;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->lo, it->hi, -it->power});
  return r;
}

BraidWord include_shift(const BraidWord& w) {
  BraidWord r;
  r.n = w.n + 1;
  r.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) r.letters.push_back({l.lo + 1, l.hi + 1, l.power});
  return r;
}

DeltaLength delta_length_exact(const BraidWord& w) {
  DeltaLength d;
  d.abs_powers.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    d.abs_powers.push_back(abs_int(l.power));
    d.value += log2_abs_plus1(l.power);
  }
  return d;
}

double delta_length(const BraidWord& w) { return delta_length_exact(w).value; }

Int artin_length(const BraidWord& w) {
  Int total = 0;
  for (const auto& l : w.letters) {
    Int width = l.hi - l.lo;
    total += abs_int(l.power) * width * (width + 1) / 2;
  }
  return total;
}

std::vector<ArtinLetter> expand_to_artin(const BraidWord& w, const Int& cap) {
  if (artin_length(w) > cap)
    throw std::length_error("expand_to_artin: expansion exceeds cap; use the coordinate action");
  std::vector<ArtinLetter> out;
  out.reserve(artin_length(w).convert_to<size_t>());
  for (const auto& l : w.letters) {
    // D(i,j) = (s_i..s_{j-1})(s_i..s_{j-2})...(s_i)
    long reps = abs_int(l.power).convert_to<long>();
    int sign = l.power > 0 ? 1 : -1;
    for (long r = 0; r < reps; ++r) {
      if (sign > 0) {
        for (int top = l.hi - 1; top >= l.lo; --top)
          for (int i = l.lo; i <= top; ++i) out.push_back({i, 1});
      } else {
        // inverse word, reversed letter order with negative signs
        for (int top = l.lo; top <= l.hi - 1; ++top)
          for (int i = top; i >= l.lo; --i) out.push_back({i, -1});
      }
    }
  }
  return out;
}

BraidWord word_from_artin(const std::vector<ArtinLetter>& letters, int n) {
  std::vector<BraidLetter> ls;
  ls.reserve(letters.size());
  for (const auto& a : letters) ls.push_back({a.index, a.index + 1, Int(a.sign)});
  return normalize(std::move(ls), n);
}

namespace {

// Positional permutation of one powered letter: odd powers reverse the
// block lo..hi, even powers act trivially on positions.
void apply_letter_to_positions(std::vector<int>& pos, const BraidLetter& l) {
  if (abs_int(l.power) % 2 == 0) return;
  for (auto& p : pos)
    if (l.lo <= p && p <= l.hi) p = l.lo + l.hi - p;
}

}  // namespace

std::vector<int> strand_permutation(const BraidWord& w) {
  // pos[i] = current position of the strand that starts at i+1.
  // The word acts right-to-left on laminations, but the permutation of a
  // product is composition in the same order either way as long as we are
  // consistent; we apply letters from the right end.
  std::vector<int> pos(w.n);
  for (int i = 0; i < w.n; ++i) pos[i] = i + 1;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    apply_letter_to_positions(pos, *it);
  return pos;
}

BraidWord remove_strand(const BraidWord& w, int strand) {
  if (strand < 1 || strand > w.n) throw std::invalid_argument("remove_strand: bad strand");
  auto perm = strand_permutation(w);
  if (perm[strand - 1] != strand)
    throw std::invalid_argument("remove_strand: strand does not return to its position");
  // Walk letters in application order (right to left), tracking where the
  // deleted strand currently sits.
  int p = strand;
  std::vector<BraidLetter> out_rev;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto& l = *it;
    BraidLetter nl = l;
    if (p < l.lo) {
      // strand to the left: indices above it shift down by one
      nl.lo -= 1;
      nl.hi -= 1;
    } else if (p > l.hi) {
      // unaffected
    } else {
      // Strand inside the block: the remaining hi-lo strands still perform
      // the same power of a half-twist among themselves, which is the
      // half-twist of the block one narrower (positions < p keep their
      // index, positions > p shift down, so the block becomes [lo, hi-1]).
      nl.lo = l.lo;
      nl.hi = l.hi - 1;
      if (abs_int(l.power) % 2 == 1) p = l.lo + l.hi - p;
    }
    if (nl.lo < nl.hi) out_rev.push_back(nl);
    // nl.lo == nl.hi happens when the band had width 1 and the deleted
    // strand was one of its two strands: the letter disappears.
  }
  std::reverse(out_rev.begin(), out_rev.end());
  return normalize(std::move(out_rev), w.n - 1);
}

BraidWord parse_word(const std::string& text, int n) {
  std::vector<BraidLetter> ls;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == 's') {
      size_t caret = tok.find('^');
      std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
      int i = std::stoi(idx);
      Int k = 1;
      if (caret != std::string::npos) k = parse_int(tok.substr(caret + 1));
      if (i < 1 || i + 1 > n) throw std::out_of_range("parse_word: sigma index out of range");
      ls.push_back({i, i + 1, k});
    } else if (tok[0] == 'D') {
      size_t open = tok.find('('), comma = tok.find(','), close = tok.find(')');
      if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("parse_word: malformed D token: " + tok);
      int lo = std::stoi(tok.substr(open + 1, comma - open - 1));
      int hi = std::stoi(tok.substr(comma + 1, close - comma - 1));
      Int k = 1;
      size_t caret = tok.find('^', close);
      if (caret != std::string::npos) k = parse_int(tok.substr(caret + 1));
      if (!(1 <= lo && lo < hi && hi <= n))
        throw std::out_of_range("parse_word: D indices out of range");
      ls.push_back({lo, hi, k});
    } else {
      throw std::invalid_argument("parse_word: unknown token: " + tok);
    }
  }
  return normalize(std::move(ls), n);
}

std::string format_word(const BraidWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) out << ' ';
    first = false;
    if (l.hi == l.lo + 1) {
      out << 's' << l.lo;
      if (l.power != 1) out << '^' << l.power.str();
    } else {
      out << "D(" << l.lo << ',' << l.hi << ')';
      if (l.power != 1) out << '^' << l.power.str();
    }
  }
  return out.str();
}

}  // namespace braidlam
