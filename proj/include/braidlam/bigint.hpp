#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidlam {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Int pos_part(const Int& x) { return x > 0 ? x : Int(0); }
inline Int neg_part(const Int& x) { return x < 0 ? Int(-x) : Int(0); }

// log2(x) for x >= 1, as double.  Exact for values fitting a double,
// msb-based otherwise.
inline double log2_int(const Int& x) {
  if (x <= 0) throw std::domain_error("log2_int: x must be positive");
  if (x == 1) return 0.0;
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 50) return std::log2(x.convert_to<double>());
  // x = m * 2^(bits-52) with m in [2^52, 2^53)
  Int m = x >> (bits - 52);
  return std::log2(m.convert_to<double>()) + static_cast<double>(bits - 52);
}

// log2(|k|+1), the Delta-length contribution of one powered letter.
inline double log2_abs_plus1(const Int& k) { return log2_int(abs_int(k) + 1); }

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return Int(s);
}

inline std::string to_string(const Int& x) { return x.str(); }

// floor(a/b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace braidlam
