#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "rootcase/errors.hpp"

namespace rootcase {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& x) { return x.sign(); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline bool is_odd_integer(const Rat& x) {
  return is_integer(x) && ((numerator(x) % 2) != 0);
}

/// Formats p/q with the "/q" suppressed for integers.
inline std::string to_string(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += '/';
    s += denominator(x).str();
  }
  return s;
}

/// Parses "p" or "p/q" with optional sign. Throws ParseError on junk.
inline Rat parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::string buf(text);
  for (char ch : buf) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw ParseError("bad rational: " + buf);
  }
  try {
    Rat r(buf);
    return r;
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + buf);
  }
}

/// Floor of sqrt(n) for nonnegative n.
inline Int floor_isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

/// Rational enclosure lo <= sqrt(k) <= hi with denominator 10^digits.
struct SqrtEnclosure {
  Rat lo, hi;
};

inline SqrtEnclosure enclose_sqrt(unsigned k, unsigned digits) {
  Int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Int s = floor_isqrt(Int(k) * scale * scale);
  return {Rat(s, scale), Rat(s + 1, scale)};
}

}  // namespace rootcase
