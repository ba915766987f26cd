#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "rootcase/rational.hpp"

namespace rootcase {

/// Element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of the real field Q(sqrt2, sqrt3).
///
/// Components are exact rationals in lowest terms, so equality is
/// componentwise. The basis {1, sqrt2, sqrt3, sqrt6} is linearly independent
/// over Q, hence an element is zero iff all four components are zero.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int v) : a_(v) {}  // NOLINT: implicit by design, scalar literals
  FieldElem(const Rat& v) : a_(v) {}
  FieldElem(Rat a, Rat b, Rat c, Rat d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static FieldElem sqrt2() { return FieldElem(0, 1, 0, 0); }
  static FieldElem sqrt3() { return FieldElem(0, 0, 1, 0); }
  static FieldElem sqrt6() { return FieldElem(0, 0, 0, 1); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  bool is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }
  bool is_rational() const {
    return b_.is_zero() && c_.is_zero() && d_.is_zero();
  }

  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) {
    return !(x == y);
  }

  FieldElem operator-() const { return FieldElem(-a_, -b_, -c_, -d_); }

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
  }
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
  }

  // Basis products: r2*r3 = r6, r2*r6 = 2*r3, r3*r6 = 3*r2.
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    if (x.is_rational()) {
      if (x.a_.is_zero()) return FieldElem();
      return FieldElem(x.a_ * y.a_, x.a_ * y.b_, x.a_ * y.c_, x.a_ * y.d_);
    }
    if (y.is_rational()) return y * x;
    Rat a = x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_;
    Rat b = x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_);
    Rat c = x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_);
    Rat d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return FieldElem(std::move(a), std::move(b), std::move(c), std::move(d));
  }

  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

  /// Division by a nonzero rational.
  friend FieldElem operator/(const FieldElem& x, const Rat& q) {
    if (q.is_zero()) throw Error("division by zero rational");
    return FieldElem(x.a_ / q, x.b_ / q, x.c_ / q, x.d_ / q);
  }

  /// Full multiplicative inverse via Galois conjugates:
  /// 1/x = conj2(x)*conj3(x)*conj23(x) / N(x) with N(x) rational.
  FieldElem inverse() const {
    if (is_zero()) throw Error("inverse of zero field element");
    FieldElem c2(a_, -b_, c_, -d_);
    FieldElem c3(a_, b_, -c_, -d_);
    FieldElem c23(a_, -b_, -c_, d_);
    FieldElem num = c2 * c3 * c23;
    FieldElem norm = *this * num;
    // norm is invariant under both conjugations, hence rational and nonzero.
    return num / norm.a_;
  }

  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
    if (y.is_rational()) return x / y.a();
    return x * y.inverse();
  }

  /// Exact sign under the standard real embedding (sqrt2, sqrt3 > 0).
  ///
  /// Zero is decided componentwise; otherwise rational enclosures of the
  /// radicals are refined until the interval excludes zero. Terminates for
  /// every input because the basis is linearly independent over Q.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sign_of(a_);
    for (unsigned digits = 4;; digits += 4) {
      auto r2 = enclose_sqrt(2, digits);
      auto r3 = enclose_sqrt(3, digits);
      auto r6 = enclose_sqrt(6, digits);
      Rat lo = a_, hi = a_;
      auto add = [&](const Rat& coef, const SqrtEnclosure& e) {
        if (sign_of(coef) >= 0) {
          lo += coef * e.lo;
          hi += coef * e.hi;
        } else {
          lo += coef * e.hi;
          hi += coef * e.lo;
        }
      };
      add(b_, r2);
      add(c_, r3);
      add(d_, r6);
      if (sign_of(lo) > 0) return 1;
      if (sign_of(hi) < 0) return -1;
    }
  }

  /// Total order by real value.
  friend bool operator<(const FieldElem& x, const FieldElem& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const FieldElem& x, const FieldElem& y) { return y < x; }
  friend bool operator<=(const FieldElem& x, const FieldElem& y) {
    return !(y < x);
  }
  friend bool operator>=(const FieldElem& x, const FieldElem& y) {
    return !(x < y);
  }

  double to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * 1.41421356237309515 +
           c_.convert_to<double>() * 1.7320508075688772 +
           d_.convert_to<double>() * 2.4494897427831781;
  }

  /// Canonical text: zero terms omitted, e.g. "1/2-3*r2+r6"; "0" for zero.
  std::string str() const {
    std::string out;
    auto term = [&](const Rat& coef, const char* radical) {
      if (coef.is_zero()) return;
      std::string mag = rootcase::to_string(coef < 0 ? Rat(-coef) : coef);
      if (!out.empty()) out += (sign_of(coef) < 0) ? "-" : "+";
      else if (sign_of(coef) < 0) out += "-";
      if (radical[0] == '\0') {
        out += mag;
      } else if (mag == "1") {
        out += radical;
      } else {
        out += mag;
        out += '*';
        out += radical;
      }
    };
    term(a_, "");
    term(b_, "r2");
    term(c_, "r3");
    term(d_, "r6");
    return out.empty() ? "0" : out;
  }

  /// Parses the textual form: signed terms "p/q", "p/q*rK", or bare "rK"
  /// with K in {2,3,6}. Whitespace is ignored.
  static FieldElem parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw ParseError("empty field element");
    FieldElem out;
    std::size_t i = 0;
    while (i < s.size()) {
      int sgn = 1;
      if (s[i] == '+' || s[i] == '-') {
        sgn = (s[i] == '-') ? -1 : 1;
        ++i;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string_view piece(s.data() + i, j - i);
      if (piece.empty()) throw ParseError("dangling sign in: " + s);
      Rat coef = 1;
      int radical = 1;
      auto star = piece.find('*');
      if (star != std::string_view::npos) {
        coef = parse_rational(piece.substr(0, star));
        radical = parse_radical(piece.substr(star + 1), s);
      } else if (piece[0] == 'r') {
        radical = parse_radical(piece, s);
      } else {
        coef = parse_rational(piece);
      }
      if (sgn < 0) coef = -coef;
      switch (radical) {
        case 1: out.a_ += coef; break;
        case 2: out.b_ += coef; break;
        case 3: out.c_ += coef; break;
        case 6: out.d_ += coef; break;
      }
      i = j;
    }
    return out;
  }

 private:
  static int parse_radical(std::string_view piece, const std::string& whole) {
    if (piece == "r2") return 2;
    if (piece == "r3") return 3;
    if (piece == "r6") return 6;
    throw ParseError("bad radical in: " + whole);
  }

  Rat a_, b_, c_, d_;
};

inline int sign_of(const FieldElem& x) { return x.sign(); }

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.str();
}

}  // namespace rootcase
