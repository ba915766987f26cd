#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rootcase/exactfield.hpp"

namespace rootcase {

/// Vector with exact FieldElem coordinates in the ambient space of a root
/// system (R^{n+1} for A_n with coordinate sum zero, R^n otherwise).
class Vect {
 public:
  Vect() = default;
  explicit Vect(std::size_t dim) : c_(dim) {}
  Vect(std::initializer_list<FieldElem> coords) : c_(coords) {}
  explicit Vect(std::vector<FieldElem> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const FieldElem& operator[](std::size_t i) const { return c_[i]; }
  FieldElem& operator[](std::size_t i) { return c_[i]; }
  const std::vector<FieldElem>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Vect& u, const Vect& v) { return u.c_ == v.c_; }
  friend bool operator!=(const Vect& u, const Vect& v) { return !(u == v); }

  Vect operator-() const {
    Vect r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend Vect operator+(const Vect& u, const Vect& v) {
    check_dims(u, v);
    Vect r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) r.c_[i] = u.c_[i] + v.c_[i];
    return r;
  }
  friend Vect operator-(const Vect& u, const Vect& v) {
    check_dims(u, v);
    Vect r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) r.c_[i] = u.c_[i] - v.c_[i];
    return r;
  }
  friend Vect operator*(const FieldElem& s, const Vect& v) {
    Vect r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r.c_[i] = s * v.c_[i];
    return r;
  }

  /// Lexicographic order by real value of coordinates; first difference
  /// decides. Deterministic across runs and platforms.
  friend bool operator<(const Vect& u, const Vect& v) {
    check_dims(u, v);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      int s = (u.c_[i] - v.c_[i]).sign();
      if (s != 0) return s < 0;
    }
    return false;
  }

  std::string str(char sep = ',') const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) out += sep;
      out += c_[i].str();
    }
    return out;
  }

  /// Parses coordinates separated by `sep` (default comma).
  static Vect parse(std::string_view text, char sep = ',') {
    std::vector<FieldElem> coords;
    std::size_t start = 0;
    while (true) {
      auto pos = text.find(sep, start);
      auto piece = text.substr(start, pos == std::string_view::npos
                                          ? std::string_view::npos
                                          : pos - start);
      coords.push_back(FieldElem::parse(piece));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return Vect(std::move(coords));
  }

 private:
  static void check_dims(const Vect& u, const Vect& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch();
  }

  std::vector<FieldElem> c_;
};

inline FieldElem inner(const Vect& u, const Vect& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch();
  FieldElem s;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

inline FieldElem norm_sq(const Vect& u) { return inner(u, u); }

inline std::ostream& operator<<(std::ostream& os, const Vect& v) {
  return os << v.str();
}

/// Unordered pair order: elements sorted first, then lexicographic.
struct VectPairLess {
  bool operator()(const std::pair<Vect, Vect>& x,
                  const std::pair<Vect, Vect>& y) const {
    if (x.first < y.first) return true;
    if (y.first < x.first) return false;
    return x.second < y.second;
  }
};

}  // namespace rootcase
