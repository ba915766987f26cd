#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootcase/vect.hpp"

namespace rootcase {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

inline Family family_from_letter(char ch) {
  switch (ch) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw ConfigError(std::string("unknown family letter: ") + ch);
}

/// Angles occurring between two roots of a simple system.
enum class AngleClass {
  Zero,
  Pi6,
  Pi4,
  Pi3,
  Pi2,
  TwoPi3,
  ThreePi4,
  FivePi6,
  Pi,
};

inline const char* to_string(AngleClass a) {
  switch (a) {
    case AngleClass::Zero: return "0";
    case AngleClass::Pi6: return "pi/6";
    case AngleClass::Pi4: return "pi/4";
    case AngleClass::Pi3: return "pi/3";
    case AngleClass::Pi2: return "pi/2";
    case AngleClass::TwoPi3: return "2pi/3";
    case AngleClass::ThreePi4: return "3pi/4";
    case AngleClass::FivePi6: return "5pi/6";
    case AngleClass::Pi: return "pi";
  }
  return "?";
}

inline std::optional<AngleClass> angle_from_string(std::string_view s) {
  if (s == "0") return AngleClass::Zero;
  if (s == "pi/6") return AngleClass::Pi6;
  if (s == "pi/4") return AngleClass::Pi4;
  if (s == "pi/3") return AngleClass::Pi3;
  if (s == "pi/2") return AngleClass::Pi2;
  if (s == "2pi/3") return AngleClass::TwoPi3;
  if (s == "3pi/4") return AngleClass::ThreePi4;
  if (s == "5pi/6") return AngleClass::FivePi6;
  if (s == "pi") return AngleClass::Pi;
  return std::nullopt;
}

/// Classifies the angle between nonzero u, v from r = 4<u,v>^2/(|u|^2|v|^2)
/// and the sign of <u,v>. For roots of a simple system r is an integer in
/// {0,...,4}; anything else raises NotRootAngle.
inline AngleClass angle_class(const Vect& u, const Vect& v) {
  if (u.is_zero() || v.is_zero()) throw ZeroRoot("angle of zero vector");
  FieldElem ip = inner(u, v);
  FieldElem r4 = (4 * ip * ip) / (norm_sq(u) * norm_sq(v));
  if (!r4.is_rational() || !is_integer(r4.a()))
    throw NotRootAngle("non-integral angle invariant");
  Int rn = numerator(r4.a());
  if (rn < 0 || rn > 4) throw NotRootAngle("angle invariant out of range");
  int r = rn.convert_to<int>();
  int s = ip.sign();
  switch (r) {
    case 0: return AngleClass::Pi2;
    case 1: return s > 0 ? AngleClass::Pi3 : AngleClass::TwoPi3;
    case 2: return s > 0 ? AngleClass::Pi4 : AngleClass::ThreePi4;
    case 3: return s > 0 ? AngleClass::Pi6 : AngleClass::FivePi6;
    case 4: return s > 0 ? AngleClass::Zero : AngleClass::Pi;
    default: throw NotRootAngle("angle invariant out of range");
  }
}

/// Reflection of v in the hyperplane orthogonal to alpha, exact.
inline Vect reflect(const Vect& alpha, const Vect& v) {
  if (alpha.is_zero()) throw ZeroRoot("reflection in zero vector");
  FieldElem scale = (2 * inner(v, alpha)) / norm_sq(alpha);
  return v - scale * alpha;
}

/// The root system of a compact simple Lie algebra in its standard
/// coordinates, with a fixed simple base and a reflection-permutation table.
/// Immutable after construction; all queries are pure.
class RootSystem {
 public:
  static RootSystem build(Family family, unsigned rank);

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vect>& roots() const { return roots_; }
  const std::vector<Vect>& simple_base() const { return base_; }
  std::string name() const {
    return std::string(1, family_letter(family_)) + std::to_string(rank_);
  }

  bool is_root(const Vect& v) const { return root_index(v).has_value(); }

  /// Index into the sorted root list, if v is a root.
  std::optional<std::size_t> root_index(const Vect& v) const {
    if (v.dim() != ambient_) throw DimensionMismatch();
    auto it = std::lower_bound(roots_.begin(), roots_.end(), v);
    if (it != roots_.end() && *it == v)
      return static_cast<std::size_t>(it - roots_.begin());
    return std::nullopt;
  }

  const FieldElem& root_norm_sq(std::size_t i) const { return norms_[i]; }

  /// Image of root i under the reflection in simple root s.
  std::size_t simple_reflect_index(std::size_t s, std::size_t i) const {
    return refl_perm_[s][i];
  }

  std::size_t negate_index(std::size_t i) const { return neg_perm_[i]; }

  /// Applies a root-to-root map and returns the permutation of indices, or
  /// nullopt if some image is not a root.
  template <typename Map>
  std::optional<std::vector<std::size_t>> permutation_of(Map&& map) const {
    std::vector<std::size_t> perm(roots_.size());
    std::vector<bool> seen(roots_.size(), false);
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      auto idx = root_index(map(roots_[i]));
      if (!idx || seen[*idx]) return std::nullopt;
      perm[i] = *idx;
      seen[*idx] = true;
    }
    return perm;
  }

 private:
  RootSystem() = default;

  void finalize();

  Family family_{};
  unsigned rank_{};
  std::size_t ambient_{};
  std::vector<Vect> roots_;   // sorted in the canonical lexicographic order
  std::vector<Vect> base_;
  std::vector<FieldElem> norms_;
  std::vector<std::vector<std::size_t>> refl_perm_;
  std::vector<std::size_t> neg_perm_;
};

namespace detail {

inline Vect unit(std::size_t dim, std::size_t i, const FieldElem& v = 1) {
  Vect e(dim);
  e[i] = v;
  return e;
}

inline void push_pm(std::vector<Vect>& out, const Vect& v) {
  out.push_back(v);
  out.push_back(-v);
}

// Positive system / indecomposability extraction of a simple base, used for
// the E family where no base is pinned by convention.
inline std::vector<Vect> extract_base(const std::vector<Vect>& roots,
                                      std::size_t dim) {
  // Functional with weights 2^i has no root in its kernel for any family
  // here: the top coordinate present always dominates or the radical part is
  // nonzero.
  Vect w(dim);
  FieldElem p = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    w[i] = p;
    p = 2 * p;
  }
  std::vector<Vect> pos;
  for (const auto& r : roots) {
    int s = inner(w, r).sign();
    if (s == 0) throw Error("base extraction: functional vanishes on a root");
    if (s > 0) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end());
  std::vector<Vect> base;
  for (const auto& cand : pos) {
    bool decomposable = false;
    for (const auto& other : pos) {
      if (other == cand) continue;
      if (std::binary_search(pos.begin(), pos.end(), cand - other)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(cand);
  }
  return base;
}

}  // namespace detail

inline RootSystem RootSystem::build(Family family, unsigned rank) {
  using detail::push_pm;
  using detail::unit;
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  std::vector<Vect>& roots = rs.roots_;
  const FieldElem half(Rat(1, 2));
  const FieldElem r3 = FieldElem::sqrt3();
  const FieldElem r2 = FieldElem::sqrt2();

  switch (family) {
    case Family::A: {
      if (rank < 1) throw InvalidRank("A_n needs n >= 1");
      std::size_t n = rank + 1;
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          push_pm(roots, unit(n, i) - unit(n, j));
      for (std::size_t i = 0; i + 1 < n; ++i)
        rs.base_.push_back(unit(n, i) - unit(n, i + 1));
      break;
    }
    case Family::B: {
      if (rank < 2) throw InvalidRank("B_n needs n >= 2");
      std::size_t n = rank;
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          push_pm(roots, unit(n, i) + unit(n, j));
          push_pm(roots, unit(n, i) - unit(n, j));
        }
      for (std::size_t i = 0; i < n; ++i) push_pm(roots, unit(n, i));
      for (std::size_t i = 0; i + 1 < n; ++i)
        rs.base_.push_back(unit(n, i) - unit(n, i + 1));
      rs.base_.push_back(unit(n, n - 1));
      break;
    }
    case Family::C: {
      if (rank < 3) throw InvalidRank("C_n needs n >= 3");
      std::size_t n = rank;
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          push_pm(roots, unit(n, i) + unit(n, j));
          push_pm(roots, unit(n, i) - unit(n, j));
        }
      for (std::size_t i = 0; i < n; ++i) push_pm(roots, unit(n, i, 2));
      for (std::size_t i = 0; i + 1 < n; ++i)
        rs.base_.push_back(unit(n, i) - unit(n, i + 1));
      rs.base_.push_back(unit(n, n - 1, 2));
      break;
    }
    case Family::D: {
      // D_2 is not simple; D_3 (= A_3) is allowed.
      if (rank < 3) throw InvalidRank("D_n needs n >= 3");
      std::size_t n = rank;
      rs.ambient_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          push_pm(roots, unit(n, i) + unit(n, j));
          push_pm(roots, unit(n, i) - unit(n, j));
        }
      for (std::size_t i = 0; i + 1 < n; ++i)
        rs.base_.push_back(unit(n, i) - unit(n, i + 1));
      rs.base_.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    }
    case Family::E: {
      if (rank == 6) {
        rs.ambient_ = 6;
        for (std::size_t i = 0; i < 5; ++i)
          for (std::size_t j = i + 1; j < 5; ++j) {
            push_pm(roots, unit(6, i) + unit(6, j));
            push_pm(roots, unit(6, i) - unit(6, j));
          }
        // 1/2(+-e1 ... +-e5 +-sqrt3 e6) with an odd number of plus signs.
        for (unsigned mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) % 2 == 0) continue;
          Vect v(6);
          for (std::size_t i = 0; i < 5; ++i)
            v[i] = (mask >> i) & 1 ? half : -half;
          v[5] = ((mask >> 5) & 1 ? half : -half) * r3;
          roots.push_back(v);
        }
      } else if (rank == 7) {
        rs.ambient_ = 7;
        for (std::size_t i = 0; i < 6; ++i)
          for (std::size_t j = i + 1; j < 6; ++j) {
            push_pm(roots, unit(7, i) + unit(7, j));
            push_pm(roots, unit(7, i) - unit(7, j));
          }
        push_pm(roots, unit(7, 6, r2));
        // +-1/2 e1 ... +-1/2 e6 +-(sqrt2/2) e7 with an even number of +1/2.
        for (unsigned mask = 0; mask < 128; ++mask) {
          if (__builtin_popcount(mask & 63) % 2 != 0) continue;
          Vect v(7);
          for (std::size_t i = 0; i < 6; ++i)
            v[i] = (mask >> i) & 1 ? half : -half;
          v[6] = ((mask >> 6) & 1 ? half : -half) * r2;
          roots.push_back(v);
        }
      } else if (rank == 8) {
        rs.ambient_ = 8;
        for (std::size_t i = 0; i < 8; ++i)
          for (std::size_t j = i + 1; j < 8; ++j) {
            push_pm(roots, unit(8, i) + unit(8, j));
            push_pm(roots, unit(8, i) - unit(8, j));
          }
        // 1/2(+-e1 ... +-e8) with an even number of plus signs.
        for (unsigned mask = 0; mask < 256; ++mask) {
          if (__builtin_popcount(mask) % 2 != 0) continue;
          Vect v(8);
          for (std::size_t i = 0; i < 8; ++i)
            v[i] = (mask >> i) & 1 ? half : -half;
          roots.push_back(v);
        }
      } else {
        throw InvalidRank("E rank must be 6, 7 or 8");
      }
      rs.base_ = detail::extract_base(roots, rs.ambient_);
      break;
    }
    case Family::F: {
      if (rank != 4) throw InvalidRank("F rank must be 4");
      rs.ambient_ = 4;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          push_pm(roots, unit(4, i) + unit(4, j));
          push_pm(roots, unit(4, i) - unit(4, j));
        }
      for (std::size_t i = 0; i < 4; ++i) push_pm(roots, unit(4, i));
      for (unsigned mask = 0; mask < 16; ++mask) {
        Vect v(4);
        for (std::size_t i = 0; i < 4; ++i)
          v[i] = (mask >> i) & 1 ? half : -half;
        roots.push_back(v);
      }
      rs.base_.push_back(unit(4, 1) - unit(4, 2));
      rs.base_.push_back(unit(4, 2) - unit(4, 3));
      rs.base_.push_back(unit(4, 3));
      rs.base_.push_back(Vect{half, -half, -half, -half});
      break;
    }
    case Family::G: {
      if (rank != 2) throw InvalidRank("G rank must be 2");
      rs.ambient_ = 2;
      const FieldElem half_r3 = half * r3;
      const FieldElem three_half(Rat(3, 2));
      push_pm(roots, Vect{FieldElem(1), FieldElem(0)});
      push_pm(roots, Vect{half, half_r3});
      push_pm(roots, Vect{half, -half_r3});
      push_pm(roots, Vect{FieldElem(0), r3});
      push_pm(roots, Vect{three_half, half_r3});
      push_pm(roots, Vect{three_half, -half_r3});
      rs.base_.push_back(Vect{FieldElem(1), FieldElem(0)});
      rs.base_.push_back(Vect{-three_half, half_r3});
      break;
    }
  }
  rs.finalize();
  return rs;
}

inline void RootSystem::finalize() {
  std::sort(roots_.begin(), roots_.end());
  norms_.reserve(roots_.size());
  for (const auto& r : roots_) norms_.push_back(norm_sq(r));
  refl_perm_.resize(base_.size());
  for (std::size_t s = 0; s < base_.size(); ++s) {
    auto perm = permutation_of(
        [&](const Vect& v) { return reflect(base_[s], v); });
    if (!perm) throw Error("simple reflection does not preserve the roots");
    refl_perm_[s] = std::move(*perm);
  }
  auto neg = permutation_of([](const Vect& v) { return -v; });
  if (!neg) throw Error("root set is not symmetric");
  neg_perm_ = std::move(*neg);
}

/// Closed-form root count per family, used as a construction cross-check.
inline std::size_t expected_root_count(Family family, unsigned n) {
  switch (family) {
    case Family::A: return std::size_t(n) * (n + 1);
    case Family::B:
    case Family::C: return 2u * n * n;
    case Family::D: return 2u * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace rootcase
