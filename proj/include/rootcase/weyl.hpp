#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootcase/roots.hpp"

namespace rootcase {

/// Orthogonal linear map on the ambient space, stored by columns. Used for
/// the outer automorphisms of the root set (D_n sign flip, D4 triality,
/// -id where -id is not a Weyl element).
struct OuterMap {
  std::vector<Vect> columns;
  std::string label;

  Vect apply(const Vect& v) const {
    if (v.dim() != columns.size()) throw DimensionMismatch();
    Vect out(columns.empty() ? 0 : columns[0].dim());
    for (std::size_t j = 0; j < columns.size(); ++j) out = out + v[j] * columns[j];
    return out;
  }
};

inline OuterMap neg_id_map(std::size_t dim) {
  OuterMap m;
  m.label = "-id";
  for (std::size_t j = 0; j < dim; ++j) {
    Vect col(dim);
    col[j] = FieldElem(-1);
    m.columns.push_back(col);
  }
  return m;
}

inline OuterMap last_coord_flip(std::size_t dim) {
  OuterMap m;
  m.label = "flip";
  for (std::size_t j = 0; j < dim; ++j) {
    Vect col(dim);
    col[j] = FieldElem(j + 1 == dim ? -1 : 1);
    m.columns.push_back(col);
  }
  return m;
}

/// Dominant representative of the Weyl orbit of v: the unique orbit element
/// pairing nonnegatively with every simple root, reached by reflecting at a
/// violated simple root until none is left.
inline Vect dominant_rep(const RootSystem& rs, Vect v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : rs.simple_base()) {
      if (inner(v, s).sign() < 0) {
        v = reflect(s, v);
        changed = true;
      }
    }
  }
  return v;
}

inline bool is_weyl_equivalent(const RootSystem& rs, const Vect& u,
                               const Vect& v) {
  return dominant_rep(rs, u) == dominant_rep(rs, v);
}

namespace detail {

/// Finds a vector whose Weyl orbit does not contain its image under `map`,
/// which certifies the map is not realized by any Weyl element.
inline std::optional<Vect> non_weyl_witness(const RootSystem& rs,
                                            const OuterMap& map) {
  std::vector<Vect> candidates;
  const std::size_t dim = rs.ambient_dim();
  {
    // Powers of two, mean-subtracted for the A family so the vector stays in
    // the sum-zero subspace and its coordinate multiset is asymmetric.
    Vect v(dim);
    Rat mean = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = FieldElem(Rat(Int(1) << i));
      mean += Rat(Int(1) << i);
    }
    if (rs.family() == Family::A) {
      mean /= int(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] -= FieldElem(mean);
    }
    candidates.push_back(v);
  }
  {
    Vect v(dim);
    for (std::size_t i = 0; i < dim; ++i)
      v[i] = FieldElem(Rat(3 * Int(i) * Int(i) + 1, 2));
    if (rs.family() == Family::A) {
      Rat mean = 0;
      for (std::size_t i = 0; i < dim; ++i) mean += v[i].a();
      mean /= int(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] -= FieldElem(mean);
    }
    candidates.push_back(v);
  }
  for (const auto& v : candidates)
    if (dominant_rep(rs, v) != dominant_rep(rs, map.apply(v))) return v;
  return std::nullopt;
}

inline bool verify_outer(const RootSystem& rs, const OuterMap& map) {
  auto perm = rs.permutation_of([&](const Vect& v) { return map.apply(v); });
  if (!perm) return false;
  for (std::size_t i = 0; i < rs.roots().size(); ++i)
    if (rs.root_norm_sq(i) != rs.root_norm_sq((*perm)[i])) return false;
  return non_weyl_witness(rs, map).has_value();
}

/// D4 triality candidate: one half of the 4x4 Hadamard matrix. Verified
/// against the root set before use; if it ever failed, search_triality_d4
/// scans the finite pool of orthogonal matrices with entries in {0,+-1/2,+-1}
/// whose columns come from the unit and half-integer norm-one vectors.
inline OuterMap triality_candidate_d4() {
  OuterMap m;
  m.label = "triality";
  const Rat h(1, 2);
  int rows[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (int j = 0; j < 4; ++j) {
    Vect col(4);
    for (int i = 0; i < 4; ++i) col[i] = FieldElem(Rat(rows[i][j]) * h);
    m.columns.push_back(col);
  }
  return m;
}

inline std::optional<OuterMap> search_triality_d4(const RootSystem& rs) {
  std::vector<Vect> pool;
  for (int i = 0; i < 4; ++i)
    for (int s = -1; s <= 1; s += 2) {
      Vect v(4);
      v[i] = FieldElem(s);
      pool.push_back(v);
    }
  for (unsigned mask = 0; mask < 16; ++mask) {
    Vect v(4);
    for (int i = 0; i < 4; ++i)
      v[i] = FieldElem(Rat((mask >> i) & 1 ? 1 : -1, 2));
    pool.push_back(v);
  }
  std::vector<std::size_t> pick;
  std::optional<OuterMap> found;
  auto dfs = [&](auto&& self) -> void {
    if (found) return;
    if (pick.size() == 4) {
      OuterMap m;
      m.label = "triality";
      for (auto p : pick) m.columns.push_back(pool[p]);
      if (verify_outer(rs, m)) found = m;
      return;
    }
    for (std::size_t p = 0; p < pool.size(); ++p) {
      bool ok = true;
      for (auto q : pick)
        if (!inner(pool[p], pool[q]).is_zero()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(p);
      self(self);
      pick.pop_back();
    }
  };
  dfs(dfs);
  return found;
}

}  // namespace detail

/// Outer automorphism generators of the root set: D_n sign flip (n >= 4,
/// with triality added for D4), -id for E6, and -id for A_n (n >= 2) where
/// the diagram flip equals -w0. Families whose -id already lies in W get an
/// empty list. Every returned map is verified to permute the roots, preserve
/// norms, and move some Weyl orbit (witness vector).
inline std::vector<OuterMap> outer_maps(const RootSystem& rs) {
  std::vector<OuterMap> out;
  auto add_verified = [&](OuterMap m) {
    if (!detail::verify_outer(rs, m))
      throw Error("outer map failed verification: " + m.label);
    out.push_back(std::move(m));
  };
  switch (rs.family()) {
    case Family::A:
      if (rs.rank() >= 2) add_verified(neg_id_map(rs.ambient_dim()));
      break;
    case Family::D:
      if (rs.rank() == 4) {
        add_verified(last_coord_flip(4));
        OuterMap tri = detail::triality_candidate_d4();
        if (detail::verify_outer(rs, tri)) {
          out.push_back(std::move(tri));
        } else {
          auto searched = detail::search_triality_d4(rs);
          if (!searched) throw Error("no D4 triality matrix found");
          out.push_back(std::move(*searched));
        }
      } else if (rs.rank() > 4) {
        add_verified(last_coord_flip(rs.ambient_dim()));
      }
      break;
    case Family::E:
      if (rs.rank() == 6) add_verified(neg_id_map(6));
      break;
    default:
      break;
  }
  return out;
}

/// Canonical representative of the (Weyl x optional outer) orbit of an
/// unordered root pair.
struct PairClass {
  Family family;
  unsigned rank;
  std::pair<Vect, Vect> rep;  // |rep.first| >= |rep.second|, ties lex
  std::pair<std::size_t, std::size_t> key;  // minimal index pair of the orbit
  bool used_outer = false;

  friend bool operator==(const PairClass& x, const PairClass& y) {
    return x.family == y.family && x.rank == y.rank && x.key == y.key;
  }
  friend bool operator<(const PairClass& x, const PairClass& y) {
    return x.key < y.key;
  }
};

/// Orbit machinery for unordered pairs of distinct, non-opposite roots under
/// the simple reflections (plus outer generators for D4/E6 when enabled).
/// Roots are interned to indices once, so the BFS itself is integer-only and
/// each orbit is explored exactly once across bulk enumeration.
class PairCanonicalizer {
 public:
  PairCanonicalizer(const RootSystem& rs, bool use_outer)
      : rs_(rs), n_(rs.roots().size()) {
    for (std::size_t s = 0; s < rs.simple_base().size(); ++s) {
      std::vector<std::size_t> perm(n_);
      for (std::size_t i = 0; i < n_; ++i) perm[i] = rs.simple_reflect_index(s, i);
      gens_.push_back(std::move(perm));
    }
    bool outer_applies =
        (rs.family() == Family::D && rs.rank() == 4) ||
        (rs.family() == Family::E && rs.rank() == 6);
    if (use_outer && outer_applies) {
      for (const auto& m : outer_maps(rs)) {
        auto perm =
            rs.permutation_of([&](const Vect& v) { return m.apply(v); });
        gens_.push_back(std::move(*perm));
        outer_used_ = true;
      }
    }
  }

  /// Canonical key (minimal index pair, i < j) of the orbit of {a, b}.
  std::pair<std::size_t, std::size_t> canonical_key(std::size_t a, std::size_t b) {
    if (a == b || rs_.negate_index(a) == b) throw InvalidPair();
    std::uint64_t start = pack(a, b);
    auto it = canon_.find(start);
    if (it != canon_.end()) return unpack(it->second);
    // BFS of the whole orbit; assign the minimum to every member.
    std::vector<std::uint64_t> orbit{start};
    std::map<std::uint64_t, bool> seen{{start, true}};
    std::uint64_t best = start;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      auto [i, j] = unpack(orbit[head]);
      for (const auto& g : gens_) {
        std::uint64_t next = pack(g[i], g[j]);
        if (seen.emplace(next, true).second) {
          orbit.push_back(next);
          if (next < best) best = next;
        }
      }
    }
    for (auto p : orbit) canon_[p] = best;
    return unpack(best);
  }

  PairClass make_class(const Vect& alpha, const Vect& beta) {
    auto ia = rs_.root_index(alpha);
    auto ib = rs_.root_index(beta);
    if (!ia || !ib) throw NotARoot();
    auto key = canonical_key(*ia, *ib);
    PairClass pc;
    pc.family = rs_.family();
    pc.rank = rs_.rank();
    pc.key = key;
    pc.used_outer = outer_used_;
    Vect u = rs_.roots()[key.first];
    Vect v = rs_.roots()[key.second];
    // Presentation order: longer root first, ties lexicographic.
    int cmp = (norm_sq(u) - norm_sq(v)).sign();
    if (cmp < 0) std::swap(u, v);
    pc.rep = {u, v};
    return pc;
  }

  /// Every pair class of the system, ordered by canonical key.
  std::vector<PairClass> all_classes() {
    std::vector<PairClass> out;
    std::map<std::uint64_t, bool> emitted;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (rs_.negate_index(i) == j) continue;
        auto key = canonical_key(i, j);
        if (emitted.emplace(pack(key.first, key.second), true).second)
          out.push_back(make_class(rs_.roots()[key.first], rs_.roots()[key.second]));
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool outer_used() const { return outer_used_; }

 private:
  std::uint64_t pack(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::uint64_t(i) * n_ + j;
  }
  std::pair<std::size_t, std::size_t> unpack(std::uint64_t p) const {
    return {static_cast<std::size_t>(p / n_), static_cast<std::size_t>(p % n_)};
  }

  const RootSystem& rs_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> gens_;
  bool outer_used_ = false;
  std::map<std::uint64_t, std::uint64_t> canon_;
};

/// Canonical class of the unordered pair {alpha, beta}; BFS over
/// simultaneous reflections, with outer generators adjoined for D4 and E6
/// when use_outer is set.
inline PairClass pair_canonical(const RootSystem& rs, const Vect& alpha,
                                const Vect& beta, bool use_outer) {
  PairCanonicalizer pc(rs, use_outer);
  return pc.make_class(alpha, beta);
}

}  // namespace rootcase
