#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootcase/weyl.hpp"

namespace rootcase {

/// Orthogonal split of the Cartan subalgebra V = h_part + m_part, where
/// m_part is either zero (even models) or the line spanned by m_line (odd
/// models, typically R(alpha - beta)).
class CartanSplit {
 public:
  static CartanSplit even(std::size_t ambient) {
    CartanSplit s;
    s.ambient_ = ambient;
    return s;
  }
  static CartanSplit odd(Vect m_line) {
    if (m_line.is_zero()) throw ZeroRoot("m_part line must be nonzero");
    CartanSplit s;
    s.ambient_ = m_line.dim();
    s.norm_ = norm_sq(m_line);
    s.m_line_ = std::move(m_line);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  bool is_odd() const { return m_line_.has_value(); }
  const std::optional<Vect>& m_line() const { return m_line_; }

  Vect pr_m(const Vect& v) const {
    if (v.dim() != ambient_) throw DimensionMismatch();
    if (!m_line_) return Vect(ambient_);
    FieldElem q = inner(v, *m_line_) / norm_;
    return q * (*m_line_);
  }
  Vect pr_h(const Vect& v) const { return v - pr_m(v); }
  bool in_h_part(const Vect& v) const {
    if (!m_line_) return true;
    return inner(v, *m_line_).is_zero();
  }

 private:
  std::size_t ambient_ = 0;
  std::optional<Vect> m_line_;
  FieldElem norm_;
};

/// One h-root plane sitting diagonally across the g-root planes of its
/// preimages (all preimages project to alpha_prime).
struct DiagRecord {
  Vect alpha_prime;
  std::vector<Vect> preimages;  // sorted

  friend bool operator==(const DiagRecord& x, const DiagRecord& y) {
    return x.alpha_prime == y.alpha_prime && x.preimages == y.preimages;
  }
};

/// Root datum of the isotropy subalgebra: regular roots (whole g-root planes
/// in h) plus diagonal records.
struct HRootDatum {
  std::vector<Vect> regular;        // closed under negation, sorted
  std::vector<DiagRecord> diagonal; // alpha_prime on the positive side, sorted

  bool is_regular_root(const Vect& v) const {
    return std::binary_search(regular.begin(), regular.end(), v);
  }
  bool is_diag_preimage(const Vect& v) const {
    for (const auto& rec : diagonal) {
      if (std::binary_search(rec.preimages.begin(), rec.preimages.end(), v))
        return true;
      Vect neg = -v;
      if (std::binary_search(rec.preimages.begin(), rec.preimages.end(), neg))
        return true;
    }
    return false;
  }
  bool is_h_assigned(const Vect& v) const {
    return is_regular_root(v) || is_diag_preimage(v);
  }

  /// All h-roots as vectors in h_part: regular roots plus +-alpha' per
  /// diagonal record.
  std::vector<Vect> h_root_set() const {
    std::vector<Vect> out = regular;
    for (const auto& rec : diagonal) {
      out.push_back(rec.alpha_prime);
      out.push_back(-rec.alpha_prime);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t plane_dim_total() const {
    return regular.size() + 2 * diagonal.size();
  }
};

/// Case III datum: a simple root system with a pair of distinct,
/// non-opposite roots inducing the split with m_part = R(alpha - beta).
struct PairModel {
  RootSystem rs;
  Vect alpha, beta;
  CartanSplit split;

  static PairModel make(RootSystem rs, Vect alpha, Vect beta) {
    if (!rs.is_root(alpha) || !rs.is_root(beta)) throw NotARoot();
    if (beta == alpha || beta == -alpha) throw InvalidPair();
    Vect line = alpha - beta;
    PairModel pm{std::move(rs), std::move(alpha), std::move(beta),
                 CartanSplit::odd(line)};
    return pm;
  }

  Vect alpha_prime() const { return split.pr_h(alpha); }
};

struct MHatZero {
  int dim = 1;                 // 1 or 3
  std::optional<Vect> root;    // present when dim == 3
};

/// Either m_hat_0 = t (cap) m alone, or t + g_{+-alpha} when a root lies on
/// the m-line; returns the root on the positive side of the line.
inline MHatZero m_hat_zero(const PairModel& pm) {
  const Vect& d = *pm.split.m_line();
  FieldElem dn = norm_sq(d);
  for (const auto& r : pm.rs.roots()) {
    FieldElem q = inner(r, d) / dn;
    if (q.sign() <= 0) continue;
    if (r == q * d) return {3, r};
  }
  return {1, std::nullopt};
}

/// True iff gamma is the only root of the system inside R_{>0} gamma + m_part.
/// gamma must be a root lying in h_part.
inline bool only_root_on_ray(const RootSystem& rs, const CartanSplit& split,
                             const Vect& gamma) {
  if (!rs.is_root(gamma)) throw NotARoot();
  if (!split.in_h_part(gamma)) throw NotInHPart();
  FieldElem gn = norm_sq(gamma);
  for (const auto& delta : rs.roots()) {
    if (delta == gamma) continue;
    // gamma is orthogonal to the m-line, so the span coordinates decouple.
    FieldElem c = inner(delta, gamma) / gn;
    if (c.sign() <= 0) continue;
    Vect probe = c * gamma + split.pr_m(delta);
    if (probe == delta) return false;
  }
  return true;
}

/// True iff delta is the only root inside (2N-1) delta + m_part, i.e. no
/// other root equals p*delta + q*(m-line) with p an odd positive integer.
inline bool only_root_odd_multiples(const RootSystem& rs,
                                    const CartanSplit& split,
                                    const Vect& delta) {
  if (!rs.is_root(delta)) throw NotARoot();
  if (split.pr_h(delta).is_zero()) throw ZeroProjection();
  if (!split.is_odd()) return true;
  const Vect& d = *split.m_line();
  FieldElem g11 = norm_sq(delta), g12 = inner(delta, d), g22 = norm_sq(d);
  FieldElem det = g11 * g22 - g12 * g12;  // nonzero: delta independent of d
  for (const auto& eps : rs.roots()) {
    if (eps == delta) continue;
    FieldElem r1 = inner(eps, delta), r2 = inner(eps, d);
    FieldElem p = (r1 * g22 - r2 * g12) / det;
    FieldElem q = (g11 * r2 - g12 * r1) / det;
    if (!(p.is_rational() && is_odd_integer(p.a()) && p.sign() > 0)) continue;
    if (eps == p * delta + q * d) return false;
  }
  return true;
}

namespace detail {

inline bool lex_positive(const Vect& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    int s = v[i].sign();
    if (s != 0) return s > 0;
  }
  return false;
}

enum class RootStatus { Unknown, Regular, DiagMember };

/// pr_h-fiber decomposition of the roots over nonzero h-projections, with a
/// per-root status map driven to a fixpoint by the string transports.
struct TransportState {
  const RootSystem* rs;
  const CartanSplit* split;
  // Fiber of x: roots with pr_h exactly x, for lex-positive x. The mirror
  // fiber at -x is implicit.
  std::map<Vect, std::vector<Vect>> fibers;
  std::map<Vect, RootStatus> status;
  std::map<Vect, std::vector<Vect>> record_of;  // fiber base -> preimages
  std::vector<Vect> regular;

  void init(const RootSystem& r, const CartanSplit& s) {
    rs = &r;
    split = &s;
    for (const auto& root : r.roots()) {
      Vect h = s.pr_h(root);
      if (h.is_zero()) continue;  // m-line roots live in m_hat_0
      if (!lex_positive(h)) continue;
      fibers[h].push_back(root);
      status[root] = RootStatus::Unknown;
    }
    for (auto& [base, members] : fibers) std::sort(members.begin(), members.end());
  }

  void set_regular(const Vect& root) {
    if (!split->in_h_part(root))
      throw NotInHPart("regular h-root not in h_part");
    Vect key = lex_positive(split->pr_h(root)) ? root : -root;
    auto it = status.find(key);
    if (it == status.end()) throw NotARoot("regular seed not in a fiber");
    if (it->second == RootStatus::DiagMember)
      throw InconsistentTransport("root both regular and diagonal");
    it->second = RootStatus::Regular;
    regular.push_back(key);
    regular.push_back(-key);
  }

  void add_record(const Vect& base, std::vector<Vect> preimages) {
    std::sort(preimages.begin(), preimages.end());
    auto it = record_of.find(base);
    if (it != record_of.end()) {
      if (it->second != preimages)
        throw InconsistentTransport("conflicting diagonal records at a fiber");
      return;
    }
    for (const auto& p : preimages) {
      auto st = status.find(p);
      if (st == status.end()) throw NotARoot("diagonal preimage not in a fiber");
      if (st->second == RootStatus::Regular)
        throw InconsistentTransport("root both regular and diagonal");
      st->second = RootStatus::DiagMember;
    }
    record_of[base] = std::move(preimages);
  }

  /// Fires every transport ("shift the whole fiber by a known regular root")
  /// until nothing changes. A transport requires a status-complete bijection:
  /// all forward sums and backward differences are roots.
  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Vect> sigmas = regular;
      std::vector<std::pair<Vect, std::vector<Vect>>> worklist(fibers.begin(),
                                                               fibers.end());
      for (const auto& [base, members] : worklist) {
        bool known = record_of.count(base) > 0;
        if (!known)
          for (const auto& m : members)
            if (status[m] == RootStatus::Regular) {
              known = true;
              break;
            }
        if (!known) continue;
        for (const auto& sigma : sigmas) {
          Vect target_base = base + sigma;
          if (target_base.is_zero()) continue;
          bool mirrored = !lex_positive(target_base);
          Vect key = mirrored ? -target_base : target_base;
          auto it = fibers.find(key);
          if (it == fibers.end()) continue;
          if (it->second.size() != members.size()) continue;
          // Forward: every member shifts to a root in the target fiber;
          // backward: every target member shifts back.
          std::vector<Vect> image;
          bool ok = true;
          for (const auto& m : members) {
            Vect im = m + sigma;
            if (!rs->is_root(im)) {
              ok = false;
              break;
            }
            image.push_back(mirrored ? -im : im);
          }
          if (!ok) continue;
          std::sort(image.begin(), image.end());
          if (image != it->second) continue;
          for (const auto& t : it->second) {
            Vect back = (mirrored ? -t : t) - sigma;
            if (!rs->is_root(back)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          changed = apply_copy(base, members, sigma, mirrored) || changed;
        }
      }
    }
  }

  bool apply_copy(const Vect& base, const std::vector<Vect>& members,
                  const Vect& sigma, bool mirrored) {
    bool changed = false;
    // Per-member status copy.
    for (const auto& m : members) {
      if (status[m] != RootStatus::Regular) continue;
      Vect im = m + sigma;
      Vect key = lex_positive(split->pr_h(im)) ? im : -im;
      if (status[key] != RootStatus::Regular) {
        set_regular(key);
        changed = true;
      }
    }
    // Record copy.
    auto rec = record_of.find(base);
    if (rec != record_of.end()) {
      Vect target_base = base + sigma;
      std::vector<Vect> pre;
      for (const auto& p : rec->second) pre.push_back(mirrored ? -(p + sigma) : p + sigma);
      Vect tb = mirrored ? -target_base : target_base;
      if (!record_of.count(tb)) {
        add_record(tb, std::move(pre));
        changed = true;
      } else {
        add_record(tb, std::move(pre));  // consistency check only
      }
    }
    return changed;
  }

  HRootDatum result() const {
    HRootDatum out;
    out.regular = regular;
    std::sort(out.regular.begin(), out.regular.end());
    out.regular.erase(std::unique(out.regular.begin(), out.regular.end()),
                      out.regular.end());
    for (const auto& [base, pre] : record_of) out.diagonal.push_back({base, pre});
    return out;
  }
};

}  // namespace detail

/// Closure engine shared by the Case III-D and Case III-E checks: start from
/// given regular roots and diagonal records, then transport statuses along
/// known regular roots until a fixpoint.
inline HRootDatum transport_closure(const RootSystem& rs,
                                    const CartanSplit& split,
                                    const std::vector<Vect>& seed_regular,
                                    const std::vector<DiagRecord>& seed_records) {
  detail::TransportState st;
  st.init(rs, split);
  for (const auto& r : seed_regular) st.set_regular(r);
  for (const auto& rec : seed_records) {
    Vect base = rec.alpha_prime;
    std::vector<Vect> pre = rec.preimages;
    if (!detail::lex_positive(base)) {
      base = -base;
      for (auto& p : pre) p = -p;
    }
    st.add_record(base, pre);
  }
  st.run();
  return st.result();
}

/// Ray-forced regular roots: every root of h_part that is the only root on
/// its positive ray modulo the m-line.
inline std::vector<Vect> ray_forced_regulars(const RootSystem& rs,
                                             const CartanSplit& split) {
  std::vector<Vect> out;
  for (const auto& gamma : rs.roots())
    if (split.in_h_part(gamma) && only_root_on_ray(rs, split, gamma))
      out.push_back(gamma);
  return out;
}

/// Forced h-root datum of a pair model: the diagonal seed at alpha', the
/// ray-forced regular roots, and everything string transport adds.
inline HRootDatum forced_h_closure(const PairModel& pm) {
  DiagRecord seed;
  seed.alpha_prime = pm.alpha_prime();
  seed.preimages = {pm.alpha, pm.beta};
  return transport_closure(pm.rs, pm.split, ray_forced_regulars(pm.rs, pm.split),
                           {seed});
}

/// Certifies that the whole root plane of delta lies in m for every isotropy
/// algebra consistent with the closure: delta pairs nontrivially with the
/// m-line (so the plane cannot be regular in h) and is alone in its
/// pr_h-fiber (so no diagonal plane can touch it).
inline bool plane_certified_in_m(const PairModel& pm, const Vect& delta) {
  if (pm.split.in_h_part(delta)) return false;
  Vect h = pm.split.pr_h(delta);
  for (const auto& r : pm.rs.roots()) {
    if (r == delta) continue;
    if (pm.split.pr_h(r) == h) return false;
  }
  return true;
}

/// Homogeneous datum (g, h) at the root level. Components are the simple
/// ideals of g, embedded side by side in a concatenated coordinate space.
class HomModel {
 public:
  struct ComponentRoot {
    std::size_t component;
    Vect root;  // in the component's own coordinates
  };

  static HomModel even(RootSystem rs, std::vector<Vect> h_roots,
                       std::string label) {
    HomModel m;
    m.label_ = std::move(label);
    m.split_ = CartanSplit::even(rs.ambient_dim());
    m.components_.push_back(std::move(rs));
    m.init_roots();
    for (auto& r : h_roots) m.add_regular(std::move(r));
    m.finish();
    return m;
  }

  static HomModel odd_regular(RootSystem rs, std::vector<Vect> h_roots,
                              Vect m_line, std::string label) {
    HomModel m;
    m.label_ = std::move(label);
    m.split_ = CartanSplit::odd(std::move(m_line));
    m.components_.push_back(std::move(rs));
    m.init_roots();
    for (auto& r : h_roots) m.add_regular(std::move(r));
    m.finish();
    return m;
  }

  static HomModel from_pair(const PairModel& pm, std::string label) {
    HomModel m;
    m.label_ = std::move(label);
    m.split_ = pm.split;
    m.components_.push_back(pm.rs);
    m.init_roots();
    HRootDatum closure = forced_h_closure(pm);
    for (auto& r : closure.regular) m.add_regular(std::move(r));
    m.h_.diagonal = std::move(closure.diagonal);
    m.finish();
    return m;
  }

  /// Multi-component model; roots are given per component and embedded. The
  /// optional pair (alpha, beta) seeds one diagonal record; when absent and a
  /// pair of roots from two components is still wanted, use the pair fields.
  static HomModel cross(std::vector<RootSystem> components,
                        std::vector<ComponentRoot> regular,
                        std::optional<std::pair<ComponentRoot, ComponentRoot>> pair,
                        unsigned abelian_g_dims, unsigned abelian_h_dims,
                        std::string label) {
    HomModel m;
    m.label_ = std::move(label);
    m.components_ = std::move(components);
    m.abelian_g_ = abelian_g_dims;
    m.abelian_h_ = abelian_h_dims;
    std::size_t total = 0;
    for (const auto& c : m.components_) total += c.ambient_dim();
    if (pair) {
      Vect a = m.embed(pair->first), b = m.embed(pair->second);
      m.split_ = CartanSplit::odd(a - b);
      m.init_roots();
      DiagRecord rec;
      rec.alpha_prime = m.split_.pr_h(a);
      rec.preimages = {a, b};
      if (!detail::lex_positive(rec.alpha_prime)) {
        rec.alpha_prime = -rec.alpha_prime;
        for (auto& p : rec.preimages) p = -p;
      }
      std::sort(rec.preimages.begin(), rec.preimages.end());
      m.h_.diagonal.push_back(rec);
      m.pair_components_ = {pair->first.component, pair->second.component};
    } else {
      m.split_ = CartanSplit::even(total);
      m.init_roots();
    }
    for (const auto& cr : regular) m.add_regular(m.embed(cr));
    m.finish();
    return m;
  }

  const std::vector<RootSystem>& components() const { return components_; }
  const CartanSplit& split() const { return split_; }
  const HRootDatum& h() const { return h_; }
  const std::string& label() const { return label_; }
  const std::vector<Vect>& all_roots() const { return all_roots_; }
  unsigned abelian_g_dims() const { return abelian_g_; }
  unsigned abelian_h_dims() const { return abelian_h_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& pair_components()
      const {
    return pair_components_;
  }

  bool is_g_root(const Vect& v) const {
    return std::binary_search(all_roots_.begin(), all_roots_.end(), v);
  }

  /// Component owning the embedded root (by support), if unique.
  std::optional<std::size_t> component_of(const Vect& v) const {
    std::optional<std::size_t> owner;
    std::size_t offset = 0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      std::size_t d = components_[k].ambient_dim();
      for (std::size_t i = 0; i < d; ++i)
        if (!v[offset + i].is_zero()) {
          if (owner && *owner != k) return std::nullopt;
          owner = k;
        }
      offset += d;
    }
    return owner;
  }

  Vect embed(const ComponentRoot& cr) const {
    std::size_t offset = 0, total = 0;
    for (const auto& c : components_) total += c.ambient_dim();
    for (std::size_t k = 0; k < cr.component; ++k)
      offset += components_[k].ambient_dim();
    if (cr.component >= components_.size() ||
        cr.root.dim() != components_[cr.component].ambient_dim())
      throw DimensionMismatch();
    if (!components_[cr.component].is_root(cr.root))
      throw NotARoot("component root expected");
    Vect out(total);
    for (std::size_t i = 0; i < cr.root.dim(); ++i) out[offset + i] = cr.root[i];
    return out;
  }

  unsigned rk_g() const {
    unsigned r = abelian_g_;
    for (const auto& c : components_) r += c.rank();
    return r;
  }
  unsigned rk_h() const { return rk_g() - (split_.is_odd() ? 1 : 0); }

 private:
  void init_roots() {
    std::size_t total = 0;
    for (const auto& c : components_) total += c.ambient_dim();
    if (split_.ambient_dim() != total) throw DimensionMismatch();
    std::size_t offset = 0;
    for (const auto& c : components_) {
      for (const auto& r : c.roots()) {
        Vect v(total);
        for (std::size_t i = 0; i < r.dim(); ++i) v[offset + i] = r[i];
        all_roots_.push_back(std::move(v));
      }
      offset += c.ambient_dim();
    }
    std::sort(all_roots_.begin(), all_roots_.end());
  }

  void add_regular(Vect r) {
    if (!is_g_root(r)) throw NotARoot("regular h-root is not a g-root");
    if (!split_.in_h_part(r)) throw NotInHPart("regular h-root not in h_part");
    h_.regular.push_back(std::move(r));
  }

  void finish() {
    auto& reg = h_.regular;
    std::size_t n = reg.size();
    for (std::size_t i = 0; i < n; ++i) reg.push_back(-reg[i]);
    std::sort(reg.begin(), reg.end());
    reg.erase(std::unique(reg.begin(), reg.end()), reg.end());
    for (const auto& r : reg)
      if (h_.is_diag_preimage(r))
        throw InconsistentTransport("root both regular and diagonal preimage");
  }

  std::vector<RootSystem> components_;
  unsigned abelian_g_ = 0, abelian_h_ = 0;
  CartanSplit split_ = CartanSplit::even(0);
  HRootDatum h_;
  std::string label_;
  std::vector<Vect> all_roots_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_components_;
};

struct RankData {
  unsigned rk_g = 0, rk_h = 0;
  long dim_g = 0, dim_h = 0, dim_m = 0;
  bool parity_ok = false, rank_gap_ok = false;
};

/// Arithmetic shadow of the rank inequality: dim m must have the parity of
/// rk g - rk h, and the gap must be 0 or 1.
inline RankData rank_data(const HomModel& m) {
  RankData rd;
  rd.rk_g = m.rk_g();
  rd.rk_h = m.rk_h();
  rd.dim_g = long(rd.rk_g) + long(m.all_roots().size());
  rd.dim_h = long(rd.rk_h) + long(m.h().plane_dim_total());
  rd.dim_m = rd.dim_g - rd.dim_h;
  unsigned gap = rd.rk_g - rd.rk_h;
  rd.parity_ok = ((rd.dim_m - long(gap)) % 2) == 0;
  rd.rank_gap_ok = gap <= 1;
  return rd;
}

}  // namespace rootcase
