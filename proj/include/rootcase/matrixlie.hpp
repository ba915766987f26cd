#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rootcase/rational.hpp"

namespace rootcase {

/// Quaternion with rational components w + x i + y j + z k. Complex
/// rationals are the y = z = 0 sublocus.
struct QuatRat {
  Rat w, x, y, z;

  QuatRat() = default;
  QuatRat(int v) : w(v) {}  // NOLINT: implicit scalar literals
  QuatRat(Rat w_, Rat x_ = 0, Rat y_ = 0, Rat z_ = 0)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static QuatRat i() { return QuatRat(0, 1, 0, 0); }
  static QuatRat j() { return QuatRat(0, 0, 1, 0); }
  static QuatRat k() { return QuatRat(0, 0, 0, 1); }

  bool is_zero() const {
    return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero();
  }
  bool is_complex() const { return y.is_zero() && z.is_zero(); }
  bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  QuatRat conj() const { return QuatRat(w, -x, -y, -z); }
  Rat norm_sq() const { return w * w + x * x + y * y + z * z; }

  friend QuatRat operator+(const QuatRat& a, const QuatRat& b) {
    return QuatRat(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z);
  }
  friend QuatRat operator-(const QuatRat& a, const QuatRat& b) {
    return QuatRat(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
  }
  QuatRat operator-() const { return QuatRat(-w, -x, -y, -z); }

  // i^2 = j^2 = k^2 = ijk = -1.
  friend QuatRat operator*(const QuatRat& a, const QuatRat& b) {
    return QuatRat(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                   a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                   a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                   a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  }

  friend bool operator==(const QuatRat& a, const QuatRat& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const QuatRat& a, const QuatRat& b) {
    return !(a == b);
  }
};

/// Dense matrix of rational quaternions.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatQ identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QuatRat(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuatRat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QuatRat& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& q : data_)
      if (!q.is_zero()) return false;
    return true;
  }

  MatQ adjoint() const {  // conjugate transpose
    MatQ m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
  }

  QuatRat trace() const {
    QuatRat t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = t + at(i, i);
    return t;
  }

  friend MatQ operator+(const MatQ& a, const MatQ& b) {
    check_same(a, b);
    MatQ m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      m.data_[i] = a.data_[i] + b.data_[i];
    return m;
  }
  friend MatQ operator-(const MatQ& a, const MatQ& b) {
    check_same(a, b);
    MatQ m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      m.data_[i] = a.data_[i] - b.data_[i];
    return m;
  }
  MatQ operator-() const {
    MatQ m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
  }
  friend MatQ operator*(const MatQ& a, const MatQ& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch();
    MatQ m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          m.at(r, c) = m.at(r, c) + a.at(r, k) * b.at(k, c);
      }
    return m;
  }
  friend MatQ operator*(const QuatRat& s, const MatQ& a) {
    MatQ m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = s * a.data_[i];
    return m;
  }

  friend bool operator==(const MatQ& a, const MatQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const MatQ& a, const MatQ& b) { return !(a == b); }

  /// Real-rational coordinates: 4 per entry, row-major.
  std::vector<Rat> flatten() const {
    std::vector<Rat> out;
    out.reserve(data_.size() * 4);
    for (const auto& q : data_) {
      out.push_back(q.w);
      out.push_back(q.x);
      out.push_back(q.y);
      out.push_back(q.z);
    }
    return out;
  }

 private:
  static void check_same(const MatQ& a, const MatQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch();
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QuatRat> data_;
};

inline MatQ bracket(const MatQ& a, const MatQ& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch();
  return a * b - b * a;
}

inline bool in_sp_n(const MatQ& a) {
  return a.rows() == a.cols() && a.adjoint() == -a;
}

inline bool in_su_n(const MatQ& a) {
  if (a.rows() != a.cols() || a.adjoint() != -a || !a.trace().is_zero())
    return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a.at(r, c).is_complex()) return false;
  return true;
}

/// Exact rank of rational row vectors by Gaussian elimination.
inline std::size_t rat_rank(std::vector<std::vector<Rat>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

inline bool in_rational_span(const std::vector<MatQ>& basis, const MatQ& target) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& b : basis) rows.push_back(b.flatten());
  std::size_t r0 = rat_rank(rows);
  rows.push_back(target.flatten());
  return rat_rank(rows) == r0;
}

/// Nullity of the commutator map B -> gB - Bg restricted to the span of the
/// given basis; optionally returns the coordinates of a null-space basis.
inline std::size_t fixed_subspace_dim(const MatQ& g,
                                      const std::vector<MatQ>& basis) {
  // Columns: basis coefficients; rows: flattened entries of gB - Bg.
  std::vector<std::vector<Rat>> cols;
  for (const auto& b : basis) cols.push_back((g * b - b * g).flatten());
  // rank of the transposed system equals rank of the column list
  return basis.size() - rat_rank(std::move(cols));
}

/// Eq.-(008) certificate: in sp(2) with H = diag(i, 0), X = offdiag(a, -a*),
/// Y = [H, X], the bracket [X, Y] escapes the rational span of {H, X, Y} for
/// every nonzero quaternion a.
inline bool verify_eq008(const QuatRat& a) {
  if (a.is_zero()) throw ZeroParameter();
  MatQ H(2, 2), X(2, 2);
  H.at(0, 0) = QuatRat::i();
  X.at(0, 1) = a;
  X.at(1, 0) = -a.conj();
  MatQ Y = bracket(H, X);
  // Shape stated alongside the definition: Y = [[0, ia], [a* i, 0]].
  MatQ Yexp(2, 2);
  Yexp.at(0, 1) = QuatRat::i() * a;
  Yexp.at(1, 0) = a.conj() * QuatRat::i();
  if (Y != Yexp) return false;
  if (!in_sp_n(H) || !in_sp_n(X) || !in_sp_n(Y)) return false;
  MatQ XY = bracket(X, Y);
  MatQ XYexp(2, 2);
  XYexp.at(0, 0) = QuatRat(2 * a.norm_sq()) * QuatRat::i();
  XYexp.at(1, 1) = -(a.conj() * QuatRat::i() * a + a.conj() * QuatRat::i() * a);
  if (XY != XYexp) return false;
  return !in_rational_span({H, X, Y}, XY);
}

namespace detail {

inline MatQ cycle3() {
  MatQ g(3, 3);
  g.at(0, 1) = QuatRat(1);
  g.at(1, 2) = QuatRat(1);
  g.at(2, 0) = QuatRat(1);
  return g;
}

inline std::vector<MatQ> su3_basis() {
  std::vector<MatQ> out;
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = p + 1; q < 3; ++q) {
      MatQ real(3, 3), imag(3, 3);
      real.at(p, q) = QuatRat(1);
      real.at(q, p) = QuatRat(-1);
      imag.at(p, q) = QuatRat::i();
      imag.at(q, p) = QuatRat::i();
      out.push_back(real);
      out.push_back(imag);
    }
  for (std::size_t p = 0; p + 1 < 3; ++p) {
    MatQ d(3, 3);
    d.at(p, p) = QuatRat::i();
    d.at(p + 1, p + 1) = -QuatRat::i();
    out.push_back(d);
  }
  return out;
}

/// sp(3) basis: E_pp q for q in {i,j,k}; E_pq - E_qp; (E_pq + E_qp) q.
inline std::vector<MatQ> sp3_basis() {
  std::vector<MatQ> out;
  const QuatRat units[3] = {QuatRat::i(), QuatRat::j(), QuatRat::k()};
  for (std::size_t p = 0; p < 3; ++p)
    for (const auto& u : units) {
      MatQ m(3, 3);
      m.at(p, p) = u;
      out.push_back(m);
    }
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = p + 1; q < 3; ++q) {
      MatQ skew(3, 3);
      skew.at(p, q) = QuatRat(1);
      skew.at(q, p) = QuatRat(-1);
      out.push_back(skew);
      for (const auto& u : units) {
        MatQ sym(3, 3);
        sym.at(p, q) = u;
        sym.at(q, p) = u;
        out.push_back(sym);
      }
    }
  return out;
}

inline MatQ all_ones_u() {
  MatQ u(3, 3);
  int vals[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) u.at(r, c) = QuatRat(vals[r][c]);
  return u;
}

inline MatQ scalar_sym(const QuatRat& s, int diag, int off) {
  MatQ m(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = s * QuatRat(r == c ? diag : off);
  return m;
}

}  // namespace detail

/// Eq.-(006)/(007) certificate in su(3): the 3-cycle g has order 3, its
/// centralizer in su(3) is the abelian plane spanned by u and v, and no
/// nonzero element of the diagonal torus commutes with g.
inline bool verify_eq006_su3() {
  MatQ g = detail::cycle3();
  if (g * g * g != MatQ::identity(3)) return false;
  MatQ u = detail::all_ones_u();
  MatQ v(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c) v.at(r, c) = QuatRat::i();
  if (!in_su_n(u) || !in_su_n(v)) return false;
  if (g * u != u * g || g * v != v * g) return false;
  if (!bracket(u, v).is_zero()) return false;
  auto basis = detail::su3_basis();
  if (fixed_subspace_dim(g, basis) != 2) return false;
  // Torus part: diagonal traceless anti-Hermitian matrices commuting with g.
  std::vector<MatQ> torus;
  for (std::size_t p = 0; p + 1 < 3; ++p) {
    MatQ d(3, 3);
    d.at(p, p) = QuatRat::i();
    d.at(p + 1, p + 1) = -QuatRat::i();
    torus.push_back(d);
  }
  return fixed_subspace_dim(g, torus) == 0;
}

/// Eq.-(007) certificate in sp(3): the fixed subspace of Ad(g) is
/// 7-dimensional, spanned by Im(H)v1 + Im(H)v2 + R u with the two Im(H)v_i
/// commuting A_1 ideals and the diagonal Im(H) I embedded across them.
inline bool verify_eq007_sp3() {
  MatQ g = detail::cycle3();
  auto basis = detail::sp3_basis();
  if (fixed_subspace_dim(g, basis) != 7) return false;

  const QuatRat units[3] = {QuatRat::i(), QuatRat::j(), QuatRat::k()};
  std::vector<MatQ> span7;
  for (const auto& q : units) span7.push_back(detail::scalar_sym(q, 1, 1));   // q v1
  for (const auto& q : units) span7.push_back(detail::scalar_sym(q, -2, 1));  // q v2
  MatQ u = detail::all_ones_u();
  span7.push_back(u);
  for (const auto& m : span7) {
    if (!in_sp_n(m)) return false;
    if (g * m != m * g) return false;
  }
  {
    std::vector<std::vector<Rat>> rows;
    for (const auto& m : span7) rows.push_back(m.flatten());
    if (rat_rank(std::move(rows)) != 7) return false;
  }
  // [Im(H)v1, Im(H)v2] = 0.
  for (const auto& q1 : units)
    for (const auto& q2 : units)
      if (!bracket(detail::scalar_sym(q1, 1, 1), detail::scalar_sym(q2, -2, 1))
               .is_zero())
        return false;
  // Each Im(H)v_i closes as an A_1: [q1 v, q2 v] proportional to q3 v.
  auto closes_a1 = [&](int diag, int off) {
    for (int t = 0; t < 3; ++t) {
      MatQ lhs = bracket(detail::scalar_sym(units[t], diag, off),
                         detail::scalar_sym(units[(t + 1) % 3], diag, off));
      MatQ third = detail::scalar_sym(units[(t + 2) % 3], diag, off);
      if (lhs.is_zero()) return false;
      if (!in_rational_span({third}, lhs)) return false;
    }
    return true;
  };
  if (!closes_a1(1, 1) || !closes_a1(-2, 1)) return false;
  // u commutes with both ideals.
  for (const auto& q : units) {
    if (!bracket(u, detail::scalar_sym(q, 1, 1)).is_zero()) return false;
    if (!bracket(u, detail::scalar_sym(q, -2, 1)).is_zero()) return false;
  }
  // Diagonal Im(H) I = (q v1 - q v2)/3: fixed diagonal-imaginary elements are
  // exactly Im(H) I, diagonally embedded across the two ideals.
  std::vector<MatQ> diag_im;
  for (std::size_t p = 0; p < 3; ++p)
    for (const auto& q : units) {
      MatQ m(3, 3);
      m.at(p, p) = q;
      diag_im.push_back(m);
    }
  if (fixed_subspace_dim(g, diag_im) != 3) return false;
  for (const auto& q : units) {
    MatQ qI(3, 3);
    for (std::size_t p = 0; p < 3; ++p) qI.at(p, p) = q;
    if (g * qI != qI * g) return false;
    if (!in_rational_span({detail::scalar_sym(q, 1, 1), detail::scalar_sym(q, -2, 1)},
                          qI))
      return false;
  }
  return true;
}

}  // namespace rootcase
