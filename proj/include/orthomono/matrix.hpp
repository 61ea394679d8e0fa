#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orthomono/detail/elimination.hpp"
#include "orthomono/error.hpp"
#include "orthomono/field.hpp"
#include "orthomono/poly.hpp"

namespace orthomono {

using Vector = std::vector<Elt>;

/// Dense row-major matrix over a Field. Matrices act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elt> data)
      : f_(f), rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "matrix data size does not match shape");
  }

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix scalar(Field f, std::size_t n, Elt c) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }

  static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  static Matrix diagonal(Field f, const std::vector<Elt>& d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  Field field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Elt>& data() const { return a_; }

  Elt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elt operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = a_[i * cols_ + j];
    return v;
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(Elt s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = f_.mul(x, s);
    return m;
  }

  /// M v for a column vector v.
  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Elt acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc = f_.add(acc, f_.mul(a_[i * cols_ + j], v[j]));
      out[i] = acc;
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Elt x) { return x == 0; });
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  /// Canonical byte encoding (two bytes per entry), used for hashing and membership.
  std::string key() const {
    std::string s(a_.size() * 2, '\0');
    for (std::size_t i = 0; i < a_.size(); ++i) {
      s[2 * i] = static_cast<char>(a_[i] & 0xff);
      s[2 * i + 1] = static_cast<char>((a_[i] >> 8) & 0xff);
    }
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    const Field f = a.f_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elt x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.a_ < b.a_; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << f_.format((*this)(i, j));
      os << "]";
      if (i + 1 < rows_) os << '\n';
    }
    return os.str();
  }

 private:
  Field f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elt> a_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(const Matrix& m) {
  std::vector<Elt> a = m.data();
  auto pivots = detail::rref_inplace(m.field(), a, m.rows(), m.cols());
  const std::size_t r = pivots.size();
  return {Matrix(m.field(), m.rows(), m.cols(), std::move(a)), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline Elt det(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  std::vector<Elt> a = m.data();
  Elt d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && a[pr * n + c] == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pr * n + j], a[c * n + j]);
      d = f.neg(d);
    }
    const Elt piv = a[c * n + c];
    d = f.mul(d, piv);
    const Elt pinv = f.inv(piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elt factor = f.mul(a[i * n + c], pinv);
      if (factor == 0) continue;
      const Elt nf = f.neg(factor);
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.add(a[i * n + j], f.mul(nf, a[c * n + j]));
    }
  }
  return d;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  std::vector<Elt> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = m(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  auto piv = detail::rref_inplace(f, aug, n, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i * 2 * n + n + j];
  return inv;
}

inline Matrix matrix_pow(Matrix base, std::uint64_t e) {
  Matrix result = Matrix::identity(base.field(), base.rows());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

/// Linear subspace of F^n, stored by its canonical reduced echelon basis.
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field f, std::size_t n) { return Subspace(Matrix(f, 0, n)); }
  static Subspace full(Field f, std::size_t n) { return Subspace(Matrix::identity(f, n)); }

  /// Row span of a matrix.
  static Subspace span(const Matrix& rows) {
    auto r = rref(rows);
    std::vector<Elt> data(r.form.data().begin(),
                          r.form.data().begin() + static_cast<std::ptrdiff_t>(r.rank * rows.cols()));
    return Subspace(Matrix(rows.field(), r.rank, rows.cols(), std::move(data)));
  }
  static Subspace span(Field f, const std::vector<Vector>& vecs, std::size_t n) {
    return span(Matrix::from_rows(f, vecs, n));
  }

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        if (basis_(i, j) != 0) {
          p.push_back(j);
          break;
        }
    return p;
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match subspace");
    return coordinates(v).has_value();
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.vector(i))) return false;
    return true;
  }

  /// Coordinates y with v = sum y_i b_i, if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const {
    const Field f = field();
    const std::size_t n = ambient_dim();
    Vector rest = v;
    Vector y(dim(), 0);
    const auto piv = pivots();
    for (std::size_t i = 0; i < dim(); ++i) {
      const Elt c = rest[piv[i]];
      y[i] = c;
      if (c == 0) continue;
      const Elt nc = f.neg(c);
      for (std::size_t j = 0; j < n; ++j) rest[j] = f.add(rest[j], f.mul(nc, basis_(i, j)));
    }
    for (auto x : rest)
      if (x != 0) return std::nullopt;
    return y;
  }

  /// sum_i y_i b_i.
  Vector lift(const Vector& y) const {
    const Field f = field();
    Vector v(ambient_dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (y[i] == 0) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] = f.add(v[j], f.mul(y[i], basis_(i, j)));
    }
    return v;
  }

  /// Image g(W) = span{ g b_i }.
  Subspace image(const Matrix& g) const {
    if (g.cols() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "matrix does not act on this subspace");
    if (dim() == 0) return zero(field(), g.rows());
    return span(basis_ * g.transpose());
  }

  Subspace operator+(const Subspace& o) const {
    require_same_field(field(), o.field());
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(vector(i));
    for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.vector(i));
    if (rows.empty()) return *this;
    return span(field(), rows, ambient_dim());
  }

  Subspace intersect(const Subspace& o) const {
    require_same_field(field(), o.field());
    const Field f = field();
    const std::size_t n = ambient_dim();
    const std::size_t r = dim(), s = o.dim();
    if (r == 0 || s == 0) return zero(f, n);
    // x A = y B  <=>  (x, -y) [A; B] = 0; solve the transposed system
    std::vector<Elt> t(n * (r + s));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * (r + s) + i] = basis_(i, j);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * (r + s) + r + i] = o.basis_(i, j);
    std::vector<Vector> out;
    for (const auto& z : detail::nullspace(f, std::move(t), n, r + s)) {
      Vector x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(r));
      out.push_back(lift(x));
    }
    if (out.empty()) return zero(f, n);
    return span(f, out, n);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Canonical order: pivot columns first, then basis entries.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    const auto pa = a.pivots(), pb = b.pivots();
    if (pa != pb) return pa < pb;
    return a.basis_.data() < b.basis_.data();
  }

  std::string to_string() const { return dim() ? basis_.to_string() : "<0>"; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
};

/// { v : m v = 0 }.
inline Subspace kernel(const Matrix& m) {
  auto vecs = detail::nullspace(m.field(), m.data(), m.rows(), m.cols());
  if (vecs.empty()) return Subspace::zero(m.field(), m.cols());
  return Subspace::span(m.field(), vecs, m.cols());
}

/// Incrementally maintained echelon basis; used by spinning and algebra closure.
class EchelonBuilder {
 public:
  EchelonBuilder(Field f, std::size_t n) : f_(f), n_(n) {}

  /// Adds v if it is independent of the current span. Returns true if added.
  bool add(const Vector& v) {
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p] == 0) ++p;
    if (p == n_) return false;
    const Elt s = f_.inv(r[p]);
    for (auto& x : r) x = f_.mul(x, s);
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    originals_.push_back(v);
    return true;
  }

  bool contains(const Vector& v) const {
    const Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elt x) { return x == 0; });
  }

  std::size_t dim() const { return rows_.size(); }
  /// The vectors as originally added, in insertion order.
  const std::vector<Vector>& originals() const { return originals_; }

  Subspace subspace() const {
    if (rows_.empty()) return Subspace::zero(f_, n_);
    return Subspace::span(f_, rows_, n_);
  }

 private:
  Vector reduce(Vector r) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elt c = r[pivots_[i]];
      if (c == 0) continue;
      const Elt nc = f_.neg(c);
      for (std::size_t j = 0; j < n_; ++j) r[j] = f_.add(r[j], f_.mul(nc, rows_[i][j]));
    }
    return r;
  }

  Field f_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> originals_;
};

/// Solve x A = t for a row vector x, if a solution exists.
inline std::optional<Vector> solve_left(const Matrix& a, const Vector& t) {
  const Field f = a.field();
  const std::size_t r = a.rows(), n = a.cols();
  // columns of the augmented transpose: A^T x^T = t^T
  std::vector<Elt> aug(n * (r + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r; ++i) aug[j * (r + 1) + i] = a(i, j);
    aug[j * (r + 1) + r] = t[j];
  }
  const auto piv = detail::rref_inplace(f, aug, n, r + 1);
  if (!piv.empty() && piv.back() == r) return std::nullopt;
  Vector x(r, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i * (r + 1) + r];
  return x;
}

/// Evaluates p(m) by Horner's rule.
inline Matrix evaluate(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "polynomial evaluation needs a square matrix");
  require_same_field(p.field(), m.field());
  const Field f = m.field();
  Matrix acc(f, m.rows(), m.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + Matrix::scalar(f, m.rows(), p[i]);
  return acc;
}

/// det(xI - m) by fraction-free (Bareiss) elimination over F[x].
inline Poly charpoly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "characteristic polynomial of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(f, 1);
  std::vector<Poly> a(n * n, Poly(f));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly e = Poly::constant(f, f.neg(m(i, j)));
      if (i == j) e = e + Poly::x(f);
      a[i * n + j] = std::move(e);
    }
  bool negate = false;
  Poly prev = Poly::constant(f, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k].is_zero()) ++r;
      if (r == n) return Poly(f);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      a[i * n + k] = Poly(f);
    }
    prev = a[k * n + k];
  }
  Poly d = a[n * n - 1];
  if (negate) d = -d;
  return d;
}

/// Least common multiple of the minimal polynomials of the Krylov sequences
/// e_i, m e_i, m^2 e_i, ...
inline Poly minpoly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "minimal polynomial of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Poly result = Poly::constant(f, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> krylov;
    Vector v(n, 0);
    v[i] = 1;
    EchelonBuilder eb(f, n);
    while (eb.add(v)) {
      krylov.push_back(v);
      v = m.apply(v);
    }
    // v = sum c_j krylov_j
    auto c = solve_left(Matrix::from_rows(f, krylov, n), v);
    std::vector<Elt> coeffs(krylov.size() + 1, 0);
    for (std::size_t j = 0; j < krylov.size(); ++j) coeffs[j] = f.neg((*c)[j]);
    coeffs[krylov.size()] = 1;
    result = lcm(result, Poly(f, std::move(coeffs)));
  }
  return result;
}

struct PrimaryComponent {
  Poly factor;
  int multiplicity = 1;
  Subspace space;
};

/// ker q_i(m)^{e_i} for each irreducible factor q_i^{e_i} of the characteristic polynomial.
inline std::vector<PrimaryComponent> primary_components(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "primary components of a non-square matrix");
  std::vector<PrimaryComponent> out;
  for (const auto& fac : poly_factor(charpoly(m)).factors) {
    const Poly power = pow(fac.poly, static_cast<std::uint64_t>(fac.multiplicity));
    out.push_back({fac.poly, fac.multiplicity, kernel(evaluate(power, m))});
  }
  return out;
}

inline Matrix extend_scalars(const Matrix& m, Field to) {
  const auto& e = embedding(m.field(), to);
  std::vector<Elt> d;
  d.reserve(m.data().size());
  for (auto x : m.data()) d.push_back(e(x));
  return Matrix(to, m.rows(), m.cols(), std::move(d));
}

inline Subspace extend_scalars(const Subspace& s, Field to) {
  if (s.dim() == 0) return Subspace::zero(to, s.ambient_dim());
  return Subspace::span(extend_scalars(s.basis(), to));
}

/// Entry-wise Frobenius x -> x^e.
inline Matrix frobenius(const Matrix& m, std::uint64_t e) {
  const Field f = m.field();
  std::vector<Elt> d;
  d.reserve(m.data().size());
  for (auto x : m.data()) d.push_back(f.pow(x, e));
  return Matrix(f, m.rows(), m.cols(), std::move(d));
}

/// Galois descent: the F-subspace Z with K (x) Z = s.
///
/// The Frobenius x -> x^|F| maps a reduced echelon basis to a reduced echelon
/// basis with the same pivots, so s is stable exactly when its canonical
/// basis is fixed entry-wise. The fixed vectors of s are then the F-span of
/// that basis, which is read back through the embedding.
inline Subspace rational_form(const Subspace& s, Field base) {
  const Field k = s.field();
  const auto& e = embedding(base, k);
  const Matrix& b = s.basis();
  if (frobenius(b, base.order()) != b)
    throw Error(ErrorKind::NotGaloisStable, "subspace is not stable under the Frobenius of " + k.name() + "/" + base.name());
  std::vector<Elt> d;
  d.reserve(b.data().size());
  for (auto x : b.data()) {
    auto y = e.pullback(x);
    if (!y) throw Error(ErrorKind::NotGaloisStable, "basis entry outside the base field");
    d.push_back(*y);
  }
  if (s.dim() == 0) return Subspace::zero(base, s.ambient_dim());
  return Subspace::span(Matrix(base, b.rows(), b.cols(), std::move(d)));
}

/// Matrix of g restricted to an invariant subspace W, in the basis of W,
/// acting on coordinate column vectors.
inline Matrix restrict_to(const Matrix& g, const Subspace& w) {
  const std::size_t d = w.dim();
  Matrix r(g.field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto y = w.coordinates(g.apply(w.vector(i)));
    if (!y) throw Error(ErrorKind::NotInvariant, "subspace is not invariant under the matrix");
    for (std::size_t j = 0; j < d; ++j) r(j, i) = (*y)[j];
  }
  return r;
}

}  // namespace orthomono
