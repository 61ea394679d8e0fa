#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orthomono/error.hpp"
#include "orthomono/field.hpp"
#include "orthomono/matrix.hpp"

namespace orthomono {

/// (V, Q) with Gram matrix B[i][j] = b(e_i, e_j), where b is the
/// polarization b(u, v) = (Q(u + v) - Q(u) - Q(v)) / 2, so Q(v) = b(v, v).
/// Degenerate forms are representable (see radical()); every operation that
/// needs nondegeneracy calls require_nondegenerate().
class QuadraticSpace {
 public:
  QuadraticSpace() = default;
  explicit QuadraticSpace(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
    if (gram_ != gram_.transpose()) throw Error(ErrorKind::InvalidArgument, "Gram matrix must be symmetric");
  }

  static QuadraticSpace standard(Field f, std::size_t n) { return QuadraticSpace(Matrix::identity(f, n)); }

  /// Builds a space from raw residues; rejects characteristic 2 with a dedicated error.
  static QuadraticSpace from_residues(std::uint64_t p, const std::vector<std::vector<long long>>& gram) {
    return QuadraticSpace(Matrix::from_ints(Field::prime(p), gram));
  }

  Field field() const { return gram_.field(); }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  bool is_nondegenerate() const { return det(gram_) != 0; }

  void require_nondegenerate() const {
    if (!is_nondegenerate()) throw Error(ErrorKind::DegenerateForm, "quadratic form is degenerate (nonzero radical)");
  }

  Elt b(const Vector& u, const Vector& v) const {
    const Field f = field();
    const Vector bv = gram_.apply(v);
    Elt acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], bv[i]));
    return acc;
  }

  Elt Q(const Vector& v) const { return b(v, v); }

  /// Gram matrix of b restricted to a subspace (in its basis).
  Matrix restricted_gram(const Subspace& w) const { return w.basis() * gram_ * w.basis().transpose(); }

  QuadraticSpace restrict_to(const Subspace& w) const { return QuadraticSpace(restricted_gram(w)); }

  /// Same form viewed over an extension field.
  QuadraticSpace extend_scalars(Field to) const { return QuadraticSpace(orthomono::extend_scalars(gram_, to)); }

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

/// g^T B g = B, which in odd characteristic is equivalent to Q(gv) = Q(v).
inline bool is_isometry(const Matrix& g, const QuadraticSpace& s) {
  if (!g.is_square() || g.rows() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix does not act on the space");
  require_same_field(g.field(), s.field());
  return g.transpose() * s.gram() * g == s.gram();
}

inline Subspace radical(const QuadraticSpace& s) { return kernel(s.gram()); }

inline Subspace orthogonal_complement(const QuadraticSpace& s, const Subspace& w) {
  if (w.dim() == 0) return Subspace::full(s.field(), s.dim());
  return kernel(w.basis() * s.gram());
}

struct ScalarForm {
  Matrix basis;  ///< columns are the new basis vectors: P^T B P = c I
  FieldElem scalar;
};

namespace detail {

// Least non-square of the field, by code.
inline Elt least_nonsquare(const Field& f) {
  for (Elt a = 1; a < f.order(); ++a)
    if (!f.is_square(a)) return a;
  throw Error(ErrorKind::InvariantViolation, "field has no non-square");
}

inline Vector scale(const Field& f, Vector v, Elt s) {
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

inline Vector axpy(const Field& f, Elt a, const Vector& x, const Vector& y) {
  Vector out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(a, x[i]));
  return out;
}

}  // namespace detail

/// Basis change P with P^T B P = c I for odd n.
///
/// Orthogonal basis by Gram-Schmidt, searching each complement in the order
/// u_i, then u_i + u_j (lexicographic). The scalar c is the first value Q(w_1)
/// when it lies in the discriminant class, else the least element of that
/// class. Vectors whose value differs from c by a square are rescaled; the
/// rest come in pairs and are replaced by a rotated pair inside their plane.
inline ScalarForm diagonalize_scalar(const QuadraticSpace& s) {
  const std::size_t n = s.dim();
  if (n % 2 == 0) throw Error(ErrorKind::EvenDimension, "scalar diagonalization needs odd dimension");
  s.require_nondegenerate();
  const Field f = s.field();

  std::vector<Vector> ortho;
  std::vector<Elt> values;
  Subspace rest = Subspace::full(f, n);
  while (rest.dim() > 0) {
    std::vector<Vector> cand;
    for (std::size_t i = 0; i < rest.dim(); ++i) cand.push_back(rest.vector(i));
    for (std::size_t i = 0; i < rest.dim(); ++i)
      for (std::size_t j = i + 1; j < rest.dim(); ++j) cand.push_back(detail::axpy(f, 1, rest.vector(i), rest.vector(j)));
    bool found = false;
    for (const auto& v : cand) {
      const Elt qv = s.Q(v);
      if (qv == 0) continue;
      ortho.push_back(v);
      values.push_back(qv);
      rest = rest.intersect(orthogonal_complement(s, Subspace::span(f, {v}, n)));
      found = true;
      break;
    }
    if (!found) throw Error(ErrorKind::DegenerateForm, "no anisotropic vector in a nonzero complement");
  }

  Elt disc = 1;
  for (auto v : values) disc = f.mul(disc, v);
  Elt c = 0;
  if (f.is_square(f.div(values[0], disc))) {
    c = values[0];
  } else {
    for (Elt a = 1; a < f.order(); ++a)
      if (f.is_square(f.div(a, disc))) {
        c = a;
        break;
      }
  }

  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < n; ++i) {
    const Elt ratio = f.div(c, values[i]);
    if (auto r = f.sqrt(ratio)) {
      if (*r != 1) ortho[i] = detail::scale(f, ortho[i], *r);
      values[i] = c;
    } else {
      bad.push_back(i);
    }
  }
  if (bad.size() % 2 != 0) throw Error(ErrorKind::InvariantViolation, "odd number of square-class mismatches");
  for (std::size_t t = 0; t < bad.size(); t += 2) {
    const std::size_t i = bad[t], j = bad[t + 1];
    const Elt di = values[i], dj = values[j];
    // find x, y with di x^2 + dj y^2 = c
    bool done = false;
    for (Elt x = 0; x < f.order() && !done; ++x) {
      const Elt rem = f.div(f.sub(c, f.mul(di, f.mul(x, x))), dj);
      auto y = f.sqrt(rem);
      if (!y) continue;
      const Vector u = detail::axpy(f, x, ortho[i], detail::scale(f, ortho[j], *y));
      const Vector up = detail::axpy(f, f.neg(f.mul(dj, *y)), ortho[i], detail::scale(f, ortho[j], f.mul(di, x)));
      const Elt qup = s.Q(up);
      auto r = f.sqrt(f.div(c, qup));
      if (!r) throw Error(ErrorKind::InvariantViolation, "square-class adjustment failed");
      ortho[i] = u;
      ortho[j] = detail::scale(f, up, *r);
      values[i] = values[j] = c;
      done = true;
    }
    if (!done) throw Error(ErrorKind::InvariantViolation, "binary form does not represent the target scalar");
  }

  Matrix p(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) p(i, j) = ortho[j][i];
  return {p, FieldElem(f, c)};
}

/// W_1 _|_ ... _|_ W_k with parts of equal dimension.
struct OrthoDecomposition {
  QuadraticSpace space;
  std::vector<Subspace> parts;

  std::size_t size() const { return parts.size(); }
  std::size_t part_dim() const { return parts.empty() ? 0 : parts.front().dim(); }
};

/// Checks the type invariants: equal dimensions, pairwise orthogonal,
/// nondegenerate parts, direct sum equal to V.
inline bool is_valid_decomposition(const OrthoDecomposition& d, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const auto& s = d.space;
  const std::size_t n = s.dim();
  if (d.parts.empty()) return fail("no parts");
  const std::size_t pd = d.part_dim();
  std::size_t total = 0;
  for (const auto& w : d.parts) {
    if (w.dim() != pd) return fail("parts have different dimensions");
    if (det(s.restricted_gram(w)) == 0) return fail("a part is degenerate");
    total += w.dim();
  }
  if (total != n) return fail("dimensions do not add up to n");
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    for (std::size_t j = i + 1; j < d.parts.size(); ++j)
      if (!(d.parts[i].basis() * s.gram() * d.parts[j].basis().transpose()).is_zero())
        return fail("parts are not orthogonal");
  Subspace sum = Subspace::zero(s.field(), n);
  for (const auto& w : d.parts) sum = sum + w;
  if (sum.dim() != n) return fail("parts do not span V");
  return true;
}

/// For each generator, the permutation of parts it induces (perm[i] = j when g(W_i) = W_j).
struct PermutationAction {
  std::vector<std::vector<std::size_t>> generator_perms;

  std::size_t degree() const { return generator_perms.empty() ? 0 : generator_perms.front().size(); }
};

/// Index j with g(W_i) = W_j, or throws NotInvariant.
inline std::size_t part_image(const OrthoDecomposition& d, const Matrix& g, std::size_t i) {
  const Subspace img = d.parts[i].image(g);
  for (std::size_t j = 0; j < d.parts.size(); ++j)
    if (d.parts[j] == img) return j;
  throw Error(ErrorKind::NotInvariant, "g(W_" + std::to_string(i + 1) + ") is not a part of the decomposition");
}

inline std::vector<std::size_t> part_permutation(const OrthoDecomposition& d, const Matrix& g) {
  std::vector<std::size_t> perm(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) perm[i] = part_image(d, g, i);
  return perm;
}

inline PermutationAction validate_decomposition(const OrthoDecomposition& d, const std::vector<Matrix>& generators) {
  std::string why;
  if (!is_valid_decomposition(d, &why)) throw Error(ErrorKind::InvalidArgument, "invalid decomposition: " + why);
  PermutationAction act;
  for (const auto& g : generators) act.generator_perms.push_back(part_permutation(d, g));
  return act;
}

namespace detail {

// Canonical representatives of the 1-spaces of F^n: first nonzero coordinate 1,
// ordered by position of that coordinate and then lexicographically.
inline std::vector<Vector> projective_points(const Field& f, std::size_t n) {
  std::vector<Vector> out;
  const std::uint64_t q = f.order();
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      Vector v(n, 0);
      v[lead] = 1;
      std::uint64_t rest = t;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<Elt>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultEnumerationBound = 1000000;

/// Every unordered set of n pairwise orthogonal anisotropic lines (such a set
/// always spans V). Parts are listed in canonical line order.
inline std::vector<OrthoDecomposition> all_ortho_line_decompositions(const QuadraticSpace& s,
                                                                     std::uint64_t bound = kDefaultEnumerationBound) {
  s.require_nondegenerate();
  const Field f = s.field();
  const std::size_t n = s.dim();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= f.order();
    if (size > bound) throw Error(ErrorKind::TooLarge, "q^n exceeds the enumeration bound");
  }
  std::vector<Vector> lines;
  for (auto& v : detail::projective_points(f, n))
    if (s.Q(v) != 0) lines.push_back(std::move(v));
  const std::size_t m = lines.size();
  // orthogonality graph
  std::vector<std::vector<bool>> perp(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) perp[i][j] = perp[j][i] = s.b(lines[i], lines[j]) == 0;

  std::vector<OrthoDecomposition> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == n) {
      OrthoDecomposition d{s, {}};
      for (auto i : chosen) d.parts.push_back(Subspace::span(f, {lines[i]}, n));
      out.push_back(std::move(d));
      return;
    }
    for (std::size_t c = start; c < m; ++c) {
      bool ok = true;
      for (auto i : chosen)
        if (!perp[i][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      extend(c + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace orthomono
