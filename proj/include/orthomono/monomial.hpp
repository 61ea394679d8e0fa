#pragma once

#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthomono/error.hpp"
#include "orthomono/form.hpp"
#include "orthomono/group.hpp"
#include "orthomono/matrix.hpp"
#include "orthomono/modrep.hpp"

namespace orthomono {

/// g w_i = signs[i] * w_{perm[i]}, signs in {+1, -1}.
struct SignedPerm {
  std::vector<std::size_t> perm;
  std::vector<int> signs;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// One recursion level: the decomposition of the current space (in its own
/// coordinates) and, per part, the generator word g_i with g_i(Z_1) = Z_i.
/// A word lists generator indices in the order they are applied.
struct TransportLevel {
  std::size_t dim = 0;
  std::vector<Subspace> parts;
  std::vector<std::vector<std::size_t>> words;
};

struct MonomialCertificate {
  QuadraticSpace space;
  std::vector<Vector> basis;
  FieldElem scalar;
  std::vector<SignedPerm> generator_images;
  std::vector<TransportLevel> transport;

  /// Basis vectors as columns.
  Matrix basis_matrix() const {
    const std::size_t n = space.dim();
    Matrix p(space.field(), n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) p(i, j) = basis[j][i];
    return p;
  }
};

/// Every hypothesis that fails, in a fixed order. Reasons are machine-readable.
inline std::vector<std::string> hypothesis_failures(const MatrixGroup& g, const QuadraticSpace& s) {
  std::vector<std::string> out;
  if (s.dim() != dim_of(g) || s.field() != field_of(g)) {
    out.push_back("form does not match the group");
    return out;
  }
  if (s.dim() % 2 == 0) out.push_back("dimension even");
  if (!s.is_nondegenerate()) out.push_back("degenerate form");
  for (const auto& x : g.generators())
    if (!is_isometry(x, s)) {
      out.push_back("generators are not isometries");
      break;
    }
  if (!is_solvable(g)) out.push_back("not solvable");
  if (!is_irreducible(g).irreducible) out.push_back("not irreducible");
  return out;
}

inline void require_hypotheses(const MatrixGroup& g, const QuadraticSpace& s) {
  const auto f = hypothesis_failures(g, s);
  if (!f.empty()) throw Error(ErrorKind::HypothesisViolated, f.front());
}

namespace detail {

inline OrthoDecomposition invariant_decomposition_unchecked(const MatrixGroup& g, const QuadraticSpace& s,
                                                            std::vector<MatrixGroup>* abelian_terms) {
  if (g.is_abelian())
    throw Error(ErrorKind::InvariantViolation, "abelian group is irreducible in odd dimension " + std::to_string(s.dim()));
  const MatrixGroup l = abelian_normal_term(g);
  if (abelian_terms) abelian_terms->push_back(l);
  for (const auto& x : l.elements())
    if (det(x) != 1) throw Error(ErrorKind::InvariantViolation, "element of the derived abelian term has determinant != 1");
  const auto comps = homogeneous_components(l);
  if (comps.size() == 1)
    throw Error(ErrorKind::InvariantViolation, "restriction to the abelian normal term is homogeneous (k = 1)");
  OrthoDecomposition d = zalesski_dichotomy_check(comps, s, true);
  try {
    validate_decomposition(d, g.generators());
  } catch (const Error& e) {
    throw Error(ErrorKind::InvariantViolation, std::string("components are not permuted by G: ") + e.what());
  }
  return d;
}

// Breadth-first search over generator words, in generator-index order; the
// first word reaching each part wins.
inline std::vector<std::vector<std::size_t>> transport_words(const MatrixGroup& g, const OrthoDecomposition& d) {
  const auto act = validate_decomposition(d, g.generators());
  std::vector<std::optional<std::vector<std::size_t>>> word(d.size());
  word[0] = std::vector<std::size_t>{};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < act.generator_perms.size(); ++k) {
      const std::size_t j = act.generator_perms[k][i];
      if (word[j]) continue;
      auto w = *word[i];
      w.push_back(k);
      word[j] = std::move(w);
      queue.push_back(j);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& w : word) {
    if (!w) throw Error(ErrorKind::InvariantViolation, "G is not transitive on the parts");
    out.push_back(std::move(*w));
  }
  return out;
}

inline Matrix word_matrix(const MatrixGroup& g, const std::vector<std::size_t>& word) {
  Matrix m = g.identity();
  for (auto k : word) m = g.generators()[k] * m;
  return m;
}

struct Partial {
  std::vector<Vector> basis;
  std::vector<TransportLevel> transport;
};

inline Partial monomialize_rec(const MatrixGroup& g, const QuadraticSpace& s, std::vector<MatrixGroup>* abelian_terms) {
  const Field f = s.field();
  const std::size_t n = s.dim();
  if (n == 1) return {{Vector{1}}, {}};
  const OrthoDecomposition d = invariant_decomposition_unchecked(g, s, abelian_terms);
  const Subspace& z1 = d.parts[0];
  const MatrixGroup h = setwise_stabilizer(g, d, 0);
  std::vector<Matrix> rgens;
  for (const auto& x : h.generators()) rgens.push_back(restrict_to(x, z1));
  const MatrixGroup hz = make_matrix_group(f, z1.dim(), rgens, g.bound());
  const QuadraticSpace sz = s.restrict_to(z1);
  if (z1.dim() > 1 && !is_irreducible(hz).irreducible)
    throw Error(ErrorKind::InvariantViolation, "block stabilizer is reducible on Z_1");
  const Partial sub = monomialize_rec(hz, sz, abelian_terms);

  Partial out;
  TransportLevel level{n, d.parts, transport_words(g, d)};
  for (const auto& w : level.words) {
    const Matrix gi = word_matrix(g, w);
    for (const auto& y : sub.basis) out.basis.push_back(gi.apply(z1.lift(y)));
  }
  out.transport.push_back(std::move(level));
  for (const auto& t : sub.transport) out.transport.push_back(t);
  return out;
}

// Signed permutation of g in the basis P (columns), or nullopt if P^{-1} g P is
// not monomial with entries +-1.
inline std::optional<SignedPerm> signed_image(const Matrix& pinv, const Matrix& p, const Matrix& g) {
  const Field f = g.field();
  const Matrix m = pinv * g * p;
  const std::size_t n = m.rows();
  SignedPerm sp{std::vector<std::size_t>(n), std::vector<int>(n)};
  const Elt minus = f.neg(1);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    // column i is the image of w_i
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < n; ++r) {
      if (m(r, i) == 0) continue;
      if (row) return std::nullopt;
      row = r;
    }
    if (!row || hit[*row]) return std::nullopt;
    hit[*row] = true;
    const Elt e = m(*row, i);
    if (e != 1 && e != minus) return std::nullopt;
    sp.perm[i] = *row;
    sp.signs[i] = e == 1 ? 1 : -1;
  }
  return sp;
}

}  // namespace detail

/// A G-invariant orthogonal decomposition with k > 1 parts, from the
/// homogeneous components of the last nontrivial derived term.
inline OrthoDecomposition find_invariant_decomposition(const MatrixGroup& g, const QuadraticSpace& s) {
  require_hypotheses(g, s);
  if (s.dim() == 1) throw Error(ErrorKind::HypothesisViolated, "dimension 1 has no decomposition with k > 1");
  return detail::invariant_decomposition_unchecked(g, s, nullptr);
}

struct CertificateCheck {
  bool ok = true;
  std::string failure;
  std::size_t elements_checked = 0;
};

/// Independent verification against every element of G.
inline CertificateCheck check_certificate(const MonomialCertificate& c, const MatrixGroup& g) {
  CertificateCheck r;
  auto fail = [&](std::string m) {
    r.ok = false;
    r.failure = std::move(m);
    return r;
  };
  const auto& s = c.space;
  const std::size_t n = s.dim();
  if (c.basis.size() != n) return fail("basis has " + std::to_string(c.basis.size()) + " vectors, expected " + std::to_string(n));
  if (dim_of(g) != n || field_of(g) != s.field()) return fail("group does not act on the certificate space");
  if (c.scalar.field() != s.field() || c.scalar.code() == 0) return fail("scalar is zero or over the wrong field");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.Q(c.basis[i]) != c.scalar.code()) return fail("Q(w_" + std::to_string(i + 1) + ") != c");
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.b(c.basis[i], c.basis[j]) != 0)
        return fail("b(w_" + std::to_string(i + 1) + ", w_" + std::to_string(j + 1) + ") != 0");
  }
  const Matrix p = c.basis_matrix();
  if (det(p) == 0) return fail("basis is not linearly independent");
  const Matrix pinv = inverse(p);
  if (c.generator_images.size() != g.generators().size()) return fail("wrong number of generator images");
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    auto sp = detail::signed_image(pinv, p, g.generators()[k]);
    if (!sp) return fail("generator " + std::to_string(k + 1) + " is not signed-monomial in the basis");
    if (!(*sp == c.generator_images[k])) return fail("generator image " + std::to_string(k + 1) + " does not match");
  }
  for (const auto& x : g.elements()) {
    ++r.elements_checked;
    if (!detail::signed_image(pinv, p, x)) return fail("element " + std::to_string(r.elements_checked) + " is not signed-monomial");
  }
  return r;
}

/// Orthogonal basis of lines permuted up to sign by G, with equal Q-values.
/// If `abelian_terms` is given, the abelian normal terms used at each level are appended.
inline MonomialCertificate monomialize(const MatrixGroup& g, const QuadraticSpace& s,
                                       std::vector<MatrixGroup>* abelian_terms = nullptr) {
  require_hypotheses(g, s);
  auto part = detail::monomialize_rec(g, s, abelian_terms);
  MonomialCertificate c{s, std::move(part.basis), FieldElem(s.field(), 0), {}, std::move(part.transport)};
  c.scalar = FieldElem(s.field(), s.Q(c.basis[0]));
  const Matrix p = c.basis_matrix();
  if (det(p) == 0) throw Error(ErrorKind::CertificateCheckFailed, "transported basis is singular");
  const Matrix pinv = inverse(p);
  for (const auto& x : g.generators()) {
    auto sp = detail::signed_image(pinv, p, x);
    if (!sp) throw Error(ErrorKind::CertificateCheckFailed, "generator is not signed-monomial in the computed basis");
    c.generator_images.push_back(std::move(*sp));
  }
  const auto chk = check_certificate(c, g);
  if (!chk.ok) throw Error(ErrorKind::CertificateCheckFailed, chk.failure);
  return c;
}

}  // namespace orthomono
