#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthomono/detail/elimination.hpp"
#include "orthomono/error.hpp"
#include "orthomono/form.hpp"
#include "orthomono/group.hpp"
#include "orthomono/matrix.hpp"
#include "orthomono/poly.hpp"

namespace orthomono {

/// Smallest subspace containing v and invariant under the given matrices.
inline Subspace spin(Field f, const Vector& v, const std::vector<Matrix>& gens) {
  if (std::all_of(v.begin(), v.end(), [](Elt x) { return x == 0; }))
    throw Error(ErrorKind::ZeroVector, "cannot spin the zero vector");
  EchelonBuilder eb(f, v.size());
  eb.add(v);
  for (std::size_t i = 0; i < eb.dim(); ++i) {
    const Vector w = eb.originals()[i];
    for (const auto& g : gens) eb.add(g.apply(w));
  }
  return eb.subspace();
}

inline Subspace spin(const Vector& v, const MatrixGroup& g) {
  return spin(field_of(g), v, g.generators());
}

struct IrreducibilityResult {
  bool irreducible = false;
  /// A proper nonzero invariant subspace when reducible.
  std::optional<Subspace> witness;
  /// "dimension 1", "norton", "exhaustive".
  std::string method;
};

namespace detail {

// Deterministic word list: generators, products g_i g_j, sums g_i + g_j (i <= j),
// sums g_i + g_j + g_l (i <= j <= l).
inline std::vector<Matrix> norton_words(const std::vector<Matrix>& gens) {
  std::vector<Matrix> words = gens;
  const std::size_t m = gens.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) words.push_back(gens[i] * gens[j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) words.push_back(gens[i] + gens[j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t l = j; l < m; ++l) words.push_back(gens[i] + gens[j] + gens[l]);
  return words;
}

inline std::vector<Vector> kernel_vectors(const Matrix& a) {
  return nullspace(a.field(), a.data(), a.rows(), a.cols());
}

}  // namespace detail

/// MeatAxe-style irreducibility test with the Norton criterion, falling back to
/// spinning every 1-space when no word of nullity 1 is found.
inline IrreducibilityResult is_irreducible(const MatrixGroup& g, std::uint64_t line_bound = kDefaultEnumerationBound) {
  const Field f = field_of(g);
  const std::size_t n = dim_of(g);
  if (n == 1) return {true, std::nullopt, "dimension 1"};
  const auto& gens = g.generators();
  std::vector<Matrix> tgens;
  for (const auto& x : gens) tgens.push_back(x.transpose());

  for (const auto& a : detail::norton_words(gens)) {
    const auto ker = detail::kernel_vectors(a);
    if (ker.size() != 1) continue;
    const Subspace s = spin(f, ker[0], gens);
    if (s.dim() < n) return {false, s, "norton"};
    const auto tker = detail::kernel_vectors(a.transpose());
    const Subspace t = spin(f, tker[0], tgens);
    if (t.dim() < n) {
      // the annihilator of a proper G^T-invariant subspace is G-invariant
      return {false, kernel(t.basis()), "norton"};
    }
    return {true, std::nullopt, "norton"};
  }

  std::uint64_t lines = 1;
  for (std::size_t i = 1; i < n && lines <= line_bound; ++i) lines = lines * f.order() + 1;
  if (lines > line_bound) throw Error(ErrorKind::NoSuitableWord, "no nullity-1 word and too many lines to search");
  std::optional<Subspace> best;
  for (const auto& v : detail::projective_points(f, n)) {
    Subspace s = spin(v, g);
    if (s.dim() < n && (!best || s.dim() < best->dim())) {
      best = std::move(s);
      if (best->dim() == 1) break;
    }
  }
  if (best) return {false, best, "exhaustive"};
  return {true, std::nullopt, "exhaustive"};
}

/// F-span of a set of commuting matrices closed under multiplication.
struct AlgebraSpan {
  std::size_t n = 0;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
};

inline Vector flatten(const Matrix& m) { return m.data(); }

/// The enveloping algebra of the group generated by `gens` in M_n(F).
inline AlgebraSpan algebra_span(Field f, std::size_t n, const std::vector<Matrix>& gens) {
  EchelonBuilder eb(f, n * n);
  AlgebraSpan a{n, {}};
  const Matrix id = Matrix::identity(f, n);
  eb.add(flatten(id));
  a.basis.push_back(id);
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    for (const auto& g : gens) {
      Matrix x = a.basis[i] * g;
      if (eb.add(flatten(x))) a.basis.push_back(std::move(x));
    }
  return a;
}

/// Elements a of the algebra with a^q = a, where q = |F|.
inline std::vector<Matrix> frobenius_fixed_subalgebra(const AlgebraSpan& a) {
  if (a.basis.empty()) return {};
  const Field f = a.basis[0].field();
  const std::size_t m = a.dim(), nn = a.n * a.n;
  // columns phi(b_i) = b_i^q - b_i
  std::vector<Elt> cols(nn * m);
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix phi = matrix_pow(a.basis[i], f.order()) - a.basis[i];
    for (std::size_t r = 0; r < nn; ++r) cols[r * m + i] = phi.data()[r];
  }
  std::vector<Matrix> out;
  for (const auto& x : detail::nullspace(f, cols, nn, m)) {
    Matrix s(f, a.n, a.n);
    for (std::size_t i = 0; i < m; ++i)
      if (x[i] != 0) s = s + a.basis[i].scaled(x[i]);
    out.push_back(std::move(s));
  }
  return out;
}

namespace detail {

inline void sort_subspaces(std::vector<Subspace>& v) { std::sort(v.begin(), v.end()); }

inline bool is_scalar(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((i == j && m(i, j) != m(0, 0)) || (i != j && m(i, j) != 0)) return false;
  return true;
}

inline void require_abelian_coprime(const MatrixGroup& l) {
  const Field f = field_of(l);
  if (!l.is_abelian()) throw Error(ErrorKind::NotAbelian, "normal subgroup is not abelian");
  if (l.order() % f.characteristic() == 0) {
    std::vector<Matrix> sylow;
    for (const auto& x : l.elements()) {
      std::uint64_t o = element_order(x);
      while (o % f.characteristic() == 0) o /= f.characteristic();
      if (o == 1) sylow.push_back(x);
    }
    const auto p_part = subgroup_from_elements(l, sylow);
    throw Error(ErrorKind::NotCoprime, "p divides |L|; the Sylow p-part (order " + std::to_string(p_part.order()) +
                                           ") has fixed space of dimension " +
                                           std::to_string(fixed_space(p_part).dim()) + " < " +
                                           std::to_string(dim_of(l)));
  }
}

}  // namespace detail

/// Isotypic components of V as an F[L]-module, for L abelian of order prime
/// to p. The Frobenius-fixed part of the enveloping algebra is a product of
/// copies of F, one per component; its joint eigenspaces are the components.
inline std::vector<Subspace> homogeneous_components(const MatrixGroup& l) {
  detail::require_abelian_coprime(l);
  const Field f = field_of(l);
  const std::size_t n = dim_of(l);
  const AlgebraSpan a = algebra_span(f, n, l.generators());
  const auto fixed = frobenius_fixed_subalgebra(a);

  std::vector<Subspace> blocks{Subspace::full(f, n)};
  for (const auto& c : fixed) {
    if (detail::is_scalar(c)) continue;
    const Poly mp = minpoly(c);
    const auto fac = poly_factor(mp);
    for (const auto& x : fac.factors)
      if (x.poly.degree() != 1 || x.multiplicity != 1)
        throw Error(ErrorKind::NotSemisimple, "fixed algebra element has minimal polynomial " + mp.to_string());
    std::vector<Subspace> next;
    for (const auto& b : blocks) {
      for (const auto& x : fac.factors) {
        Subspace piece = b.intersect(kernel(evaluate(x.poly, c)));
        if (piece.dim() > 0) next.push_back(std::move(piece));
      }
    }
    blocks = std::move(next);
  }
  if (blocks.size() != fixed.size())
    throw Error(ErrorKind::InvariantViolation, "fixed subalgebra of dimension " + std::to_string(fixed.size()) +
                                                   " but " + std::to_string(blocks.size()) + " blocks");
  for (const auto& b : blocks) {
    std::vector<Matrix> rg;
    for (const auto& g : l.generators()) rg.push_back(restrict_to(g, b));
    if (frobenius_fixed_subalgebra(algebra_span(f, b.dim(), rg)).size() != 1)
      throw Error(ErrorKind::InvariantViolation, "block is not homogeneous");
  }
  detail::sort_subspaces(blocks);
  return blocks;
}

/// Splitting-field analysis of a single semisimple element.
struct EigenData {
  Matrix f;
  Field base;
  Field split;
  /// Distinct eigenvalues in K, ascending by code.
  std::vector<Elt> eigenvalues;
  std::vector<int> multiplicities;
  /// W_alpha over K, parallel to eigenvalues.
  std::vector<Subspace> eigenspaces;
  /// Galois orbits as index lists into eigenvalues.
  std::vector<std::vector<std::size_t>> orbits;
  /// Q_alpha = sum of the eigenspaces in an orbit, over K.
  std::vector<Subspace> orbit_spaces;
  /// Z_alpha over F with K (x) Z_alpha = Q_alpha.
  std::vector<Subspace> rational;
};

inline EigenData eigen_analysis(const Matrix& f) {
  if (!f.is_square()) throw Error(ErrorKind::NonSquare, "eigen analysis of a non-square matrix");
  if (det(f) == 0) throw Error(ErrorKind::InvalidArgument, "matrix is not invertible");
  const Field base = f.field();
  const std::size_t n = f.rows();
  const Poly mp = minpoly(f);
  for (const auto& x : poly_factor(mp).factors)
    if (x.multiplicity != 1) throw Error(ErrorKind::NotSemisimple, "minimal polynomial " + mp.to_string() + " is not squarefree");
  const Poly cp = charpoly(f);
  EigenData e{f, base, splitting_field(cp), {}, {}, {}, {}, {}, {}};
  const Field k = e.split;
  const Matrix fk = extend_scalars(f, k);
  for (const auto& x : poly_factor(extend_scalars(cp, k)).factors) {
    const Elt alpha = k.neg(x.poly.coeffs()[0]);
    e.eigenvalues.push_back(alpha);
    e.multiplicities.push_back(x.multiplicity);
  }
  std::vector<std::size_t> order(e.eigenvalues.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e.eigenvalues[a] < e.eigenvalues[b]; });
  {
    std::vector<Elt> ev;
    std::vector<int> mu;
    for (auto i : order) {
      ev.push_back(e.eigenvalues[i]);
      mu.push_back(e.multiplicities[i]);
    }
    e.eigenvalues = std::move(ev);
    e.multiplicities = std::move(mu);
  }
  std::size_t total = 0;
  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
    Subspace w = kernel(fk - Matrix::scalar(k, n, e.eigenvalues[i]));
    if (static_cast<int>(w.dim()) != e.multiplicities[i])
      throw Error(ErrorKind::NotSemisimple, "eigenspace dimension differs from the multiplicity");
    total += w.dim();
    e.eigenspaces.push_back(std::move(w));
  }
  if (total != n) throw Error(ErrorKind::NotSemisimple, "eigenspaces do not span V'");

  std::vector<bool> used(e.eigenvalues.size(), false);
  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> orb;
    Subspace q = Subspace::zero(k, n);
    for (const auto& a : frobenius_orbit(FieldElem(k, e.eigenvalues[i]), base)) {
      const auto it = std::lower_bound(e.eigenvalues.begin(), e.eigenvalues.end(), a.code());
      const auto j = static_cast<std::size_t>(it - e.eigenvalues.begin());
      if (it == e.eigenvalues.end() || *it != a.code())
        throw Error(ErrorKind::InvariantViolation, "Galois conjugate of an eigenvalue is not an eigenvalue");
      if (e.eigenspaces[j].dim() != e.eigenspaces[i].dim())
        throw Error(ErrorKind::InvariantViolation, "Galois conjugate eigenspaces differ in dimension");
      used[j] = true;
      orb.push_back(j);
      q = q + e.eigenspaces[j];
    }
    std::sort(orb.begin(), orb.end());
    e.rational.push_back(rational_form(q, base));
    e.orbit_spaces.push_back(std::move(q));
    e.orbits.push_back(std::move(orb));
  }
  return e;
}

struct EigenPair {
  Elt alpha;
  Elt beta;
};

/// Pairs (alpha, beta), alpha <= beta, with b(W_alpha, W_beta) != 0. Every such
/// pair must have alpha beta = 1 and b must pair W_alpha with W_{1/alpha} perfectly.
inline std::vector<EigenPair> pairing_check(const EigenData& e, const QuadraticSpace& s) {
  if (!is_isometry(e.f, s)) throw Error(ErrorKind::NotIsometry, "element is not an isometry of the form");
  const Field k = e.split;
  const Matrix bk = extend_scalars(s.gram(), k);
  const std::size_t m = e.eigenvalues.size();
  std::vector<EigenPair> out;
  for (std::size_t i = 0; i < m; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix block = e.eigenspaces[i].basis() * bk * e.eigenspaces[j].basis().transpose();
      const bool inverse = k.mul(e.eigenvalues[i], e.eigenvalues[j]) == 1;
      if (inverse) {
        has_inverse = true;
        if (block.rows() != block.cols() || det(block) == 0)
          throw Error(ErrorKind::InvariantViolation, "b does not pair W_alpha and W_{1/alpha} perfectly");
      }
      if (block.is_zero()) continue;
      if (!inverse) throw Error(ErrorKind::InvariantViolation, "b(W_alpha, W_beta) != 0 with alpha beta != 1");
      if (i <= j) out.push_back({e.eigenvalues[i], e.eigenvalues[j]});
    }
    if (!has_inverse) throw Error(ErrorKind::InvariantViolation, "inverse of an eigenvalue is not an eigenvalue");
  }
  return out;
}

/// Turns homogeneous components into an orthogonal decomposition, or raises
/// ParityViolation when they pair isotropically (the W + W* case).
inline OrthoDecomposition zalesski_dichotomy_check(const std::vector<Subspace>& components, const QuadraticSpace& s,
                                                   bool n_odd) {
  if (components.empty()) throw Error(ErrorKind::InvalidArgument, "no components");
  if (components.size() == 1) return {s, components};
  const std::string tail = n_odd ? " (impossible for odd n)" : "";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (det(s.restricted_gram(components[i])) == 0)
      throw Error(ErrorKind::ParityViolation, "component " + std::to_string(i + 1) + " is degenerate" + tail);
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (!(components[i].basis() * s.gram() * components[j].basis().transpose()).is_zero())
        throw Error(ErrorKind::ParityViolation, "components " + std::to_string(i + 1) + " and " +
                                                    std::to_string(j + 1) + " are paired" + tail);
  }
  OrthoDecomposition d{s, components};
  std::string why;
  if (!is_valid_decomposition(d, &why)) throw Error(ErrorKind::InvariantViolation, "components: " + why);
  return d;
}

/// Homogeneous components computed over the joint splitting field: joint
/// eigenspaces of the generators, grouped by Galois orbits of their
/// character tuples, then descended to F. Independent of homogeneous_components.
inline std::vector<Subspace> galois_components(const MatrixGroup& l) {
  detail::require_abelian_coprime(l);
  const Field f = field_of(l);
  const std::size_t n = dim_of(l);
  const auto& gens = l.generators();
  if (gens.empty()) return {Subspace::full(f, n)};
  std::uint32_t m = 1;
  for (const auto& g : gens)
    for (const auto& x : poly_factor(charpoly(g)).factors)
      m = std::lcm(m, static_cast<std::uint32_t>(x.poly.degree()));
  const Field k = m == 1 ? f : gf(f.characteristic(), f.degree() * m);

  struct Joint {
    std::vector<Elt> chi;
    Subspace space;
  };
  std::vector<Joint> joint{{{}, Subspace::full(k, n)}};
  for (const auto& g : gens) {
    const Matrix gk = extend_scalars(g, k);
    std::vector<Joint> next;
    for (const auto& x : poly_factor(extend_scalars(charpoly(g), k)).factors) {
      const Elt alpha = k.neg(x.poly.coeffs()[0]);
      const Subspace eig = kernel(gk - Matrix::scalar(k, n, alpha));
      for (const auto& j : joint) {
        Subspace piece = j.space.intersect(eig);
        if (piece.dim() == 0) continue;
        auto chi = j.chi;
        chi.push_back(alpha);
        next.push_back({std::move(chi), std::move(piece)});
      }
    }
    joint = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& j : joint) total += j.space.dim();
  if (total != n) throw Error(ErrorKind::NotSemisimple, "joint eigenspaces do not span V'");

  std::map<std::vector<Elt>, std::size_t> where;
  for (std::size_t i = 0; i < joint.size(); ++i) where[joint[i].chi] = i;
  std::vector<bool> used(joint.size(), false);
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (used[i]) continue;
    Subspace q = Subspace::zero(k, n);
    std::vector<Elt> chi = joint[i].chi;
    while (true) {
      auto it = where.find(chi);
      if (it == where.end()) throw Error(ErrorKind::InvariantViolation, "Galois conjugate character is missing");
      if (used[it->second]) break;
      used[it->second] = true;
      q = q + joint[it->second].space;
      for (auto& c : chi) c = k.pow(c, f.order());
    }
    out.push_back(rational_form(q, f));
  }
  detail::sort_subspaces(out);
  return out;
}

}  // namespace orthomono
