#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "orthomono/detail/elimination.hpp"
#include "orthomono/error.hpp"
#include "orthomono/form.hpp"
#include "orthomono/group.hpp"
#include "orthomono/matrix.hpp"
#include "orthomono/modrep.hpp"
#include "orthomono/monomial.hpp"
#include "orthomono/subgroups.hpp"

namespace orthomono {

/// O_1(F) wr K acting on a space with Gram matrix c I_n.
struct WreathSpec {
  QuadraticSpace space;
  PermGroup k;
  MatrixGroup group;
};

inline std::optional<Elt> scalar_of_gram(const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if ((i == j && b(i, j) != b(0, 0)) || (i != j && b(i, j) != 0)) return std::nullopt;
  if (b.rows() == 0 || b(0, 0) == 0) return std::nullopt;
  return b(0, 0);
}

/// Generated by the n single sign changes and the permutation matrices of K's generators.
inline WreathSpec wreath_construct(const PermGroup& k, const QuadraticSpace& s,
                                   std::uint64_t bound = kDefaultEnumerationBound) {
  const std::size_t n = s.dim();
  if (degree_of(k) != n) throw Error(ErrorKind::DimensionMismatch, "permutation degree differs from the dimension");
  if (!scalar_of_gram(s.gram())) throw Error(ErrorKind::NonScalarForm, "Gram matrix is not a nonzero scalar multiple of I");
  const Field f = s.field();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix d = Matrix::identity(f, n);
    d(i, i) = f.neg(1);
    gens.push_back(std::move(d));
  }
  for (const auto& p : k.generators()) gens.push_back(permutation_matrix(f, p));
  return {s, k, make_matrix_group(f, n, std::move(gens), bound)};
}

/// Symmetric group S_n as a PermGroup, generated by (1 2) and (1 2 ... n).
inline PermGroup symmetric_perm_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<std::uint16_t> t(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<std::uint16_t>(i);
      c[i] = static_cast<std::uint16_t>((i + 1) % n);
    }
    std::swap(t[0], t[1]);
    gens.emplace_back(t);
    gens.emplace_back(c);
  }
  return make_perm_group(n, std::move(gens));
}

struct TransitiveClass {
  PermGroup group;
  std::size_t order = 0;
  std::size_t conjugates = 0;
  bool maximal = false;
};

/// Conjugacy classes of transitive solvable subgroups of S_n, ascending by
/// order, with the maximal ones flagged.
inline std::vector<TransitiveClass> transitive_solvable_subgroups(std::size_t n) {
  const SymmetricGroup sn(n);
  const PermGroup ambient = symmetric_perm_group(n);
  std::vector<SubgroupClass> keep;
  for (auto& c : solvable_subgroup_classes(sn)) {
    std::vector<Perm> elems;
    for (auto i : c.elements) elems.push_back(sn.element(i));
    if (is_transitive(subgroup_from_elements(ambient, elems))) keep.push_back(std::move(c));
  }
  std::vector<TransitiveClass> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < keep.size() && maximal; ++j)
      if (keep[j].order() > keep[i].order() && contains_conjugate(sn, keep[j].elements, keep[i].elements))
        maximal = false;
    std::vector<Perm> elems;
    for (auto x : keep[i].elements) elems.push_back(sn.element(x));
    out.push_back({subgroup_from_elements(ambient, elems), keep[i].order(), keep[i].conjugates, maximal});
  }
  return out;
}

struct WreathEmbedding {
  MonomialCertificate certificate;
  /// Basis change with columns w_i; P^T B P = c I.
  Matrix p;
  PermGroup k;
  WreathSpec wreath;
  /// Every P^{-1} g P lies in the wreath group.
  bool contained = false;
  /// Orders agree as well.
  bool equal = false;
};

/// Conjugates G into O_1(F) wr K, K the permutation image on the certificate lines.
inline WreathEmbedding conjugate_into_wreath(const MatrixGroup& g, const QuadraticSpace& s) {
  MonomialCertificate cert = monomialize(g, s);
  const std::size_t n = s.dim();
  const Field f = s.field();
  const Matrix p = cert.basis_matrix();
  std::vector<Perm> kg;
  for (const auto& sp : cert.generator_images) kg.push_back(to_perm(sp.perm));
  PermGroup k = make_perm_group(n, std::move(kg));
  const QuadraticSpace scalar_space(Matrix::scalar(f, n, cert.scalar.code()));
  WreathSpec w = wreath_construct(k, scalar_space, g.bound());
  const Matrix pinv = inverse(p);
  bool contained = true;
  for (const auto& x : g.elements())
    if (!w.group.contains(pinv * x * p)) {
      contained = false;
      break;
    }
  const bool equal = contained && g.order() == w.group.order();
  return {std::move(cert), p, std::move(k), std::move(w), contained, equal};
}

struct MaximalityResult {
  bool maximal = true;
  std::optional<MatrixGroup> counterexample;
  /// Elements x outside W for which <W, x> was built.
  std::size_t extensions_checked = 0;
  std::size_t ambient_order = 0;
};

/// Searches the isometry group for x with <W, x> solvable and irreducible.
/// <W, x> depends only on the double coset W x W, so each double coset is tried once.
inline MaximalityResult maximality_check(const WreathSpec& w, const MatrixGroup& ambient) {
  MaximalityResult r;
  r.ambient_order = ambient.order();
  const auto& wg = w.group.generators();
  std::unordered_set<std::string> done;
  for (const auto& x : ambient.elements()) {
    if (w.group.contains(x) || done.count(x.key())) continue;
    std::vector<Matrix> queue{x};
    done.insert(x.key());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& y : wg)
        for (Matrix z : {y * queue[i], queue[i] * y})
          if (done.insert(z.key()).second) queue.push_back(std::move(z));
    ++r.extensions_checked;
    auto gens = wg;
    gens.push_back(x);
    MatrixGroup h = w.group.subgroup(std::move(gens));
    if (is_solvable(h) && is_irreducible(h).irreducible) {
      r.maximal = false;
      r.counterexample = std::move(h);
      return r;
    }
  }
  return r;
}

inline MaximalityResult maximality_check(const WreathSpec& w) {
  return maximality_check(w, orthogonal_group(w.space, w.group.bound()));
}

/// Number of orthogonal line decompositions of V whose parts G permutes.
inline std::size_t uniqueness_oracle(const MatrixGroup& g, const QuadraticSpace& s,
                                     std::vector<OrthoDecomposition>* found = nullptr,
                                     std::uint64_t bound = kDefaultEnumerationBound) {
  if (!is_irreducible(g).irreducible) throw Error(ErrorKind::HypothesisViolated, "not irreducible");
  std::size_t count = 0;
  for (auto& d : all_ortho_line_decompositions(s, bound)) {
    try {
      validate_decomposition(d, g.generators());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInvariant) throw;
      continue;
    }
    ++count;
    if (found) found->push_back(std::move(d));
  }
  return count;
}

/// Basis of the space of symmetric B with g^T B g = B for every generator.
inline std::vector<Matrix> invariant_symmetric_forms(const MatrixGroup& g) {
  const Field f = field_of(g);
  const std::size_t n = dim_of(g);
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) vars.emplace_back(i, j);
  auto unit = [&](std::size_t v) {
    Matrix b(f, n, n);
    b(vars[v].first, vars[v].second) = 1;
    b(vars[v].second, vars[v].first) = 1;
    return b;
  };
  const std::size_t m = vars.size();
  std::vector<Elt> rows;
  std::size_t nrows = 0;
  for (const auto& x : g.generators()) {
    const Matrix xt = x.transpose();
    std::vector<Matrix> img;
    for (std::size_t v = 0; v < m; ++v) img.push_back(xt * unit(v) * x - unit(v));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t v = 0; v < m; ++v) rows.push_back(img[v](i, j));
        ++nrows;
      }
  }
  std::vector<Matrix> out;
  for (const auto& sol : detail::nullspace(f, rows, nrows, m)) {
    Matrix b(f, n, n);
    for (std::size_t v = 0; v < m; ++v)
      if (sol[v] != 0) b = b + unit(v).scaled(sol[v]);
    out.push_back(std::move(b));
  }
  return out;
}

/// Some nondegenerate member of the span of `forms`, by exhaustive search.
inline std::optional<Matrix> nondegenerate_member(const std::vector<Matrix>& forms, Field f, std::size_t n,
                                                  std::uint64_t bound = kDefaultEnumerationBound) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    total *= f.order();
    if (total > bound) throw Error(ErrorKind::TooLarge, "space of invariant forms is too large to search");
  }
  for (std::uint64_t t = 1; t < total; ++t) {
    Matrix b(f, n, n);
    std::uint64_t rest = t;
    for (const auto& x : forms) {
      const Elt c = static_cast<Elt>(rest % f.order());
      rest /= f.order();
      if (c != 0) b = b + x.scaled(c);
    }
    if (det(b) != 0) return b;
  }
  return std::nullopt;
}

/// Group generated greedily from a list of elements of GL_n(F).
inline MatrixGroup group_from_elements(Field f, std::size_t n, const std::vector<Matrix>& elems,
                                       std::uint64_t bound = kDefaultEnumerationBound) {
  return subgroup_from_elements(make_matrix_group(f, n, {}, bound), elems);
}

struct Fixture {
  QuadraticSpace space;
  MatrixGroup group;
};

/// Isometry group of the norm form of GF(q^2) over GF(q), found by brute force over GL_2(q).
inline Fixture o2minus(std::uint64_t q) {
  const Field f = Field::prime(q);
  const Field k = gf(q, 2);
  auto norm = [&](Elt z) { return k.pow(z, q + 1); };
  const Elt theta = k.from_coeffs({0, 1});
  const Elt n1 = norm(1), nt = norm(theta), n1t = norm(k.add(1, theta));
  // norms lie in the prime subfield, whose codes are the residues themselves
  const Elt cross = f.div(f.sub(f.sub(n1t, n1), nt), f.from_int(2));
  const QuadraticSpace s(Matrix::from_rows(f, {{n1, cross}, {cross, nt}}, 2));
  std::vector<Matrix> iso;
  for (Elt a = 0; a < q; ++a)
    for (Elt b = 0; b < q; ++b)
      for (Elt c = 0; c < q; ++c)
        for (Elt d = 0; d < q; ++d) {
          const Matrix g = Matrix::from_rows(f, {{a, b}, {c, d}}, 2);
          if (det(g) != 0 && is_isometry(g, s)) iso.push_back(g);
        }
  return {s, group_from_elements(f, 2, iso)};
}

/// GF(q^n) as an n-dimensional GF(q)-space in the power basis, with the
/// multiplication by a primitive element and the Frobenius z -> z^q. q prime.
inline MatrixGroup gammaL1(std::uint64_t q, std::uint32_t n) {
  const Field f = Field::prime(q);
  const Field k = gf(q, n);
  Matrix mult(f, n, n), frob(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    const Elt basis = k.from_coeffs(e);
    const auto m = k.coeffs(k.mul(k.generator(), basis));
    const auto fr = k.coeffs(k.pow(basis, q));
    for (std::uint32_t j = 0; j < n; ++j) {
      mult(j, i) = m[j];
      frob(j, i) = fr[j];
    }
  }
  return make_matrix_group(f, n, {mult, frob});
}

/// Building a characteristic-2 space must fail; returns the error raised.
inline Error char2_rejection() {
  try {
    QuadraticSpace::from_residues(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  } catch (const Error& e) {
    return e;
  }
  throw Error(ErrorKind::InvariantViolation, "characteristic 2 space was accepted");
}

}  // namespace orthomono
