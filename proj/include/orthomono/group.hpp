#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orthomono/error.hpp"
#include "orthomono/field.hpp"
#include "orthomono/form.hpp"
#include "orthomono/matrix.hpp"

namespace orthomono {

/// Permutation of {0, ..., n-1}; (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto x : img_) {
      if (x >= img_.size() || seen[x]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<std::uint16_t> v(n);
    std::iota(v.begin(), v.end(), std::uint16_t{0});
    return Perm(std::move(v));
  }

  /// From 1-based cycles, e.g. {{1, 2, 3}, {4, 5}}.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    std::vector<std::uint16_t> v(n);
    std::iota(v.begin(), v.end(), std::uint16_t{0});
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t from = c[i], to = c[(i + 1) % c.size()];
        if (from < 1 || from > n || to < 1 || to > n) throw Error(ErrorKind::InvalidArgument, "cycle point out of range");
        v[from - 1] = static_cast<std::uint16_t>(to - 1);
      }
    }
    return Perm(std::move(v));
  }

  std::size_t degree() const { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  Perm inverse() const {
    std::vector<std::uint16_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint16_t>(i);
    return Perm(std::move(v));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    std::vector<std::uint16_t> v(b.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.img_[b.img_[i]];
    Perm p;
    p.img_ = std::move(v);
    return p;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string key() const {
    std::string s(img_.size(), '\0');
    for (std::size_t i = 0; i < img_.size(); ++i) s[i] = static_cast<char>(img_[i]);
    return s;
  }

  /// 1-based cycle notation; "()" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      any = true;
      os << '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        os << (first ? "" : ",") << j + 1;
        first = false;
        j = img_[j];
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

 private:
  std::vector<std::uint16_t> img_;
};

template <class E>
struct GroupOps;

template <>
struct GroupOps<Matrix> {
  static Matrix mul(const Matrix& a, const Matrix& b) { return a * b; }
  static Matrix inv(const Matrix& a) { return inverse(a); }
  static std::string key(const Matrix& a) { return a.key(); }
};

template <>
struct GroupOps<Perm> {
  static Perm mul(const Perm& a, const Perm& b) { return a * b; }
  static Perm inv(const Perm& a) { return a.inverse(); }
  static std::string key(const Perm& a) { return a.key(); }
};

/// Finite group given by generators, enumerated on demand by closure.
/// Copies share the (immutable once built) enumeration.
template <class E>
class FiniteGroup {
  using Ops = GroupOps<E>;

 public:
  FiniteGroup() = default;
  FiniteGroup(E identity, std::vector<E> gens, std::uint64_t bound = kDefaultEnumerationBound)
      : identity_(std::move(identity)), bound_(bound), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens)
      if (g != identity_) gens_.push_back(std::move(g));
  }

  const E& identity() const { return identity_; }
  const std::vector<E>& generators() const { return gens_; }
  std::uint64_t bound() const { return bound_; }

  /// Same identity and bound, new generators.
  FiniteGroup subgroup(std::vector<E> gens) const { return FiniteGroup(identity_, std::move(gens), bound_); }

  const std::vector<E>& elements() const {
    std::call_once(cache_->once, [this] { enumerate_into(*cache_); });
    return cache_->elements;
  }

  std::size_t order() const { return elements().size(); }
  bool is_trivial() const { return gens_.empty(); }

  bool contains(const E& g) const {
    elements();
    return cache_->index.count(Ops::key(g)) > 0;
  }

  std::optional<std::size_t> index_of(const E& g) const {
    elements();
    auto it = cache_->index.find(Ops::key(g));
    if (it == cache_->index.end()) return std::nullopt;
    return it->second;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (Ops::mul(gens_[i], gens_[j]) != Ops::mul(gens_[j], gens_[i])) return false;
    return true;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<E> elements;
    std::unordered_map<std::string, std::size_t> index;
  };

  void enumerate_into(Cache& c) const {
    std::vector<E> elems{identity_};
    std::unordered_map<std::string, std::size_t> index{{Ops::key(identity_), 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : gens_) {
        E h = Ops::mul(elems[i], g);
        std::string k = Ops::key(h);
        if (index.count(k)) continue;
        if (elems.size() >= bound_)
          throw Error(ErrorKind::BoundExceeded, "group order exceeds the element bound " + std::to_string(bound_));
        index.emplace(std::move(k), elems.size());
        elems.push_back(std::move(h));
      }
    }
    c.elements = std::move(elems);
    c.index = std::move(index);
  }

  E identity_{};
  std::vector<E> gens_;
  std::uint64_t bound_ = kDefaultEnumerationBound;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using MatrixGroup = FiniteGroup<Matrix>;
using PermGroup = FiniteGroup<Perm>;

inline MatrixGroup make_matrix_group(Field f, std::size_t n, std::vector<Matrix> gens,
                                     std::uint64_t bound = kDefaultEnumerationBound) {
  for (const auto& g : gens) {
    if (g.field() != f) throw Error(ErrorKind::FieldMismatch, "generator over the wrong field");
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::DimensionMismatch, "generator has the wrong size");
    if (det(g) == 0) throw Error(ErrorKind::InvalidArgument, "generator is not invertible");
  }
  return MatrixGroup(Matrix::identity(f, n), std::move(gens), bound);
}

inline PermGroup make_perm_group(std::size_t n, std::vector<Perm> gens) {
  for (const auto& g : gens)
    if (g.degree() != n) throw Error(ErrorKind::DimensionMismatch, "permutation has the wrong degree");
  return PermGroup(Perm::identity(n), std::move(gens));
}

inline Field field_of(const MatrixGroup& g) { return g.identity().field(); }
inline std::size_t dim_of(const MatrixGroup& g) { return g.identity().rows(); }
inline std::size_t degree_of(const PermGroup& g) { return g.identity().degree(); }

template <class E>
E commutator(const E& a, const E& b) {
  using Ops = GroupOps<E>;
  return Ops::mul(Ops::mul(Ops::inv(a), Ops::inv(b)), Ops::mul(a, b));
}

/// Small generating set of the subgroup with the given elements, chosen greedily in list order.
template <class E>
FiniteGroup<E> subgroup_from_elements(const FiniteGroup<E>& ambient, const std::vector<E>& elements) {
  std::vector<E> gens;
  FiniteGroup<E> cur = ambient.subgroup({});
  for (const auto& e : elements) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = ambient.subgroup(gens);
  }
  return cur;
}

/// Smallest subgroup of `within` containing `seeds` and normalized by `within`'s generators.
template <class E>
FiniteGroup<E> normal_closure(const FiniteGroup<E>& within, std::vector<E> seeds) {
  using Ops = GroupOps<E>;
  FiniteGroup<E> n = within.subgroup(seeds);
  bool grown = true;
  while (grown) {
    grown = false;
    const auto gens = n.generators();
    for (const auto& g : within.generators()) {
      const E gi = Ops::inv(g);
      for (const auto& h : gens) {
        E c = Ops::mul(Ops::mul(g, h), gi);
        if (n.contains(c)) continue;
        auto extended = n.generators();
        extended.push_back(std::move(c));
        n = within.subgroup(std::move(extended));
        grown = true;
      }
    }
  }
  return n;
}

template <class E>
FiniteGroup<E> derived_subgroup(const FiniteGroup<E>& g) {
  std::vector<E> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      E c = commutator(gens[i], gens[j]);
      if (c != g.identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::move(comms));
}

/// G = G^(0) > G^(1) > ... until the series stabilizes.
template <class E>
std::vector<FiniteGroup<E>> derived_series(const FiniteGroup<E>& g) {
  std::vector<FiniteGroup<E>> series{g};
  while (true) {
    const auto& last = series.back();
    if (last.is_trivial()) break;
    auto next = derived_subgroup(last);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

template <class E>
bool is_solvable(const FiniteGroup<E>& g) {
  return derived_series(g).back().order() == 1;
}

template <class E>
FiniteGroup<E> center(const FiniteGroup<E>& g) {
  using Ops = GroupOps<E>;
  std::vector<E> z;
  for (const auto& x : g.elements()) {
    bool central = true;
    for (const auto& s : g.generators())
      if (Ops::mul(x, s) != Ops::mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return subgroup_from_elements(g, z);
}

template <class E>
std::uint64_t element_order(const E& g, const E& identity, std::uint64_t bound = kDefaultEnumerationBound) {
  using Ops = GroupOps<E>;
  E x = g;
  std::uint64_t k = 1;
  while (x != identity) {
    x = Ops::mul(x, g);
    if (++k > bound) throw Error(ErrorKind::BoundExceeded, "element order exceeds the bound");
  }
  return k;
}

inline std::uint64_t element_order(const Matrix& g, std::uint64_t bound = kDefaultEnumerationBound) {
  return element_order(g, Matrix::identity(g.field(), g.rows()), bound);
}

inline FieldElem determinant(const Matrix& g) { return FieldElem(g.field(), det(g)); }

/// Last nontrivial term of the derived series; abelian and normal.
template <class E>
FiniteGroup<E> abelian_normal_term(const FiniteGroup<E>& g) {
  if (g.order() == 1) throw Error(ErrorKind::TrivialGroup, "trivial group has no nontrivial abelian normal term");
  auto series = derived_series(g);
  if (series.back().order() != 1) throw Error(ErrorKind::NotSolvable, "group is not solvable");
  return series[series.size() - 2];
}

/// Common fixed vectors of the generators.
inline Subspace fixed_space(const MatrixGroup& p) {
  const std::size_t n = dim_of(p);
  const Field f = field_of(p);
  Subspace out = Subspace::full(f, n);
  for (const auto& g : p.generators()) out = out.intersect(kernel(g - Matrix::identity(f, n)));
  return out;
}

inline MatrixGroup setwise_stabilizer(const MatrixGroup& g, const OrthoDecomposition& d, std::size_t i) {
  validate_decomposition(d, g.generators());
  std::vector<Matrix> stab;
  for (const auto& x : g.elements())
    if (d.parts[i].image(x) == d.parts[i]) stab.push_back(x);
  return subgroup_from_elements(g, stab);
}

inline Perm to_perm(const std::vector<std::size_t>& images) {
  std::vector<std::uint16_t> v(images.begin(), images.end());
  return Perm(std::move(v));
}

inline PermGroup perm_image(const MatrixGroup& g, const OrthoDecomposition& d) {
  const auto act = validate_decomposition(d, g.generators());
  std::vector<Perm> gens;
  for (const auto& p : act.generator_perms) gens.push_back(to_perm(p));
  return make_perm_group(d.size(), std::move(gens));
}

inline std::vector<std::size_t> orbit(const PermGroup& k, std::size_t point) {
  std::vector<bool> seen(degree_of(k), false);
  std::vector<std::size_t> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : k.generators()) {
      const std::size_t y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_transitive(const PermGroup& k) { return degree_of(k) == 0 || orbit(k, 0).size() == degree_of(k); }

/// Permutation matrix with P e_i = e_{sigma(i)}.
inline Matrix permutation_matrix(Field f, const Perm& s) {
  Matrix m(f, s.degree(), s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i) m(s(i), i) = 1;
  return m;
}

/// Reflection in an anisotropic vector: x -> x - (2 b(x, v) / Q(v)) v.
inline Matrix reflection(const QuadraticSpace& s, const Vector& v) {
  const Field f = s.field();
  const Elt qv = s.Q(v);
  if (qv == 0) throw Error(ErrorKind::InvalidArgument, "reflection in an isotropic vector");
  const std::size_t n = s.dim();
  const Vector bv = s.gram().apply(v);  // b(x, v) = x . (B v)
  const Elt coef = f.div(f.from_int(2), qv);
  Matrix r = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = f.sub(r(i, j), f.mul(coef, f.mul(v[i], bv[j])));
  return r;
}

/// O(V, Q), generated by the reflections in all anisotropic lines; the
/// returned group has a small generating set.
inline MatrixGroup orthogonal_group(const QuadraticSpace& s, std::uint64_t bound = kDefaultEnumerationBound) {
  s.require_nondegenerate();
  const Field f = s.field();
  const std::size_t n = s.dim();
  std::vector<Matrix> refl;
  for (const auto& v : detail::projective_points(f, n))
    if (s.Q(v) != 0) refl.push_back(reflection(s, v));
  MatrixGroup all(Matrix::identity(f, n), refl, bound);
  // greedy reduction keeps every reflection needed to reach the full order
  std::vector<Matrix> gens;
  MatrixGroup cur(Matrix::identity(f, n), {}, bound);
  const std::size_t target = all.order();
  for (const auto& r : refl) {
    if (cur.order() == target) break;
    if (cur.contains(r)) continue;
    gens.push_back(r);
    cur = MatrixGroup(Matrix::identity(f, n), gens, bound);
  }
  return cur;
}

}  // namespace orthomono
