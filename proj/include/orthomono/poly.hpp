#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orthomono/detail/elimination.hpp"
#include "orthomono/error.hpp"
#include "orthomono/field.hpp"

namespace orthomono {

/// Dense univariate polynomial over a Field, coefficients low to high with
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<Elt> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

  static Poly constant(Field f, Elt c) { return Poly(f, {c}); }
  static Poly x(Field f) { return Poly(f, {0, 1}); }
  static Poly monomial(Field f, Elt c, std::size_t deg) {
    std::vector<Elt> v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
  }
  static Poly from_ints(Field f, const std::vector<long long>& coeffs) {
    std::vector<Elt> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(f.from_int(c));
    return Poly(f, std::move(v));
  }

  Field field() const { return f_; }
  const std::vector<Elt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elt lead() const { return c_.empty() ? 0 : c_.back(); }
  Elt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly monic() const {
    if (c_.empty()) return *this;
    const Elt s = f_.inv(lead());
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_.mul(c_[i], s);
    return Poly(f_, std::move(v));
  }

  Poly scaled(Elt s) const {
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_.mul(c_[i], s);
    return Poly(f_, std::move(v));
  }

  Elt operator()(Elt x) const {
    Elt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Elt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_.mul(f_.from_int(static_cast<long long>(i)), c_[i]);
    return Poly(f_, std::move(v));
  }

  Poly operator-() const {
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_.neg(c_[i]);
    return Poly(f_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    std::vector<Elt> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.add(a[i], b[i]);
    return Poly(a.f_, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Elt> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = a.f_.add(v[i + j], a.f_.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.f_, std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      const bool unit = c_[i] == 1 && i > 0;
      if (!unit) os << f_.format(c_[i]);
      if (i >= 1) os << "x";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Field f_;
  std::vector<Elt> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

inline DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field f = a.field();
  std::vector<Elt> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Elt> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elt li = f.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const Elt c = f.mul(r[static_cast<std::size_t>(i)], li);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    const Elt nc = f.neg(c);
    for (int j = 0; j <= db; ++j) {
      const auto at = static_cast<std::size_t>(i - db + j);
      r[at] = f.add(r[at], f.mul(nc, b[static_cast<std::size_t>(j)]));
    }
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

/// Monic gcd (zero only if both inputs are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return (a * b / gcd(a, b)).monic();
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(base.field(), 1) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1) result = result * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return result;
}

inline Poly pow(Poly base, std::uint64_t e) {
  Poly result = Poly::constant(base.field(), 1);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

struct Factor {
  Poly poly;
  int multiplicity = 1;
};

struct Factorization {
  Field field;
  Elt unit = 1;
  std::vector<Factor> factors;

  Poly product() const {
    Poly acc = Poly::constant(field, unit);
    for (const auto& fac : factors) acc = acc * pow(fac.poly, static_cast<std::uint64_t>(fac.multiplicity));
    return acc;
  }
};

namespace detail {

// Canonical order: degree first, then coefficients from the top down.
inline bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    if (a[u] != b[u]) return a[u] < b[u];
  }
  return false;
}

// f(x) = g(x^p) -> g^(1/p), using a^(1/p) = a^(q/p) in GF(q).
inline Poly pth_root(const Poly& f) {
  const Field fd = f.field();
  const std::uint32_t p = fd.characteristic();
  const std::uint64_t root_exp = fd.order() / p;
  std::vector<Elt> v(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fd.pow(f[i * p], root_exp);
  return Poly(fd, std::move(v));
}

// Squarefree decomposition of a monic polynomial.
inline std::vector<Factor> squarefree(const Poly& f) {
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  const Field fd = f.field();
  const int p = static_cast<int>(fd.characteristic());
  Poly d = f.derivative();
  if (d.is_zero()) {
    for (auto& fac : squarefree(pth_root(f))) out.push_back({fac.poly, fac.multiplicity * p});
    return out;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0)
    for (auto& fac : squarefree(pth_root(c.monic()))) out.push_back({fac.poly, fac.multiplicity * p});
  return out;
}

// Berlekamp subalgebra basis {h : h^q = h mod f} for squarefree monic f.
inline std::vector<Poly> berlekamp_basis(const Poly& f) {
  const Field fd = f.field();
  const auto d = static_cast<std::size_t>(f.degree());
  const Poly xq = pow_mod(Poly::x(fd), fd.order(), f);
  // rows of Q - I: coefficients of x^{iq} - x^i mod f
  std::vector<Elt> m(d * d, 0);
  Poly cur = Poly::constant(fd, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = cur[j];
    m[i * d + i] = fd.sub(m[i * d + i], 1);
    cur = cur * xq % f;
  }
  // want row vectors v with v (Q - I) = 0: transpose and take the right kernel
  std::vector<Elt> t(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t[j * d + i] = m[i * d + j];
  std::vector<Poly> basis;
  for (auto& v : nullspace(fd, std::move(t), d, d)) basis.emplace_back(fd, std::move(v));
  return basis;
}

inline std::vector<Poly> berlekamp_split(const Poly& f) {
  const Field fd = f.field();
  const auto basis = berlekamp_basis(f);
  const std::size_t r = basis.size();
  std::vector<Poly> parts{f};
  for (const auto& h : basis) {
    if (parts.size() == r) break;
    if (h.degree() <= 0) continue;
    std::vector<Poly> next;
    for (const auto& u : parts) {
      if (u.degree() <= 1) {
        next.push_back(u);
        continue;
      }
      std::size_t found = 0;
      for (Elt s = 0; s < fd.order(); ++s) {
        Poly g = gcd(u, h - Poly::constant(fd, s));
        if (g.degree() > 0) {
          next.push_back(g);
          ++found;
        }
      }
      if (found == 0) next.push_back(u);
    }
    parts = std::move(next);
  }
  return parts;
}

}  // namespace detail

/// Deterministic Berlekamp factorization into monic irreducibles, sorted by
/// degree then coefficients.
inline Factorization poly_factor(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "cannot factor the zero polynomial");
  Factorization out;
  out.field = f.field();
  out.unit = f.lead();
  const Poly m = f.monic();
  for (const auto& sq : detail::squarefree(m))
    for (auto& irr : detail::berlekamp_split(sq.poly)) out.factors.push_back({irr.monic(), sq.multiplicity});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return detail::poly_less(a.poly, b.poly); });
  // merge equal factors arising from different squarefree layers (cannot happen, kept exact)
  std::vector<Factor> merged;
  for (auto& fac : out.factors) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(fac);
  }
  out.factors = std::move(merged);
  return out;
}

inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const Poly m = f.monic();
  if (gcd(m, m.derivative()).degree() > 0) return false;
  return detail::berlekamp_basis(m).size() == 1;
}

/// Roots in the coefficient field, ascending by code, without multiplicity.
inline std::vector<Elt> roots(const Poly& f) {
  std::vector<Elt> out;
  for (const auto& fac : poly_factor(f).factors)
    if (fac.poly.degree() == 1) out.push_back(fac.poly.field().neg(fac.poly[0]));
  std::sort(out.begin(), out.end());
  return out;
}

/// GF(p^k) with the lexicographically least monic irreducible modulus
/// (coefficients compared from c_{k-1} down to c_0).
inline Field gf(std::uint64_t p, std::uint32_t k = 1) {
  detail::validate_characteristic(p);
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
  }
  const Field base = Field::prime(p);
  if (k == 1) return base;
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, Field> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  const auto pp = static_cast<std::uint32_t>(p);
  for (std::uint64_t t = 0; t < q; ++t) {
    // t enumerates (c_{k-1}, ..., c_0) lexicographically: c_0 is the least significant digit
    std::vector<Elt> c(k + 1, 0);
    std::uint64_t rest = t;
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = static_cast<Elt>(rest % pp);
      rest /= pp;
    }
    c[k] = 1;
    Poly cand(base, c);
    if (!is_irreducible(cand)) continue;
    Field out(detail::intern_field(pp, k, std::vector<std::uint32_t>(c.begin(), c.end())));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, k), out);
    return out;
  }
  throw Error(ErrorKind::InvariantViolation, "no irreducible polynomial found");
}

/// GF(p^k) with an explicit modulus (low to high, monic, degree k >= 1).
inline Field gf_with_modulus(std::uint64_t p, const std::vector<long long>& modulus) {
  detail::validate_characteristic(p);
  const Field base = Field::prime(p);
  Poly m = Poly::from_ints(base, modulus);
  if (m.degree() < 1 || m.lead() != 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic of positive degree");
  if (!is_irreducible(m)) throw Error(ErrorKind::InvalidArgument, "modulus " + m.to_string() + " is not irreducible");
  const auto k = static_cast<std::uint32_t>(m.degree());
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
  }
  if (k == 1 && m[0] == 0) return base;
  return Field(detail::intern_field(static_cast<std::uint32_t>(p), k,
                                    std::vector<std::uint32_t>(m.coeffs().begin(), m.coeffs().end())));
}

inline bool is_subfield(Field small, Field big) {
  return small.characteristic() == big.characteristic() && big.degree() % small.degree() == 0;
}

/// Embedding of F into an extension K. The generator of F is sent to the
/// least root (by code) of F's modulus in K.
class Embedding {
 public:
  Embedding(Field from, Field to) : from_(from), to_(to) {
    if (!is_subfield(from, to))
      throw Error(ErrorKind::NoEmbedding, from.name() + " does not embed in " + to.name());
    image_.assign(from.order(), 0);
    preimage_.assign(to.order(), -1);
    if (from == to) {
      for (Elt a = 0; a < from.order(); ++a) image_[a] = a;
    } else {
      const auto& mod = from.modulus();
      Elt theta = 0;
      bool found = false;
      for (Elt r = 0; r < to.order() && !found; ++r) {
        Elt acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;) acc = to.add(to.mul(acc, r), mod[i]);
        if (acc == 0) {
          theta = r;
          found = true;
        }
      }
      if (!found) throw Error(ErrorKind::NoEmbedding, "modulus of " + from.name() + " has no root in " + to.name());
      for (Elt a = 0; a < from.order(); ++a) {
        const auto c = from.coeffs(a);
        Elt acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = to.add(to.mul(acc, theta), c[i]);
        image_[a] = acc;
      }
    }
    for (Elt a = 0; a < from.order(); ++a) preimage_[image_[a]] = static_cast<std::int64_t>(a);
  }

  Field from() const { return from_; }
  Field to() const { return to_; }
  Elt operator()(Elt a) const { return image_[a]; }
  std::optional<Elt> pullback(Elt b) const {
    if (preimage_[b] < 0) return std::nullopt;
    return static_cast<Elt>(preimage_[b]);
  }

 private:
  Field from_;
  Field to_;
  std::vector<Elt> image_;
  std::vector<std::int64_t> preimage_;
};

/// Cached canonical embedding F -> K.
inline const Embedding& embedding(Field from, Field to) {
  static std::mutex mu;
  static std::map<std::pair<const void*, const void*>, std::unique_ptr<Embedding>> cache;
  const auto key = std::make_pair(static_cast<const void*>(from.data()), static_cast<const void*>(to.data()));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto e = std::make_unique<Embedding>(from, to);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(e));
  return *it->second;
}

inline Poly extend_scalars(const Poly& f, Field to) {
  const auto& e = embedding(f.field(), to);
  std::vector<Elt> v;
  v.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) v.push_back(e(c));
  return Poly(to, std::move(v));
}

inline FieldElem extend_scalars(const FieldElem& a, Field to) { return FieldElem(to, embedding(a.field(), to)(a.code())); }

/// Least extension of f's field over which f splits into linear factors.
inline Field splitting_field(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "splitting field of the zero polynomial");
  const Field base = f.field();
  std::uint32_t m = 1;
  for (const auto& fac : poly_factor(f).factors) m = std::lcm(m, static_cast<std::uint32_t>(fac.poly.degree()));
  if (m == 1) return base;
  return gf(base.characteristic(), base.degree() * m);
}

/// Orbit {a, a^|F|, a^{|F|^2}, ...} of a under Gal(K/F), without repetition.
inline std::vector<FieldElem> frobenius_orbit(const FieldElem& a, Field base) {
  const Field k = a.field();
  if (!is_subfield(base, k)) throw Error(ErrorKind::FieldMismatch, base.name() + " is not a subfield of " + k.name());
  std::vector<FieldElem> out{a};
  Elt cur = k.pow(a.code(), base.order());
  while (cur != a.code()) {
    out.emplace_back(k, cur);
    cur = k.pow(cur, base.order());
  }
  return out;
}

}  // namespace orthomono
