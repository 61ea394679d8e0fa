#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "orthomono/error.hpp"

namespace orthomono {

/// Packed field element: coordinates c_0..c_{k-1} with respect to the power
/// basis of the field modulus, stored as the integer sum of c_i * p^i.
/// Elements of the prime subfield therefore have codes 0..p-1.
using Elt = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // low to high, monic, size k + 1
  Elt generator = 0;
  std::vector<Elt> exp;                // g^i, 0 <= i < 2(q - 1)
  std::vector<std::int32_t> log;       // log[0] = -1
  std::vector<std::int32_t> zech;      // log(1 + g^i); -1 when 1 + g^i = 0
};

inline std::vector<std::uint32_t> digits(const FieldData& f, Elt a) {
  std::vector<std::uint32_t> d(f.k);
  for (std::uint32_t i = 0; i < f.k; ++i) {
    d[i] = a % f.p;
    a /= f.p;
  }
  return d;
}

inline Elt pack(const FieldData& f, const std::vector<std::uint32_t>& d) {
  Elt a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * f.p + d[i];
  return a;
}

// Schoolbook product of packed residues reduced by the modulus; only used
// while building the log tables.
inline Elt slow_mul(const FieldData& f, Elt a, Elt b) {
  const auto da = digits(f, a);
  const auto db = digits(f, b);
  std::vector<std::uint64_t> prod(2 * f.k, 0);
  for (std::uint32_t i = 0; i < f.k; ++i)
    for (std::uint32_t j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % f.p;
  for (std::size_t top = prod.size(); top-- > f.k;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (std::uint32_t i = 0; i < f.k; ++i) {
      const std::size_t at = top - f.k + i;
      prod[at] = (prod[at] + (f.p - c) * f.modulus[i]) % f.p;
    }
  }
  std::vector<std::uint32_t> out(f.k);
  for (std::uint32_t i = 0; i < f.k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return pack(f, out);
}

inline Elt add_one(const FieldData& f, Elt a) {
  const Elt c0 = a % f.p;
  return a - c0 + (c0 + 1) % f.p;
}

// Builds exp/log/Zech tables. Returns nullptr if the quotient ring has no
// element of multiplicative order q - 1, i.e. the modulus is reducible.
inline std::unique_ptr<FieldData> build_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  auto f = std::make_unique<FieldData>();
  f->p = p;
  f->k = k;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  f->q = static_cast<std::uint32_t>(q);
  f->modulus = std::move(modulus);
  const std::uint32_t n = f->q - 1;
  for (Elt g = (f->q == 2 ? 1 : 2); g < f->q; ++g) {
    std::vector<std::int32_t> log(f->q, -1);
    std::vector<Elt> exp(2 * std::size_t(n));
    Elt cur = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (log[cur] != -1) {
        ok = false;
        break;
      }
      log[cur] = static_cast<std::int32_t>(i);
      exp[i] = cur;
      exp[i + n] = cur;
      cur = slow_mul(*f, cur, g);
    }
    if (!ok || cur != 1) continue;
    f->generator = g;
    f->exp = std::move(exp);
    f->log = std::move(log);
    f->zech.assign(n, -1);
    for (std::uint32_t i = 0; i < n; ++i) {
      const Elt s = add_one(*f, f->exp[i]);
      f->zech[i] = s == 0 ? -1 : f->log[s];
    }
    return f;
  }
  return nullptr;
}

// Fields live for the whole program; handles compare by pointer.
inline const FieldData* intern_field(std::uint32_t p, std::uint32_t k, const std::vector<std::uint32_t>& modulus) {
  static std::mutex mu;
  static std::map<std::vector<std::uint32_t>, std::unique_ptr<FieldData>> registry;
  std::vector<std::uint32_t> key{p, k};
  key.insert(key.end(), modulus.begin(), modulus.end());
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto built = build_field(p, k, modulus);
  if (!built) throw Error(ErrorKind::InvalidArgument, "field modulus is not irreducible");
  const FieldData* out = built.get();
  registry.emplace(std::move(key), std::move(built));
  return out;
}

inline void validate_characteristic(std::uint64_t p) {
  if (p == 2)
    throw Error(ErrorKind::Characteristic2,
                "characteristic 2: the polarization of a quadratic form in odd dimension has a nonzero radical");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
}

}  // namespace detail

/// Handle to an immutable finite field GF(p^k), p odd. Cheap to copy.
class Field {
 public:
  Field() = default;
  explicit Field(const detail::FieldData* d) : d_(d) {}

  /// The prime field GF(p), realized with modulus x.
  static Field prime(std::uint64_t p) {
    detail::validate_characteristic(p);
    if (p >= kMaxFieldOrder) throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
    return Field(detail::intern_field(static_cast<std::uint32_t>(p), 1, {0, 1}));
  }

  bool valid() const { return d_ != nullptr; }
  std::uint32_t characteristic() const { return d_->p; }
  std::uint32_t degree() const { return d_->k; }
  std::uint32_t order() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  Elt generator() const { return d_->generator; }
  const detail::FieldData* data() const { return d_; }

  static constexpr Elt zero() { return 0; }
  static constexpr Elt one() { return 1; }

  Elt from_int(long long n) const {
    const long long p = d_->p;
    return static_cast<Elt>(((n % p) + p) % p);
  }

  Elt add(Elt a, Elt b) const {
    if (d_->k == 1) {
      const Elt s = a + b;
      return s >= d_->p ? s - d_->p : s;
    }
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t n = d_->q - 1;
    const std::uint32_t la = static_cast<std::uint32_t>(d_->log[a]);
    const std::uint32_t lb = static_cast<std::uint32_t>(d_->log[b]);
    const std::int32_t z = d_->zech[(lb + n - la) % n];
    if (z < 0) return 0;
    return d_->exp[la + static_cast<std::uint32_t>(z)];
  }

  Elt neg(Elt a) const {
    if (a == 0) return 0;
    if (d_->k == 1) return d_->p - a;
    const std::uint32_t n = d_->q - 1;
    return d_->exp[static_cast<std::uint32_t>(d_->log[a]) + n / 2];
  }

  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return d_->exp[static_cast<std::uint32_t>(d_->log[a]) + static_cast<std::uint32_t>(d_->log[b])];
  }

  Elt inv(Elt a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const std::uint32_t n = d_->q - 1;
    return d_->exp[(n - static_cast<std::uint32_t>(d_->log[a])) % n];
  }

  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  Elt pow(Elt a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = d_->q - 1;
    return d_->exp[(static_cast<std::uint64_t>(d_->log[a]) * (e % n)) % n];
  }

  /// Euler's criterion: a^((q-1)/2) = 1.
  bool is_square(Elt a) const {
    if (a == 0) throw Error(ErrorKind::ZeroInput, "square class of zero");
    return pow(a, (d_->q - 1) / 2) == 1;
  }

  std::optional<Elt> sqrt(Elt a) const {
    if (a == 0) return Elt{0};
    const std::int32_t l = d_->log[a];
    if (l % 2 != 0) return std::nullopt;
    return d_->exp[static_cast<std::uint32_t>(l / 2)];
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elt a) const {
    if (a == 0) throw Error(ErrorKind::ZeroInput, "order of zero");
    const std::uint64_t n = d_->q - 1;
    std::uint64_t l = static_cast<std::uint64_t>(d_->log[a]);
    std::uint64_t g = n, r = l;
    while (r != 0) {
      const std::uint64_t t = g % r;
      g = r;
      r = t;
    }
    return n / g;
  }

  std::vector<std::uint32_t> coeffs(Elt a) const { return detail::digits(*d_, a); }

  Elt from_coeffs(const std::vector<long long>& c) const {
    if (c.size() > d_->k) throw Error(ErrorKind::InvalidArgument, "too many coordinates for field element");
    std::vector<std::uint32_t> d(d_->k, 0);
    for (std::size_t i = 0; i < c.size(); ++i) d[i] = from_int(c[i]);
    return detail::pack(*d_, d);
  }

  std::string format(Elt a) const {
    if (d_->k == 1) return std::to_string(a);
    std::ostringstream os;
    os << '(';
    const auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
    return os.str();
  }

  std::string name() const {
    std::string s = "GF(" + std::to_string(d_->p);
    if (d_->k > 1) s += "^" + std::to_string(d_->k);
    return s + ")";
  }

  friend bool operator==(Field a, Field b) { return a.d_ == b.d_; }
  friend bool operator!=(Field a, Field b) { return a.d_ != b.d_; }

 private:
  const detail::FieldData* d_ = nullptr;
};

inline void require_same_field(Field a, Field b) {
  if (a != b) throw Error(ErrorKind::FieldMismatch, "operands live in different fields " + a.name() + " / " + b.name());
}

/// Field element carrying its field; used at API boundaries.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field f, Elt v) : f_(f), v_(v) {}

  static FieldElem of(Field f, long long n) { return FieldElem(f, f.from_int(n)); }

  Field field() const { return f_; }
  Elt code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return f_.coeffs(v_); }

  FieldElem inv() const { return FieldElem(f_, f_.inv(v_)); }
  FieldElem pow(std::uint64_t e) const { return FieldElem(f_, f_.pow(v_, e)); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.f_, b.f_);
    return FieldElem(a.f_, a.f_.add(a.v_, b.v_));
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.f_, b.f_);
    return FieldElem(a.f_, a.f_.sub(a.v_, b.v_));
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.f_, b.f_);
    return FieldElem(a.f_, a.f_.mul(a.v_, b.v_));
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.f_, b.f_);
    return FieldElem(a.f_, a.f_.div(a.v_, b.v_));
  }
  FieldElem operator-() const { return FieldElem(f_, f_.neg(v_)); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  std::string to_string() const { return f_.format(v_); }

 private:
  Field f_;
  Elt v_ = 0;
};

inline bool is_square(const FieldElem& a) { return a.field().is_square(a.code()); }

}  // namespace orthomono
