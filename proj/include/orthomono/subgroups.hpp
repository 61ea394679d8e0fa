#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "orthomono/error.hpp"
#include "orthomono/group.hpp"

namespace orthomono {

/// Finite group on element indices 0..order-1 with a precomputed multiplication table.
template <class E>
class TableGroup {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  explicit TableGroup(const FiniteGroup<E>& g) : elements_(g.elements()) {
    const std::size_t n = elements_.size();
    if (n > kMaxOrder) throw Error(ErrorKind::BoundExceeded, "group too large for a multiplication table");
    table_.resize(n * n);
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        table_[i * n + j] = static_cast<std::uint32_t>(*g.index_of(GroupOps<E>::mul(elements_[i], elements_[j])));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (table_[i * n + j] == 0) inv_[i] = static_cast<std::uint32_t>(j);
  }

  std::size_t order() const { return elements_.size(); }
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * elements_.size() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const E& element(std::uint32_t i) const { return elements_[i]; }

 private:
  std::vector<E> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
};

/// S_n on lexicographic ranks of permutations (n <= 8).
class SymmetricGroup {
 public:
  explicit SymmetricGroup(std::size_t n) : n_(n) {
    if (n == 0 || n > 8) throw Error(ErrorKind::TooLarge, "symmetric group degree must be in 1..8");
    std::vector<std::uint16_t> v(n);
    std::iota(v.begin(), v.end(), std::uint16_t{0});
    do {
      perms_.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    inv_.resize(perms_.size());
    for (std::size_t i = 0; i < perms_.size(); ++i) inv_[i] = rank(perms_[i].inverse());
  }

  std::size_t degree() const { return n_; }
  std::size_t order() const { return perms_.size(); }
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return rank(perms_[a] * perms_[b]); }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const Perm& element(std::uint32_t i) const { return perms_[i]; }

  /// Lehmer-code rank, consistent with lexicographic next_permutation order.
  std::uint32_t rank(const Perm& p) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t smaller = 0;
      for (std::size_t j = i + 1; j < n_; ++j)
        if (p(j) < p(i)) ++smaller;
      r = r * static_cast<std::uint32_t>(n_ - i) + smaller;
    }
    return r;
  }

 private:
  std::size_t n_;
  std::vector<Perm> perms_;
  std::vector<std::uint32_t> inv_;
};

/// A conjugacy class of subgroups: sorted element indices of a representative
/// and the number of conjugates.
struct SubgroupClass {
  std::vector<std::uint32_t> elements;
  std::size_t conjugates = 1;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

struct IndexVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <class G>
std::vector<std::uint32_t> conjugate_set(const G& g, const std::vector<std::uint32_t>& h, std::uint32_t x) {
  const std::uint32_t xi = g.inv(x);
  std::vector<std::uint32_t> out;
  out.reserve(h.size());
  for (auto y : h) out.push_back(g.mul(g.mul(x, y), xi));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All conjugacy classes of solvable subgroups, by cyclic extension: every
/// solvable K has a chain H < K with H normal in K and K / H of prime order,
/// so extending class representatives by normalizing elements of prime order
/// modulo H reaches every class. Classes are deduplicated by storing every
/// conjugate of each new class. Output is sorted by order, then elements.
template <class G>
std::vector<SubgroupClass> solvable_subgroup_classes(const G& g) {
  using Set = std::vector<std::uint32_t>;
  const auto n = static_cast<std::uint32_t>(g.order());
  std::unordered_set<Set, detail::IndexVectorHash> seen;
  std::vector<SubgroupClass> classes;

  auto register_class = [&](const Set& k) {
    std::unordered_set<Set, detail::IndexVectorHash> conj;
    for (std::uint32_t x = 0; x < n; ++x) conj.insert(detail::conjugate_set(g, k, x));
    const std::size_t count = conj.size();
    for (auto& c : conj) seen.insert(c);
    classes.push_back({k, count});
  };

  register_class(Set{g.identity()});
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t ci : layer) {
      const Set h = classes[ci].elements;
      std::vector<bool> in_h(n, false);
      for (auto y : h) in_h[y] = true;
      std::vector<bool> covered(in_h);
      for (std::uint32_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        // x must normalize H
        const std::uint32_t xi = g.inv(x);
        bool normalizes = true;
        for (auto y : h)
          if (!in_h[g.mul(g.mul(x, y), xi)]) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        // order of x modulo H must be prime
        std::uint32_t m = 1;
        std::uint32_t pw = x;
        while (!in_h[pw]) {
          pw = g.mul(pw, x);
          ++m;
        }
        if (!detail::is_prime(m)) continue;
        Set k;
        k.reserve(h.size() * m);
        std::uint32_t xp = g.identity();
        for (std::uint32_t i = 0; i < m; ++i) {
          for (auto y : h) k.push_back(g.mul(xp, y));
          xp = g.mul(xp, x);
        }
        std::sort(k.begin(), k.end());
        for (auto y : k) covered[y] = true;
        if (seen.count(k)) continue;
        register_class(k);
        next.push_back(classes.size() - 1);
      }
    }
    layer = std::move(next);
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return classes;
}

/// Whether some conjugate of `small` lies inside `big`.
template <class G>
bool contains_conjugate(const G& g, const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
  if (big.size() % small.size() != 0) return false;
  std::vector<bool> in_big(g.order(), false);
  for (auto y : big) in_big[y] = true;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const std::uint32_t xi = g.inv(x);
    bool inside = true;
    for (auto y : small)
      if (!in_big[g.mul(g.mul(x, y), xi)]) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

}  // namespace orthomono
