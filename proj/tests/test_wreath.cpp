#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "orthomono/subgroups.hpp"
#include "orthomono/wreath.hpp"

using namespace orthomono;

namespace {

PermGroup cyclic(std::size_t n) {
  std::vector<std::uint16_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
  return make_perm_group(n, {Perm(c)});
}

std::vector<std::pair<int, bool>> summary(const std::vector<TransitiveClass>& classes) {
  std::vector<std::pair<int, bool>> out;
  for (const auto& c : classes) out.emplace_back(static_cast<int>(c.order), c.maximal);
  return out;
}

}  // namespace

TEST(Wreath, ConstructOrders) {
  const Field f5 = gf(5);
  EXPECT_EQ(wreath_construct(symmetric_perm_group(3), QuadraticSpace::standard(f5, 3)).group.order(), 48u);
  EXPECT_EQ(wreath_construct(cyclic(3), QuadraticSpace::standard(f5, 3)).group.order(), 24u);
  EXPECT_EQ(wreath_construct(make_perm_group(3, {}), QuadraticSpace::standard(f5, 3)).group.order(), 8u);
  const QuadraticSpace two(Matrix::scalar(f5, 5, 2));
  const WreathSpec w5 = wreath_construct(cyclic(5), two);
  EXPECT_EQ(w5.group.order(), 160u);
  for (const auto& g : w5.group.generators()) EXPECT_TRUE(is_isometry(g, two));
  try {
    wreath_construct(cyclic(3), QuadraticSpace::from_residues(5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonScalarForm);
  }
}

TEST(Wreath, IrreducibleIffTransitive) {
  const Field f3 = gf(3);
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    const SymmetricGroup sn(n);
    const PermGroup ambient = symmetric_perm_group(n);
    const auto s = QuadraticSpace::standard(f3, n);
    for (const auto& c : solvable_subgroup_classes(sn)) {
      std::vector<Perm> elems;
      for (auto i : c.elements) elems.push_back(sn.element(i));
      const PermGroup k = subgroup_from_elements(ambient, elems);
      const WreathSpec w = wreath_construct(k, s);
      EXPECT_EQ(w.group.order(), (std::size_t{1} << n) * k.order());
      EXPECT_EQ(is_irreducible(w.group).irreducible, is_transitive(k)) << "n " << n << " |K| " << k.order();
    }
  }
}

TEST(Wreath, TransitiveClassesMatchOracle) {
  EXPECT_EQ(summary(transitive_solvable_subgroups(1)), (std::vector<std::pair<int, bool>>{{1, true}}));
  const auto t3 = transitive_solvable_subgroups(3);
  EXPECT_EQ(summary(t3), oracle::transitive_solvable(3, false).classes);
  EXPECT_EQ(summary(t3), (std::vector<std::pair<int, bool>>{{3, false}, {6, true}}));
  const auto t5 = transitive_solvable_subgroups(5);
  EXPECT_EQ(summary(t5), oracle::transitive_solvable(5, false).classes);
  EXPECT_EQ(summary(t5), (std::vector<std::pair<int, bool>>{{5, false}, {10, false}, {20, true}}));
  const auto t7 = transitive_solvable_subgroups(7);
  EXPECT_EQ(summary(t7), oracle::transitive_solvable(7, true).classes);
  EXPECT_EQ(summary(t7), (std::vector<std::pair<int, bool>>{{7, false}, {14, false}, {21, false}, {42, true}}));
  for (const auto& c : t7) {
    EXPECT_TRUE(is_transitive(c.group));
    EXPECT_TRUE(is_solvable(c.group));
    EXPECT_EQ(c.group.order(), c.order);
  }
}

TEST(Wreath, ConjugateIntoWreath) {
  const Field f3 = gf(3), f5 = gf(5);
  const auto s3 = QuadraticSpace::standard(f3, 3);
  const auto e = conjugate_into_wreath(orthogonal_group(s3), s3);
  EXPECT_TRUE(e.contained);
  EXPECT_TRUE(e.equal);
  EXPECT_EQ(e.k.order(), 6u);

  const auto s5 = QuadraticSpace::standard(f5, 5);
  const WreathSpec w = wreath_construct(cyclic(5), s5);
  const auto c5 = conjugate_into_wreath(w.group, s5);
  EXPECT_TRUE(c5.equal);
  EXPECT_EQ(c5.k.order(), 5u);
  EXPECT_TRUE(is_transitive(c5.k));

  // a conjugate by a non-monomial isometry is recovered as well
  const auto s = QuadraticSpace::standard(f5, 3);
  const MatrixGroup o = orthogonal_group(s);
  const WreathSpec w3 = wreath_construct(cyclic(3), s);
  std::optional<Matrix> h;
  for (const auto& x : o.elements())
    if (!w3.group.contains(x) && !wreath_construct(symmetric_perm_group(3), s).group.contains(x)) {
      h = x;
      break;
    }
  ASSERT_TRUE(h.has_value());
  std::vector<Matrix> gens;
  for (const auto& g : w3.group.generators()) gens.push_back(*h * g * inverse(*h));
  const MatrixGroup conj = make_matrix_group(f5, 3, gens);
  const auto r = conjugate_into_wreath(conj, s);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.k.order(), 3u);
  for (const auto& g : conj.elements()) EXPECT_TRUE(r.wreath.group.contains(inverse(r.p) * g * r.p));
}

TEST(Wreath, MaximalityOfSymmetricWreath) {
  for (int p : {3, 5, 7}) {
    const auto s = QuadraticSpace::standard(gf(p), 3);
    const auto r = maximality_check(wreath_construct(symmetric_perm_group(3), s));
    EXPECT_TRUE(r.maximal) << "q = " << p;
    // over GF(3) the wreath product is all of O_3(3), so there is nothing to extend by
    if (p == 3)
      EXPECT_EQ(r.ambient_order, 48u);
    else
      EXPECT_GT(r.extensions_checked, 0u);
  }
}

TEST(Wreath, CyclicWreathIsNotMaximal) {
  const auto s = QuadraticSpace::standard(gf(5), 3);
  const WreathSpec w = wreath_construct(cyclic(3), s);
  const auto r = maximality_check(w);
  EXPECT_FALSE(r.maximal);
  ASSERT_TRUE(r.counterexample.has_value());
  const MatrixGroup& h = *r.counterexample;
  EXPECT_TRUE(is_solvable(h));
  EXPECT_TRUE(is_irreducible(h).irreducible);
  EXPECT_GT(h.order(), w.group.order());
  for (const auto& g : w.group.generators()) EXPECT_TRUE(h.contains(g));
}

TEST(Wreath, UniquenessOfLineDecomposition) {
  for (int p : {3, 5})
    for (const auto& k : {cyclic(3), symmetric_perm_group(3)}) {
      const auto s = QuadraticSpace::standard(gf(p), 3);
      std::vector<OrthoDecomposition> found;
      EXPECT_EQ(uniqueness_oracle(wreath_construct(k, s).group, s, &found), 1u);
      ASSERT_EQ(found.size(), 1u);
      for (const auto& w : found[0].parts) {
        std::size_t nonzero = 0;
        for (auto x : w.vector(0)) nonzero += x != 0;
        EXPECT_EQ(nonzero, 1u);
      }
    }
  const auto s = QuadraticSpace::standard(gf(5), 3);
  EXPECT_THROW(uniqueness_oracle(wreath_construct(make_perm_group(3, {}), s).group, s), Error);
}

TEST(Wreath, EvenDimensionFixture) {
  const Fixture fx = o2minus(5);
  EXPECT_EQ(fx.group.order(), 12u);
  EXPECT_TRUE(is_solvable(fx.group));
  EXPECT_TRUE(is_irreducible(fx.group).irreducible);
  EXPECT_EQ(uniqueness_oracle(fx.group, fx.space), 0u);
  // the norm form is anisotropic
  for (const auto& v : detail::projective_points(fx.space.field(), 2)) EXPECT_NE(fx.space.Q(v), 0u);
  EXPECT_EQ(o2minus(3).group.order(), 8u);
}

TEST(Wreath, SemilinearFixture) {
  const MatrixGroup g = gammaL1(3, 3);
  EXPECT_EQ(g.order(), 78u);
  EXPECT_TRUE(is_solvable(g));
  EXPECT_TRUE(is_irreducible(g).irreducible);
  EXPECT_TRUE(invariant_symmetric_forms(g).empty());
}

TEST(Wreath, CharacteristicTwoFixture) {
  const Error e = char2_rejection();
  EXPECT_EQ(e.kind(), ErrorKind::Characteristic2);
  EXPECT_NE(std::string(e.what()).find("radical"), std::string::npos);
}

TEST(Wreath, InvariantForms) {
  const auto s = QuadraticSpace::standard(gf(3), 3);
  const auto forms = invariant_symmetric_forms(orthogonal_group(s));
  ASSERT_EQ(forms.size(), 1u);
  EXPECT_EQ(scalar_of_gram(forms[0]).has_value(), true);
  const Field f5 = gf(5);
  const MatrixGroup diag = make_matrix_group(f5, 3, {Matrix::scalar(f5, 3, 4)});
  EXPECT_EQ(invariant_symmetric_forms(diag).size(), 6u);
  const auto b = nondegenerate_member(invariant_symmetric_forms(wreath_construct(cyclic(3), QuadraticSpace::standard(f5, 3)).group), f5, 3);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(scalar_of_gram(*b).has_value());
}
