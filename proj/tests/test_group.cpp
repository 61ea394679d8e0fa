#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "orthomono/group.hpp"
#include "orthomono/subgroups.hpp"

using namespace orthomono;

namespace {

Matrix M(Field f, std::vector<std::vector<long long>> rows) { return Matrix::from_ints(f, rows); }

Matrix cycle3(Field f) { return M(f, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }
Matrix swap12(Field f) { return M(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}); }

OrthoDecomposition axes(const QuadraticSpace& s) {
  OrthoDecomposition d{s, {}};
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector e(s.dim(), 0);
    e[i] = 1;
    d.parts.push_back(Subspace::span(s.field(), {e}, s.dim()));
  }
  return d;
}

const oracle::IMat kId3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

}  // namespace

TEST(Group, EnumerationExamples) {
  const Field f5 = gf(5), f3 = gf(3);
  EXPECT_EQ(make_matrix_group(f5, 3, {Matrix::scalar(f5, 3, 4)}).order(), 2u);
  EXPECT_EQ(make_matrix_group(f5, 3, {cycle3(f5)}).order(), 3u);
  const MatrixGroup o = orthogonal_group(QuadraticSpace::standard(f3, 3));
  EXPECT_EQ(o.order(), 48u);
  EXPECT_EQ(oracle::orthogonal_order_by_filter(kId3, 3), 48u);
  EXPECT_THROW(make_matrix_group(f5, 3, {Matrix(f5, 3, 3)}), Error);
}

TEST(Group, OrthogonalOrdersMatchOracle) {
  for (int p : {3, 5, 7}) {
    const auto o = orthogonal_group(QuadraticSpace::standard(gf(p), 3));
    EXPECT_EQ(o.order(), oracle::orthogonal_group(kId3, p).size());
    for (const auto& g : o.elements()) EXPECT_TRUE(is_isometry(g, QuadraticSpace::standard(gf(p), 3)));
  }
  const oracle::IMat b{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  const auto s = QuadraticSpace::from_residues(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  EXPECT_EQ(orthogonal_group(s).order(), oracle::orthogonal_group(b, 5).size());
  // |O_1(q)| = 2, |O_5(3)| = 2 * 3^4 * (3^4 - 1) * (3^2 - 1) = 103680
  EXPECT_EQ(orthogonal_group(QuadraticSpace::standard(gf(7), 1)).order(), 2u);
}

TEST(Group, EnumerationBound) {
  const Field f7 = gf(7);
  MatrixGroup o = orthogonal_group(QuadraticSpace::standard(f7, 3));
  const MatrixGroup capped = o.subgroup(o.generators());
  EXPECT_EQ(capped.order(), 672u);
  try {
    MatrixGroup small(Matrix::identity(f7, 3), o.generators(), 100);
    small.order();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Group, DerivedSeriesExamples) {
  const Field f5 = gf(5);
  const MatrixGroup s3 = make_matrix_group(f5, 3, {cycle3(f5), swap12(f5)});
  const auto series = derived_series(s3);
  ASSERT_EQ(series.size(), 3u);
  EXPECT_EQ(series[0].order(), 6u);
  EXPECT_EQ(series[1].order(), 3u);
  EXPECT_EQ(series[2].order(), 1u);
  EXPECT_TRUE(is_solvable(s3));

  const MatrixGroup ab = make_matrix_group(f5, 3, {cycle3(f5), Matrix::scalar(f5, 3, 4)});
  const auto s2 = derived_series(ab);
  ASSERT_EQ(s2.size(), 2u);
  EXPECT_EQ(s2[1].order(), 1u);

  // SO_3(5): determinant-one isometries, order 120, not solvable
  const MatrixGroup o5 = orthogonal_group(QuadraticSpace::standard(f5, 3));
  std::vector<Matrix> so;
  for (const auto& g : o5.elements())
    if (det(g) == 1) so.push_back(g);
  const MatrixGroup so5 = subgroup_from_elements(o5, so);
  EXPECT_EQ(so5.order(), 120u);
  EXPECT_FALSE(is_solvable(so5));
  EXPECT_FALSE(is_solvable(o5));
  EXPECT_TRUE(is_solvable(orthogonal_group(QuadraticSpace::standard(gf(3), 3))));
}

TEST(Group, DerivedTermsAreNormal) {
  for (int p : {3, 5}) {
    const MatrixGroup o = orthogonal_group(QuadraticSpace::standard(gf(p), 3));
    for (const auto& t : derived_series(o))
      for (const auto& g : o.generators())
        for (const auto& h : t.generators()) EXPECT_TRUE(t.contains(g * h * inverse(g)));
  }
}

TEST(Group, DeterminantAndOrder) {
  const Field f7 = gf(7);
  EXPECT_EQ(determinant(Matrix::scalar(f7, 3, f7.neg(1))).code(), 6u);
  EXPECT_EQ(element_order(cycle3(f7)), 3u);
  EXPECT_EQ(element_order(Matrix::scalar(f7, 2, 3)), 6u);
  // commutators have determinant one
  const MatrixGroup o = orthogonal_group(QuadraticSpace::standard(f7, 3));
  const MatrixGroup d = derived_subgroup(o);
  for (const auto& x : d.elements()) EXPECT_EQ(det(x), 1u);
}

TEST(Group, AbelianNormalTerm) {
  const Field f5 = gf(5), f3 = gf(3);
  const MatrixGroup s3 = make_matrix_group(f5, 3, {cycle3(f5), swap12(f5)});
  const MatrixGroup a3 = abelian_normal_term(s3);
  EXPECT_EQ(a3.order(), 3u);
  EXPECT_TRUE(a3.contains(cycle3(f5)));

  const MatrixGroup ab = make_matrix_group(f5, 3, {cycle3(f5)});
  EXPECT_EQ(abelian_normal_term(ab).order(), 3u);

  const MatrixGroup o = orthogonal_group(QuadraticSpace::standard(f3, 3));
  const MatrixGroup l = abelian_normal_term(o);
  EXPECT_TRUE(l.is_abelian());
  for (const auto& x : l.elements()) EXPECT_EQ(det(x), 1u);
  for (const auto& g : o.generators())
    for (const auto& h : l.generators()) EXPECT_TRUE(l.contains(g * h * inverse(g)));
  // O_3(3) = {+-1} x S_4 with derived series 2 x S_4 > A_4 > V_4 > 1
  EXPECT_EQ(l.order(), 4u);

  try {
    abelian_normal_term(make_matrix_group(f5, 2, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TrivialGroup);
  }
}

TEST(Group, Center) {
  const Field f3 = gf(3);
  const MatrixGroup o = orthogonal_group(QuadraticSpace::standard(f3, 3));
  const MatrixGroup z = center(o);
  EXPECT_EQ(z.order(), 2u);
  EXPECT_TRUE(z.contains(Matrix::scalar(f3, 3, 2)));
}

TEST(Group, FixedSpace) {
  const Field f3 = gf(3);
  EXPECT_EQ(fixed_space(make_matrix_group(f3, 3, {})), Subspace::full(f3, 3));
  EXPECT_EQ(fixed_space(make_matrix_group(f3, 3, {Matrix::scalar(f3, 3, 2)})).dim(), 0u);
  const MatrixGroup u = make_matrix_group(f3, 3, {M(f3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})});
  // (I + N)^3 = I + N^3 = I in characteristic 3
  EXPECT_EQ(u.order(), 3u);
  EXPECT_GT(fixed_space(u).dim(), 0u);
}

TEST(Group, StabilizersAndImages) {
  const Field f3 = gf(3);
  const auto s = QuadraticSpace::standard(f3, 3);
  const auto d = axes(s);
  const MatrixGroup s3 = make_matrix_group(f3, 3, {cycle3(f3), swap12(f3)});
  EXPECT_EQ(setwise_stabilizer(s3, d, 0).order(), 2u);

  const MatrixGroup pm = make_matrix_group(f3, 3, {Matrix::scalar(f3, 3, 2)});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(setwise_stabilizer(pm, d, i).order(), 2u);
  const PermGroup pi = perm_image(pm, d);
  EXPECT_EQ(pi.order(), 1u);
  EXPECT_FALSE(is_transitive(pi));

  const PermGroup c3 = perm_image(make_matrix_group(f3, 3, {cycle3(f3)}), d);
  EXPECT_EQ(c3.order(), 3u);
  EXPECT_TRUE(is_transitive(c3));

  const MatrixGroup o = orthogonal_group(s);
  const PermGroup img = perm_image(o, d);
  EXPECT_EQ(img.order(), 6u);
  EXPECT_TRUE(is_transitive(img));
  for (std::size_t i = 0; i < 3; ++i) {
    const MatrixGroup st = setwise_stabilizer(o, d, i);
    EXPECT_EQ(st.order(), 16u);
    EXPECT_EQ(o.order(), orbit(img, i).size() * st.order());
  }
}

TEST(Group, PermBasics) {
  const Perm a = Perm::from_cycles(4, {{1, 2, 3}});
  EXPECT_EQ(a(0), 1u);
  EXPECT_EQ(a(2), 0u);
  EXPECT_EQ(a(3), 3u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  const PermGroup s4 = make_perm_group(4, {Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{1, 2}})});
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_TRUE(is_solvable(s4));
}

TEST(Group, SolvableSubgroupClassesMatchOracle) {
  const Field f3 = gf(3);
  const MatrixGroup o = orthogonal_group(QuadraticSpace::standard(f3, 3));
  const TableGroup<Matrix> t(o);
  const auto classes = solvable_subgroup_classes(t);

  // oracle: every subgroup of O_3(3) is generated by at most three elements
  const auto elems = oracle::orthogonal_group(kId3, 3);
  const oracle::IMat id = kId3;
  const auto table = oracle::make_table<oracle::IMat>(
      elems, [](const oracle::IMat& a, const oracle::IMat& b) { return oracle::mul(a, b, 3); }, id);
  const auto reps = oracle::subgroup_classes_by_generation(table, 3);

  std::multiset<std::pair<std::size_t, std::size_t>> ours, theirs;
  for (const auto& c : classes) ours.insert({c.order(), c.conjugates});
  for (const auto& h : reps) {
    std::set<oracle::Set> conj;
    for (int x = 0; x < table.size(); ++x) conj.insert(oracle::conjugate(table, h, x));
    theirs.insert({h.size(), conj.size()});
  }
  EXPECT_EQ(classes.size(), reps.size());
  EXPECT_EQ(ours, theirs);
  EXPECT_EQ(classes.size(), 33u);
}

TEST(Group, SymmetricGroupSolvableClasses) {
  // S_4 has 11 classes of subgroups, all solvable
  const SymmetricGroup s4(4);
  EXPECT_EQ(solvable_subgroup_classes(s4).size(), 11u);
  // S_5 has 19 classes; A_5 and S_5 are the non-solvable ones
  const SymmetricGroup s5(5);
  EXPECT_EQ(solvable_subgroup_classes(s5).size(), 17u);
  EXPECT_THROW(SymmetricGroup(9), Error);
}
