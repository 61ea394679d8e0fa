#pragma once

#include <string>
#include <vector>

#include "orthomono/error.hpp"
#include "orthomono/form.hpp"
#include "orthomono/group.hpp"
#include "orthomono/modrep.hpp"
#include "orthomono/monomial.hpp"
#include "orthomono/subgroups.hpp"

namespace orthomono {

struct TheoremReport {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::size_t ambient_order = 0;
  bool ambient_solvable = false;
  std::size_t solvable_classes = 0;
  std::size_t irreducible_classes = 0;
  std::size_t certified = 0;
  std::vector<std::string> failures;
  /// Abelian normal terms on which both component methods were compared.
  std::size_t cross_checks = 0;
  std::size_t cross_mismatches = 0;
  /// Groups whose derived subgroup was checked for determinant 1.
  std::size_t determinant_checks = 0;
  std::size_t determinant_violations = 0;
  bool minus_identity_det_ok = false;

  bool passed() const {
    return failures.empty() && cross_mismatches == 0 && determinant_violations == 0 && minus_identity_det_ok;
  }
};

/// Every solvable irreducible subgroup of O_n(q) (form I_n), up to conjugacy,
/// is monomialized and its certificate verified.
inline TheoremReport check_theorem(std::size_t n, std::uint64_t q, std::uint64_t bound = kDefaultEnumerationBound) {
  if (n % 2 == 0) throw Error(ErrorKind::HypothesisViolated, "dimension even");
  const Field f = gf(q, 1);
  const QuadraticSpace s = QuadraticSpace::standard(f, n);
  const MatrixGroup o = orthogonal_group(s, bound);
  TheoremReport r;
  r.n = n;
  r.q = q;
  r.ambient_order = o.order();
  r.ambient_solvable = is_solvable(o);
  r.minus_identity_det_ok = det(Matrix::scalar(f, n, f.neg(1))) == f.neg(1);

  const TableGroup<Matrix> table(o);
  const auto classes = solvable_subgroup_classes(table);
  r.solvable_classes = classes.size();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    std::vector<Matrix> elems;
    for (auto i : classes[ci].elements) elems.push_back(table.element(i));
    const MatrixGroup g = subgroup_from_elements(o, elems);
    if (!is_irreducible(g).irreducible) continue;
    ++r.irreducible_classes;
    const std::string tag = "class " + std::to_string(ci) + " (order " + std::to_string(g.order()) + ")";

    ++r.determinant_checks;
    const MatrixGroup dg = derived_subgroup(g);
    for (const auto& x : dg.elements())
      if (det(x) != 1) {
        ++r.determinant_violations;
        r.failures.push_back(tag + ": derived subgroup element with determinant != 1");
        break;
      }

    std::vector<MatrixGroup> terms;
    try {
      const auto cert = monomialize(g, s, &terms);
      const auto chk = check_certificate(cert, g);
      if (chk.ok)
        ++r.certified;
      else
        r.failures.push_back(tag + ": " + chk.failure);
    } catch (const Error& e) {
      r.failures.push_back(tag + ": " + to_string(e.kind()) + ": " + e.what());
    }
    for (const auto& l : terms) {
      ++r.cross_checks;
      try {
        if (homogeneous_components(l) != galois_components(l)) {
          ++r.cross_mismatches;
          r.failures.push_back(tag + ": component methods disagree");
        }
      } catch (const Error& e) {
        ++r.cross_mismatches;
        r.failures.push_back(tag + ": cross-check raised " + to_string(e.kind()) + ": " + e.what());
      }
    }
  }
  return r;
}

}  // namespace orthomono
