#include <doctest.h>

#include "pathalg/preprojective.hpp"
#include "pathalg/quadratic_dual.hpp"
#include "test_helpers.hpp"

using namespace pathalg;
using testutil::a_m_rad_square_zero;
using testutil::load_fixture;

namespace {

struct Setup {
  Presentation p;
  GradedBasis gb;
  int n;
  ReturningArrowQuiver raq;
  Presentation gamma;
};

Setup make(const Presentation& p) {
  GradedBasis gb = graded_basis(p, longest_path_length(p.quiver) + 1);
  int n = *homogeneity_degree(gb);
  ReturningArrowQuiver raq = returning_arrow_quiver(gb, n);
  Presentation gamma = quadratic_dual(p);
  return {p, std::move(gb), n, std::move(raq), std::move(gamma)};
}

RelationElement rel(const Quiver& q, std::initializer_list<std::pair<std::vector<std::string>, long>> terms) {
  PathLinComb combo;
  for (const auto& [names, c] : terms) combo.push_back({Path::of_arrows(q, names), Rat(c)});
  return RelationElement(q, combo);
}

bool equal_up_to_scalar(const RelationElement& a, const RelationElement& b) {
  if (a.terms().size() != b.terms().size()) return false;
  Rat ratio = 0;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    if (a.terms()[k].path != b.terms()[k].path) return false;
    Rat r = a.terms()[k].coeff / b.terms()[k].coeff;
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return ratio != 0;
}

}  // namespace

TEST_CASE("structure coefficients of the chain") {
  Setup s = make(load_fixture("a3_rad2.json"));
  StructureCoefficients sc = structure_coefficients(s.gb, 1);
  const Quiver& q = s.p.quiver;

  Index ib = *s.gb.basis_index(1, Path::of_arrows(q, {"b"}));
  Index ia = *s.gb.basis_index(1, Path::of_arrows(q, {"a"}));
  int arrow_a = *q.arrow_index("a");
  int arrow_b = *q.arrow_index("b");
  Index e2 = *s.gb.basis_index(0, Path::trivial("2"));

  CHECK(sc.left[arrow_b][e2](ib) == Rat(1));   // b e2 = b
  CHECK(sc.left[arrow_b][e2](ia) == Rat(0));
  CHECK(sc.right[e2][arrow_a](ia) == Rat(1));  // e2 a = a
  CHECK(sc.right[e2][arrow_a](ib) == Rat(0));
}

TEST_CASE("structure coefficients of the degree-two fixture") {
  Setup s = make(load_fixture("beilinson.json"));
  StructureCoefficients sc = structure_coefficients(s.gb, 2);
  const Quiver& q = s.p.quiver;

  Index a0 = *s.gb.basis_index(1, Path::of_arrows(q, {"a0"}));
  Index b0 = *s.gb.basis_index(1, Path::of_arrows(q, {"b0"}));
  CHECK(sc.left[*q.arrow_index("b1")][a0](0) == Rat(-1));  // b1 a0 = -(a1 b0)
  CHECK(sc.left[*q.arrow_index("a1")][b0](0) == Rat(1));
  CHECK(sc.left[*q.arrow_index("a1")][a0](0) == Rat(0));
}

TEST_CASE("the relation family of the chain") {
  Setup s = make(load_fixture("a3_rad2.json"));
  StructureCoefficients sc = structure_coefficients(s.gb, 1);
  const Quiver& qt = s.raq.quiver;

  RelationElement z1(qt, zeta(s.gb, s.raq, sc, *s.gb.basis_index(0, Path::trivial("1"))));
  RelationElement z2(qt, zeta(s.gb, s.raq, sc, *s.gb.basis_index(0, Path::trivial("2"))));
  RelationElement z3(qt, zeta(s.gb, s.raq, sc, *s.gb.basis_index(0, Path::trivial("3"))));

  CHECK(z1 == rel(qt, {{{"a", "ret:a"}, 1}}));                       // beta_a a
  CHECK(z2 == rel(qt, {{{"ret:a", "a"}, -1}, {{"b", "ret:b"}, 1}})); // beta_b b - a beta_a
  CHECK(z3 == rel(qt, {{{"ret:b", "b"}, -1}}));                      // -b beta_b
}

TEST_CASE("the relation family of the degree-two fixture") {
  Setup s = make(load_fixture("beilinson.json"));
  StructureCoefficients sc = structure_coefficients(s.gb, 2);
  const Quiver& q = s.p.quiver;
  const Quiver& qt = s.raq.quiver;

  auto z = [&](const char* arrow) {
    return RelationElement(
        qt, zeta(s.gb, s.raq, sc, *s.gb.basis_index(1, Path::of_arrows(q, {arrow}))));
  };
  CHECK(z("a0") == rel(qt, {{{"b1", "ret:a1*b0"}, -1}}));  // -(beta b1)
  CHECK(z("b0") == rel(qt, {{{"a1", "ret:a1*b0"}, 1}}));
  CHECK(z("a1") == rel(qt, {{{"ret:a1*b0", "b0"}, 1}}));
  CHECK(z("b1") == rel(qt, {{{"ret:a1*b0", "a0"}, -1}}));
}

TEST_CASE("degenerate inputs give the empty combination") {
  Setup s = make(load_fixture("a3_rad2.json"));
  StructureCoefficients sc = structure_coefficients(s.gb, 1);
  for (auto& rows : sc.left)
    for (auto& row : rows) row.setZero();
  for (auto& rows : sc.right)
    for (auto& row : rows) row.setZero();
  CHECK(zeta(s.gb, s.raq, sc, 0).empty());
}

TEST_CASE("preprojective presentations") {
  Setup s = make(load_fixture("a3_rad2.json"));
  PreprojPresentation pi = preproj_presentation(s.gamma, s.gb, s.n, s.raq);
  CHECK(pi.dual_relations.empty());
  REQUIRE(pi.zeta_relations.size() == 3);
  const Quiver& qt = s.raq.quiver;
  CHECK(equal_up_to_scalar(pi.zeta_relations[0], rel(qt, {{{"a", "ret:a"}, 1}})));
  CHECK(equal_up_to_scalar(pi.zeta_relations[1],
                           rel(qt, {{{"ret:a", "a"}, 1}, {{"b", "ret:b"}, -1}})));
  CHECK(equal_up_to_scalar(pi.zeta_relations[2], rel(qt, {{{"ret:b", "b"}, 1}})));

  Setup b = make(load_fixture("beilinson.json"));
  PreprojPresentation pib = preproj_presentation(b.gamma, b.gb, b.n, b.raq);
  CHECK(pib.dual_relations.size() == 1);
  CHECK(pib.zeta_relations.size() == 4);  // one per subtop basis element
  CHECK(pib.presentation.relations.size() == 5);
}

TEST_CASE("chain preprojective algebras have the classical dimension") {
  // the double-quiver quotient for the linear chain has total dimension
  // m(m+1)(m+2)/6, an independent closed-form check on the construction
  for (int m = 2; m <= 6; ++m) {
    Setup s = make(a_m_rad_square_zero(m));
    PreprojPresentation pi = preproj_presentation(s.gamma, s.gb, s.n, s.raq);
    GradedBasis cover = graded_basis(pi.presentation, m + 1);
    Index total = 0;
    for (int t = 0; t <= m + 1; ++t) total += cover.dim(t);
    CHECK(total == m * (m + 1) * (m + 2) / 6);
    CHECK(cover.dim(m) == 0);  // the cover is bounded
  }
}

TEST_CASE("preprojective presentations require an acyclic quiver") {
  Quiver cyc({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  Presentation gamma{cyc, {}};
  Setup s = make(load_fixture("a3_rad2.json"));
  CHECK_THROWS(preproj_presentation(gamma, s.gb, s.n, s.raq));
}

TEST_CASE("differentials of the bimodule complex") {
  Setup s = make(load_fixture("a3_rad2.json"));
  GradedBasis gbg = graded_basis(s.gamma, 2);
  KoszulBimoduleComplex cx = koszul_complex_maps(s.gb, gbg, 1);
  const Quiver& q = s.p.quiver;

  // f_1(m) = m (x) e_{s(m)} - e_{t(m)} (x) m
  Index ia = *s.gb.basis_index(1, Path::of_arrows(q, {"a"}));
  const BimoduleMapRow& row = cx.maps[1][static_cast<std::size_t>(ia)];
  Index e1 = *s.gb.basis_index(0, Path::trivial("1"));
  Index e2 = *s.gb.basis_index(0, Path::trivial("2"));
  CHECK(row.left.at({*q.arrow_index("a"), e1}) == Rat(1));
  CHECK(row.right.at({e2, *q.arrow_index("a")}) == Rat(-1));
  CHECK(row.left.size() == 1);
  CHECK(row.right.size() == 1);
}

TEST_CASE("composites of the complex vanish") {
  Setup b = make(load_fixture("beilinson.json"));
  GradedBasis gbg = graded_basis(b.gamma, 2);
  KoszulBimoduleComplex cx = koszul_complex_maps(b.gb, gbg, 2);
  CHECK(complex_composites_vanish(cx, b.gb, gbg));

  // the middle-slot subspace in the top degree is the rank-one joint intersection
  const Subspace& k2 =
      cx.kspaces[2].at({b.p.quiver.vertex_index("0"), b.p.quiver.vertex_index("2")});
  CHECK(k2.dim() == 1);
}

TEST_CASE("the oracle reproduces the closed formula") {
  for (int m = 3; m <= 5; ++m) {
    Setup s = make(a_m_rad_square_zero(m));
    StructureCoefficients sc = structure_coefficients(s.gb, s.n);
    GradedBasis gbg = graded_basis(s.gamma, std::max(2, s.n));
    KoszulBimoduleComplex cx = koszul_complex_maps(s.gb, gbg, s.n);
    for (Index qi = 0; qi < s.gb.dim(s.n - 1); ++qi) {
      RelationElement direct(s.raq.quiver, zeta(s.gb, s.raq, sc, qi));
      RelationElement oracle(s.raq.quiver, fstar_oracle(cx, s.gb, s.raq, qi));
      CHECK(direct == oracle);
    }
  }
  for (const char* name : {"beilinson.json", "square.json", "cube.json"}) {
    Setup s = make(load_fixture(name));
    StructureCoefficients sc = structure_coefficients(s.gb, s.n);
    GradedBasis gbg = graded_basis(s.gamma, std::max(2, s.n));
    KoszulBimoduleComplex cx = koszul_complex_maps(s.gb, gbg, s.n);
    CHECK(complex_composites_vanish(cx, s.gb, gbg));
    for (Index qi = 0; qi < s.gb.dim(s.n - 1); ++qi) {
      RelationElement direct(s.raq.quiver, zeta(s.gb, s.raq, sc, qi));
      RelationElement oracle(s.raq.quiver, fstar_oracle(cx, s.gb, s.raq, qi));
      CHECK(direct == oracle);
    }
  }
}
