#include <doctest.h>

#include "pathalg/io.hpp"
#include "pathalg/theorem.hpp"
#include "test_helpers.hpp"

using namespace pathalg;
using testutil::a_m_rad_square_zero;
using testutil::load_fixture;

namespace {

Presentation reverse_arrow_order(const Presentation& p) {
  std::vector<Arrow> arrows(p.quiver.arrows().rbegin(), p.quiver.arrows().rend());
  Quiver q(p.quiver.vertices(), arrows);
  std::vector<RelationElement> relations;
  for (const RelationElement& r : p.relations) relations.emplace_back(q, r.terms());
  return Presentation{q, relations};
}

}  // namespace

TEST_CASE("orthogonality of the mixed families") {
  Presentation p = load_fixture("a3_rad2.json");
  GradedBasis gb = graded_basis(p, 2);
  ReturningArrowQuiver raq = returning_arrow_quiver(gb, 1);
  TrivExtAlgebra alg(gb, 1, TwistSpec::nu(1));
  auto mixed = trivext_mixed_relations(raq, alg);
  PreprojPresentation pi = preproj_presentation(quadratic_dual(p), gb, 1, raq);

  CHECK(verify_orthogonality(raq, mixed, pi.zeta_relations));

  // a sign flip on one term must be detected
  const Quiver& qt = raq.quiver;
  RelationElement perturbed(qt, {{Path::of_arrows(qt, {"ret:a", "a"}), Rat(1)},
                                 {Path::of_arrows(qt, {"b", "ret:b"}), Rat(1)}});
  CHECK_FALSE(verify_orthogonality(raq, mixed, {perturbed}));

  // elements outside the mixed block are rejected
  RelationElement vv(qt, {{Path::of_arrows(qt, {"a", "b"}), Rat(1)}});
  CHECK_THROWS(verify_orthogonality(raq, {vv}, pi.zeta_relations));
}

TEST_CASE("orthogonality is vacuous when one side is empty") {
  Presentation p = load_fixture("beilinson.json");
  GradedBasis gb = graded_basis(p, 3);
  ReturningArrowQuiver raq = returning_arrow_quiver(gb, 2);
  TrivExtAlgebra alg(gb, 2, TwistSpec::nu(2));
  PreprojPresentation pi = preproj_presentation(quadratic_dual(p), gb, 2, raq);
  CHECK(verify_orthogonality(raq, trivext_mixed_relations(raq, alg), pi.zeta_relations));
}

TEST_CASE("the verification pipeline passes on the chain family") {
  for (int m = 3; m <= 6; ++m) {
    VerificationReport report = verify_main_theorem(a_m_rad_square_zero(m), 6);
    CHECK(report.pass());
    CHECK(report.n == 1);
    for (const auto& s : report.stages) CHECK(s.pass);
  }
}

TEST_CASE("the verification pipeline verifies the degree-two fixture") {
  VerificationReport report = verify_main_theorem(load_fixture("beilinson.json"), 6);
  // this extension needs cubic relations, so the strong hypothesis is
  // reported unmet, but the degree-2 subspace identity holds throughout
  CHECK(report.identity_ok());
  CHECK(report.corroboration_ok);
  CHECK_FALSE(report.hypotheses_ok());
  CHECK(report.n == 2);
  for (const auto& s : report.stages) {
    if (s.name == "trivial extension quadratic")
      CHECK_FALSE(s.pass);
    else
      CHECK(s.pass);
  }

  // block bookkeeping: the degree-two block carries 4 = 3 + 1, the two mixed
  // blocks carry 2 = 0 + 2 each
  bool seen_02 = false, seen_10 = false, seen_21 = false;
  for (const auto& b : report.blocks) {
    CHECK(b.sum_ok);
    CHECK(b.complement_ok);
    if (b.source == "0" && b.target == "2") {
      seen_02 = true;
      CHECK(b.path_count == 4);
      CHECK(b.trivext_dim == 3);
      CHECK(b.preproj_dim == 1);
    }
    if (b.source == "1" && b.target == "0") {
      seen_10 = true;
      CHECK(b.path_count == 2);
      CHECK(b.trivext_dim == 0);
      CHECK(b.preproj_dim == 2);
    }
    if (b.source == "2" && b.target == "1") {
      seen_21 = true;
      CHECK(b.path_count == 2);
      CHECK(b.preproj_dim == 2);
    }
  }
  CHECK(seen_02);
  CHECK(seen_10);
  CHECK(seen_21);
}

TEST_CASE("the pipeline passes on fixtures with a nonempty mixed kernel") {
  // even n with the identity-acting twist
  VerificationReport square = verify_main_theorem(load_fixture("square.json"), 6);
  CHECK(square.pass());
  CHECK(square.n == 2);
  CHECK(square.lambda_dims == std::vector<Index>{3, 4, 3});

  // odd n with a sign-acting twist, triple-intersection middle slots
  VerificationReport cube = verify_main_theorem(load_fixture("cube.json"), 6);
  CHECK(cube.pass());
  CHECK(cube.n == 3);
  CHECK(cube.lambda_dims == std::vector<Index>{4, 6, 6, 4});
  for (const auto& b : cube.blocks) {
    CHECK(b.sum_ok);
    CHECK(b.complement_ok);
  }
}

TEST_CASE("hypothesis failures are reported, not crashed") {
  VerificationReport a2 = verify_main_theorem(load_fixture("a2.json"), 6);
  CHECK_FALSE(a2.pass());
  CHECK_FALSE(a2.hypotheses_ok());
  bool found = false;
  for (const auto& s : a2.stages) {
    if (s.name == "trivial extension quadratic") {
      found = true;
      CHECK_FALSE(s.pass);
      CHECK(s.detail.find("not quadratic") != std::string::npos);
    }
  }
  CHECK(found);

  VerificationReport free3 = verify_main_theorem(load_fixture("a3_free.json"), 6);
  CHECK_FALSE(free3.pass());
  CHECK_FALSE(free3.hypotheses_ok());

  // non-quadratic input: the dual is unavailable, comparison stages skipped
  Quiver q4({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
  RelationElement cubic(q4, {{Path::of_arrows(q4, {"a", "b", "c"}), Rat(1)}});
  VerificationReport nq = verify_main_theorem(Presentation{q4, {cubic}}, 4);
  CHECK_FALSE(nq.pass());
  CHECK_FALSE(nq.hypotheses_ok());
  for (const auto& s : nq.stages)
    if (s.name == "complement equality") CHECK(s.skipped);

  // cyclic input fails the first stage without crashing
  Quiver cyc({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  VerificationReport cy = verify_main_theorem(Presentation{cyc, {}}, 4);
  CHECK_FALSE(cy.hypotheses_ok());
}

TEST_CASE("graded dimension comparison") {
  Presentation p = load_fixture("a3_rad2.json");
  GradedDimsComparison same = compare_graded_dims(p, p, 4);
  CHECK(same.equal);
  CHECK(same.first_mismatch == -1);

  GradedDimsComparison diff = compare_graded_dims(p, load_fixture("a3_free.json"), 4);
  CHECK_FALSE(diff.equal);
  CHECK(diff.first_mismatch == 2);

  CHECK_THROWS(compare_graded_dims(p, load_fixture("a2.json"), 3));
}

TEST_CASE("reports render deterministically") {
  Presentation p = load_fixture("beilinson.json");
  VerificationReport r1 = verify_main_theorem(p, 6);
  VerificationReport r2 = verify_main_theorem(p, 6);
  CHECK(r1.render_text() == r2.render_text());
  CHECK(report_to_json(r1) == report_to_json(r2));
}

TEST_CASE("the verdict does not depend on the declared arrow order") {
  for (const char* name : {"a3_rad2.json", "beilinson.json"}) {
    Presentation p = load_fixture(name);
    Presentation rev = reverse_arrow_order(p);
    VerificationReport a = verify_main_theorem(p, 6);
    VerificationReport b = verify_main_theorem(rev, 6);
    CHECK(a.identity_ok());
    CHECK(b.identity_ok());
    CHECK(a.pass() == b.pass());
    CHECK(a.hypotheses_ok() == b.hypotheses_ok());
    CHECK(a.n == b.n);
    CHECK(a.lambda_dims == b.lambda_dims);

    std::map<std::pair<std::string, std::string>, std::pair<Index, Index>> da, db;
    for (const auto& blk : a.blocks) da[{blk.source, blk.target}] = {blk.trivext_dim, blk.preproj_dim};
    for (const auto& blk : b.blocks) db[{blk.source, blk.target}] = {blk.trivext_dim, blk.preproj_dim};
    CHECK(da == db);
  }

  // where the top basis is order independent, the subspaces agree exactly
  Presentation p = load_fixture("a3_rad2.json");
  Presentation rev = reverse_arrow_order(p);
  auto relations_of = [](const Presentation& pres) {
    GradedBasis gb = graded_basis(pres, 2);
    ReturningArrowQuiver raq = returning_arrow_quiver(gb, 1);
    TrivExtAlgebra alg(gb, 1, TwistSpec::nu(1));
    return trivext_relations(raq, alg).relations;
  };
  CHECK(testutil::same_relation_span(relations_of(p), relations_of(rev)));
}
