#include <doctest.h>

#include "pathalg/quadratic_dual.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace pathalg;
using testutil::load_fixture;
using testutil::same_relation_span;

TEST_CASE("quadratic dual on the chain") {
  Presentation rad2 = load_fixture("a3_rad2.json");
  CHECK(quadratic_dual(rad2).relations.empty());  // the dual is the free path algebra

  Presentation free3 = load_fixture("a3_free.json");
  auto dual = quadratic_dual(free3);
  REQUIRE(dual.relations.size() == 1);
  CHECK(dual.relations[0].terms().size() == 1);
  CHECK(dual.relations[0].terms()[0].path.render() == "b*a");
}

TEST_CASE("quadratic dual of the degree-two fixture") {
  Presentation p = load_fixture("beilinson.json");
  auto dual = quadratic_dual(p);
  REQUIRE(dual.relations.size() == 1);
  const RelationElement& r = dual.relations[0];
  // the commuting-square relation, up to a scalar
  RelationElement expected(p.quiver, {{Path::of_arrows(p.quiver, {"a0", "b1"}), Rat(1)},
                                      {Path::of_arrows(p.quiver, {"b0", "a1"}), Rat(-1)}});
  CHECK(same_relation_span({r}, {expected}));
}

TEST_CASE("quadratic dual rejects higher relations") {
  Quiver q4({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}});
  RelationElement cubic(q4, {{Path::of_arrows(q4, {"a", "b", "c"}), Rat(1)}});
  CHECK_THROWS(quadratic_dual(Presentation{q4, {cubic}}));
}

TEST_CASE("pairing") {
  Presentation p = load_fixture("beilinson.json");
  const Quiver& q = p.quiver;
  Path b1a0 = Path::of_arrows(q, {"a0", "b1"});
  Path a1b0 = Path::of_arrows(q, {"b0", "a1"});
  Path a1a0 = Path::of_arrows(q, {"a0", "a1"});
  Path b1b0 = Path::of_arrows(q, {"b0", "b1"});

  CHECK(pairing(PathLinComb{{b1a0, Rat(1)}}, PathLinComb{{b1a0, Rat(1)}}) == Rat(1));
  CHECK(pairing(PathLinComb{{a1a0, Rat(1)}}, PathLinComb{{b1b0, Rat(1)}}) == Rat(0));
  CHECK(pairing(PathLinComb{{b1a0, Rat(1)}, {a1b0, Rat(-1)}},
                PathLinComb{{b1a0, Rat(1)}, {a1b0, Rat(1)}}) == Rat(0));

  Presentation chain = load_fixture("a3_free.json");
  Path ba = Path::of_arrows(chain.quiver, {"a", "b"});
  CHECK_THROWS(pairing(PathLinComb{{b1a0, Rat(1)}}, PathLinComb{{ba, Rat(1)}}));
}

TEST_CASE("dual dimensions complement the relation span") {
  for (const char* name : {"a3_rad2.json", "a3_free.json", "beilinson.json"}) {
    Presentation p = load_fixture(name);
    Presentation dual = quadratic_dual(p);
    GradedBasis gd = graded_basis(dual, 2);
    Index rel_span = 0;
    {
      GradedBasis gp = graded_basis(p, 2);
      rel_span = gp.ideal_dim(2);
    }
    CHECK(gd.dim(2) == rel_span);
  }
}

TEST_CASE("double dual gives back the relation span") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> nverts(2, 5);
  std::uniform_int_distribution<int> narrows(1, 2);

  for (int trial = 0; trial < 20; ++trial) {
    // random acyclic quiver on an ordered vertex set
    const int nv = nverts(rng);
    std::vector<std::string> vertices;
    for (int v = 1; v <= nv; ++v) vertices.push_back(std::to_string(v));
    std::vector<Arrow> arrows;
    for (int i = 1; i <= nv; ++i)
      for (int j = i + 1; j <= nv; ++j) {
        int k = narrows(rng) - 1;  // 0 or 1 parallel arrows, occasionally 2
        if (coeff(rng) > 0) ++k;
        for (int c = 0; c < std::min(k, 2); ++c)
          arrows.push_back({"x" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                std::to_string(c),
                            std::to_string(i), std::to_string(j)});
      }
    Quiver q(vertices, arrows);

    // random quadratic relations
    std::vector<RelationElement> relations;
    for (const std::string& i : vertices) {
      for (const std::string& j : vertices) {
        auto paths = paths_of_length(q, 2, i, j);
        if (paths.empty()) continue;
        for (int r = 0; r < 2; ++r) {
          PathLinComb terms;
          for (const Path& path : paths) {
            int c = coeff(rng);
            if (c != 0) terms.push_back({path, Rat(c)});
          }
          if (!terms.empty()) relations.emplace_back(q, terms);
        }
      }
    }
    Presentation p{q, relations};
    Presentation dd = quadratic_dual(quadratic_dual(p));
    CHECK(same_relation_span(p.relations, dd.relations));
  }
}

TEST_CASE("koszul witness agrees across the duality on the fixtures") {
  for (const char* name : {"a3_rad2.json", "beilinson.json", "square.json", "cube.json"}) {
    Presentation p = load_fixture(name);
    CHECK(koszul_witness(p, 6).pass == koszul_witness(quadratic_dual(p), 6).pass);
  }
}
