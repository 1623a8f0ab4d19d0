#include <doctest.h>

#include "pathalg/linalg.hpp"

#include <random>

using namespace pathalg;

namespace {

Mat make(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rat(v);
    ++i;
  }
  return m;
}

Mat random_matrix(std::mt19937& rng, Index rows, Index cols) {
  std::uniform_int_distribution<int> dist(-4, 4);
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rat(dist(rng));
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  Mat id = Mat::Identity(2, 2);
  RrefResult r = rref(id);
  CHECK(r.mat == id);
  CHECK(r.pivots == std::vector<Index>{0, 1});

  RrefResult r2 = rref(make({{2, 4}, {1, 2}}));
  CHECK(r2.mat == make({{1, 2}, {0, 0}}));
  CHECK(r2.pivots == std::vector<Index>{0});
}

TEST_CASE("rref preserves the row space") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = random_matrix(rng, 5, 7);
    RrefResult r = rref(a);
    // mutual containment, each checked by solving a linear system
    for (Index i = 0; i < a.rows(); ++i)
      CHECK(solve(r.mat.transpose(), Vec(a.row(i).transpose())).has_value());
    for (Index i = 0; i < r.mat.rows(); ++i)
      CHECK(solve(a.transpose(), Vec(r.mat.row(i).transpose())).has_value());
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(Mat::Identity(3, 3)).dim() == 0);
  CHECK(kernel(Mat::Zero(2, 3)).dim() == 3);

  Subspace k = kernel(make({{1, 1}}));
  CHECK(k.dim() == 1);
  RowVec v(2);
  v << Rat(1), Rat(-1);
  CHECK(k.contains(v));
}

TEST_CASE("rank plus nullity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    Mat m = random_matrix(rng, 4, 6);
    CHECK(rank(m) + kernel(m).dim() == m.cols());
  }
}

TEST_CASE("orthogonal complement") {
  Subspace s = Subspace::from_rows(2, make({{1, 1}}));
  Subspace c = orthogonal_complement(s);
  CHECK(c.dim() == 1);
  RowVec v(2);
  v << Rat(1), Rat(-1);
  CHECK(c.contains(v));

  CHECK(orthogonal_complement(Subspace(4)) == Subspace::full(4));

  // the 4-dim degree-two block: complement of three relations is a line
  Mat rel = make({{0, 1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
  Subspace comp = orthogonal_complement(Subspace::from_rows(4, rel));
  CHECK(comp.dim() == 1);
  RowVec w(4);
  w << Rat(0), Rat(1), Rat(-1), Rat(0);
  CHECK(comp.contains(w));
}

TEST_CASE("complement is an involution and dims add up") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    Mat m = random_matrix(rng, 3, 6);
    Subspace s = Subspace::from_rows(6, m);
    Subspace c = orthogonal_complement(s);
    CHECK(s.dim() + c.dim() == 6);
    CHECK(orthogonal_complement(c) == s);
  }
}

TEST_CASE("subspace operations") {
  Subspace e1 = Subspace::from_rows(2, make({{1, 0}}));
  Subspace e2 = Subspace::from_rows(2, make({{0, 1}}));
  CHECK(subspace_equal(e1, e1));
  CHECK(subspace_sum(e1, e2).dim() == 2);

  Subspace a = Subspace::from_rows(2, make({{1, 1}, {0, 1}}));
  CHECK(subspace_intersect(a, e1) == e1);

  CHECK_THROWS(subspace_sum(e1, Subspace::from_rows(3, make({{1, 0, 0}}))));
}

TEST_CASE("subspaces are independent of row order") {
  Mat m1 = make({{1, 2, 3}, {0, 1, 1}, {2, 5, 7}});
  Mat m2 = make({{2, 5, 7}, {1, 2, 3}, {0, 1, 1}});
  CHECK(Subspace::from_rows(3, m1) == Subspace::from_rows(3, m2));
}

TEST_CASE("transition matrices and dual bases") {
  Mat id = Mat::Identity(2, 2);
  TransitionPair tp = transition_and_dual(id, id);
  CHECK(tp.p == id);
  CHECK(tp.t == id);

  Mat b = make({{1, 1}, {0, 1}});
  TransitionPair tp2 = transition_and_dual(id, b);
  CHECK(Mat(*inverse(tp2.t)) == Mat(tp2.p.transpose()));

  std::mt19937 rng(17);
  int done = 0;
  while (done < 20) {
    Mat a = random_matrix(rng, 4, 4);
    Mat c = random_matrix(rng, 4, 4);
    if (!inverse(a) || !inverse(c)) continue;
    TransitionPair t = transition_and_dual(a, c);
    CHECK(Mat(*inverse(t.t)) == Mat(t.p.transpose()));
    ++done;
  }

  CHECK_THROWS_WITH_AS(transition_and_dual(make({{1, 1}, {1, 1}}), id), "not a basis",
                       std::invalid_argument);
}
