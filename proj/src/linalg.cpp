#include "pathalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathalg {

RrefResult rref(const Mat& m, const std::vector<Index>& col_order) {
  Mat a = m;
  const Index rows = a.rows();
  const Index cols = a.cols();

  std::vector<Index> order;
  if (col_order.empty()) {
    order.resize(static_cast<std::size_t>(cols));
    for (Index j = 0; j < cols; ++j) order[static_cast<std::size_t>(j)] = j;
  } else {
    if (static_cast<Index>(col_order.size()) != cols)
      throw std::invalid_argument("column order size mismatch");
    order = col_order;
  }

  std::vector<Index> pivots;
  Index r = 0;
  for (Index k = 0; k < cols && r < rows; ++k) {
    const Index c = order[static_cast<std::size_t>(k)];
    Index sel = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) a.row(sel).swap(a.row(r));
    const Rat inv = Rat(1) / a(r, c);
    a.row(r) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      a.row(i) -= a(i, c) * a.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

Index rank(const Mat& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Index n = m.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat::Identity(n, n);
  RrefResult r = rref(aug);
  if (static_cast<Index>(r.pivots.size()) != n) return std::nullopt;
  for (Index i = 0; i < n; ++i)
    if (r.pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
  return Mat(r.mat.rightCols(n));
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  RrefResult r = rref(aug);
  Vec x = Vec::Zero(cols);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == cols) return std::nullopt;  // inconsistent system
    x(r.pivots[k]) = r.mat(static_cast<Index>(k), cols);
  }
  return x;
}

Subspace::Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::from_rows(Index ambient_dim, const Mat& rows) {
  if (rows.size() > 0 && rows.cols() != ambient_dim)
    throw std::invalid_argument("subspace rows do not match ambient dimension");
  Subspace s(ambient_dim);
  if (rows.rows() == 0) return s;
  RrefResult r = rref(rows);
  const Index d = static_cast<Index>(r.pivots.size());
  s.basis_ = r.mat.topRows(d);
  return s;
}

Subspace Subspace::full(Index ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Mat::Identity(ambient_dim, ambient_dim);
  return s;
}

bool Subspace::contains(const RowVec& v) const {
  if (v.cols() != ambient_) throw std::invalid_argument("ambient mismatch");
  RowVec w = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    Index p = -1;
    for (Index j = 0; j < ambient_; ++j) {
      if (basis_(i, j) != 0) {
        p = j;
        break;
      }
    }
    if (p >= 0 && w(p) != 0) w -= w(p) * basis_.row(i);
  }
  for (Index j = 0; j < ambient_; ++j)
    if (w(j) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient_) throw std::invalid_argument("ambient mismatch");
  for (Index i = 0; i < other.basis_.rows(); ++i)
    if (!contains(RowVec(other.basis_.row(i)))) return false;
  return true;
}

Subspace kernel(const Mat& m) {
  const Index cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  const Index nullity = cols - static_cast<Index>(r.pivots.size());
  Mat basis(nullity, cols);
  basis.setZero();
  Index row = 0;
  for (Index j = 0; j < cols; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    basis(row, j) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      basis(row, r.pivots[k]) = -r.mat(static_cast<Index>(k), j);
    ++row;
  }
  return Subspace::from_rows(cols, basis);
}

Subspace orthogonal_complement(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient());
  return kernel(s.basis());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  Mat rows(a.dim() + b.dim(), a.ambient());
  rows.topRows(a.dim()) = a.basis();
  rows.bottomRows(b.dim()) = b.basis();
  return Subspace::from_rows(a.ambient(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  const Index n = a.ambient();
  const Index ka = a.dim();
  const Index kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace(n);

  // x = u*a.basis = v*b.basis; solve the stacked system for (u, v).
  Mat sys(n, ka + kb);
  sys.leftCols(ka) = a.basis().transpose();
  sys.rightCols(kb) = -b.basis().transpose();
  Subspace uv = kernel(sys);

  Mat rows(uv.dim(), n);
  for (Index i = 0; i < uv.dim(); ++i)
    rows.row(i) = uv.basis().row(i).head(ka) * a.basis();
  return Subspace::from_rows(n, rows);
}

TransitionPair transition_and_dual(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("not a basis");
  auto ainv = inverse(a);
  auto binv = inverse(b);
  if (!ainv || !binv) throw std::invalid_argument("not a basis");

  TransitionPair out;
  out.p = a * (*binv);
  // Dual bases are the rows of the inverse-transposes; T is their transition.
  Mat dual_a = ainv->transpose();
  Mat dual_b = binv->transpose();
  auto dual_b_inv = inverse(dual_b);
  if (!dual_b_inv) throw std::invalid_argument("not a basis");
  out.t = dual_a * (*dual_b_inv);
  return out;
}

}  // namespace pathalg
