// Exact linear algebra over the rationals: reduced row echelon form,
// kernels, orthogonal complements and canonical subspaces.
//
// Subspaces are always stored as the reduced row echelon form of a
// spanning set, so equality of subspaces is equality of representations.

#pragma once

#include "pathalg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pathalg {

struct RrefResult {
  Mat mat;
  std::vector<Index> pivots;
};

/// Reduced row echelon form with exact arithmetic; the row space is preserved.
/// Column `col_order[k]` is treated as the k-th column during pivoting; pass an
/// empty order for the natural one. Reported pivots are original column indices.
RrefResult rref(const Mat& m, const std::vector<Index>& col_order = {});

Index rank(const Mat& m);

/// Gauss-Jordan inverse; empty when the matrix is singular or non-square.
std::optional<Mat> inverse(const Mat& m);

/// One solution of a*x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);

class Subspace {
 public:
  /// The zero subspace of the given ambient dimension.
  explicit Subspace(Index ambient_dim = 0);

  /// The row space of `rows` inside k^ambient, canonicalized.
  static Subspace from_rows(Index ambient_dim, const Mat& rows);

  static Subspace full(Index ambient_dim);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }

  /// Canonical basis: rref rows, pivot columns strictly increasing.
  const Mat& basis() const { return basis_; }

  bool contains(const RowVec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.basis_.rows() != b.basis_.rows()) return false;
    for (Index i = 0; i < a.basis_.rows(); ++i)
      for (Index j = 0; j < a.ambient_; ++j)
        if (a.basis_(i, j) != b.basis_(i, j)) return false;
    return true;
  }

 private:
  Index ambient_ = 0;
  Mat basis_;  // dim x ambient, rref, no zero rows
};

/// Right null space of m: all v with m*v = 0, as a subspace of k^cols.
Subspace kernel(const Mat& m);

/// Orthogonal complement with respect to the standard coordinate pairing.
Subspace orthogonal_complement(const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Intersection via the kernel of the stacked system.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

inline bool subspace_equal(const Subspace& a, const Subspace& b) { return a == b; }

struct TransitionPair {
  Mat p;  // transition matrix between the bases
  Mat t;  // transition matrix between the dual bases
};

/// For two bases given as the rows of a and b, returns the transition matrix P
/// with a = P*b together with the transition matrix T of the corresponding dual
/// bases, computed from explicitly constructed dual bases. T^{-1} = P^t holds.
/// Throws std::invalid_argument("not a basis") on singular input.
TransitionPair transition_and_dual(const Mat& a, const Mat& b);

}  // namespace pathalg
