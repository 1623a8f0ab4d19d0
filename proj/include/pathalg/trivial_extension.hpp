// Twisted trivial extensions: the algebra on Lambda + D(Lambda) with a
// square-zero dual part, its returning-arrow quiver, the evaluation map
// from the extended path algebra, and the quadratic relation set.

#pragma once

#include "pathalg/graded.hpp"
#include "pathalg/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace pathalg {

/// Q with one extra arrow t(p) -> s(p) per top-degree basis path p.
struct ReturningArrowQuiver {
  Quiver quiver;
  std::vector<std::pair<std::string, Path>> returning;  // arrow name -> p, in M_n order
  std::map<std::string, std::size_t> returning_index;

  bool is_returning(const std::string& arrow_name) const {
    return returning_index.count(arrow_name) > 0;
  }
  const Path& maximal_path(const std::string& arrow_name) const {
    return returning[returning_index.at(arrow_name)].second;
  }
};

std::string returning_arrow_name(const Path& p);

/// Requires homogeneity degree n; throws otherwise.
ReturningArrowQuiver returning_arrow_quiver(const GradedBasis& gb, int n);

/// Diagonal unit twist: identity, or multiplication by (-1)^n on every arrow.
struct TwistSpec {
  enum class Kind { identity, nu };
  Kind kind = Kind::identity;
  int n = 0;

  static TwistSpec identity() { return {}; }
  static TwistSpec nu(int n) { return {Kind::nu, n}; }

  /// Scalar applied to one original arrow.
  Rat arrow_factor() const {
    if (kind == Kind::identity) return 1;
    return (n % 2 == 0) ? Rat(1) : Rat(-1);
  }
  /// Scalar applied to a path of the given length.
  Rat path_factor(int length) const {
    Rat f = arrow_factor();
    return (f == 1 || length % 2 == 0) ? Rat(1) : Rat(-1);
  }
};

/// Structure constants of Lambda + D(Lambda) with the right action twisted.
/// Elements are sparse combinations of the basis M_t and its dual.
class TrivExtAlgebra {
 public:
  struct Key {
    bool dual;   // false: basis path of Lambda_deg; true: dual basis of Lambda_deg
    int deg;     // Lambda-degree of the underlying basis path
    Index idx;   // position in the flat basis of that degree
    auto operator<=>(const Key&) const = default;
  };
  using Element = std::map<Key, Rat>;

  TrivExtAlgebra(GradedBasis gb, int n, TwistSpec twist);

  const GradedBasis& graded() const { return gb_; }
  int top_degree() const { return n_; }
  const TwistSpec& twist() const { return twist_; }

  Index dimension() const;  // = 2 * dim Lambda

  /// Degree in the extension grading: Lambda_t in degree t, D(Lambda_s) in n+1-s.
  int tilde_degree(const Key& k) const { return k.dual ? n_ + 1 - k.deg : k.deg; }

  Element lambda_unit(int t, Index idx) const;
  Element dual_unit(int s, Index idx) const;

  Element multiply(const Element& x, const Element& y) const;

 private:
  Element basis_product(const Key& a, const Key& b) const;

  GradedBasis gb_;
  int n_ = 0;
  TwistSpec twist_;
  std::map<std::pair<Key, Key>, Element> table_;
};

inline TrivExtAlgebra::Element trivext_multiply(const TrivExtAlgebra& alg,
                                                const TrivExtAlgebra::Element& x,
                                                const TrivExtAlgebra::Element& y) {
  return alg.multiply(x, y);
}

/// Image of a path of the extended quiver under the evaluation epimorphism:
/// original arrows map to themselves, returning arrows to dual basis vectors.
TrivExtAlgebra::Element mu_sigma(const ReturningArrowQuiver& raq, const TrivExtAlgebra& alg,
                                 const Path& path);

/// The quadratic relation candidates: the original relations, all composable
/// returning-arrow pairs, and a canonical basis of the kernel of the
/// evaluation map on the mixed block.
Presentation trivext_relations(const ReturningArrowQuiver& raq, const TrivExtAlgebra& alg);

/// The mixed-block part of trivext_relations alone.
std::vector<RelationElement> trivext_mixed_relations(const ReturningArrowQuiver& raq,
                                                     const TrivExtAlgebra& alg);

struct TrivExtQuadraticity {
  bool quadratic = false;
  std::vector<Index> cover_dims;     // graded dims of the quadratic cover
  std::vector<Index> expected_dims;  // dims of the twisted trivial extension
  std::string detail;
};

/// Compares the quadratic cover of the relation candidates against the
/// dimensions of the extension, through degree guard (>= n+2).
TrivExtQuadraticity is_trivext_quadratic(const ReturningArrowQuiver& raq,
                                         const TrivExtAlgebra& alg, int guard = -1);

}  // namespace pathalg
