// Higher preprojective presentations of dual algebras: structure
// coefficients of top-degree products, the closed-form relation family
// indexed by the subtop basis, and an independent derivation of the same
// family through the Koszul bimodule complex of the dual.

#pragma once

#include "pathalg/graded.hpp"
#include "pathalg/trivial_extension.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pathalg {

/// Expansion coefficients of arrow * q and q * arrow over the top basis M_n,
/// for every arrow and every q in M_{n-1}.
struct StructureCoefficients {
  int n = 0;
  std::vector<std::vector<RowVec>> left;   // left[arrow][q]: row over flat M_n
  std::vector<std::vector<RowVec>> right;  // right[q][arrow]: row over flat M_n
};

StructureCoefficients structure_coefficients(const GradedBasis& gb, int n);

/// The relation attached to q in M_{n-1}: coefficients of arrow products
/// through the top degree, rendered on the returning-arrow quiver. Empty
/// result marks a degenerate q (no composable arrow on either side).
PathLinComb zeta(const GradedBasis& gb, const ReturningArrowQuiver& raq,
                 const StructureCoefficients& sc, Index q_index);

struct PreprojPresentation {
  Presentation presentation;  // on the returning-arrow quiver
  std::vector<RelationElement> dual_relations;  // the relations of the dual algebra
  std::vector<RelationElement> zeta_relations;  // one per element of M_{n-1}
};

/// Presentation of the (n+1)-preprojective algebra of the quadratic dual:
/// the dual's relations together with the zeta family. Verifies linear
/// independence and the dimension count of the family.
PreprojPresentation preproj_presentation(const Presentation& gamma, const GradedBasis& gb_lambda,
                                         int n, const ReturningArrowQuiver& raq);

/// One differential of the bimodule complex in generator coordinates:
/// the image of a middle-slot generator m is
///   sum left[(arrow, m')] arrow x m' x 1  +  sum right[(m', arrow)] 1 x m' x arrow,
/// with the alternating sign folded into the right coefficients.
struct BimoduleMapRow {
  std::map<std::pair<int, Index>, Rat> left;
  std::map<std::pair<Index, int>, Rat> right;
};

struct KoszulBimoduleComplex {
  int n = 0;
  // maps[t][m]: differential on the degree-t generator m, for t = 1..n.
  std::vector<std::vector<BimoduleMapRow>> maps;
  // joint-intersection subspaces per degree and block, kept for verification
  std::vector<std::map<std::pair<int, int>, Subspace>> kspaces;
};

/// Builds the complex of the dual algebra: middle-slot subspaces from the
/// dual relation span, lifted generators, and the differentials.
KoszulBimoduleComplex koszul_complex_maps(const GradedBasis& gb_lambda,
                                          const GradedBasis& gb_gamma, int n);

/// Checks f_{t-1} o f_t = 0 for all t, expanding coefficients in the dual.
bool complex_composites_vanish(const KoszulBimoduleComplex& cx, const GradedBasis& gb_lambda,
                               const GradedBasis& gb_gamma);

/// Independent oracle for zeta: evaluates the dualized differential on the
/// generator of the subtop slot and projects to the generator block.
PathLinComb fstar_oracle(const KoszulBimoduleComplex& cx, const GradedBasis& gb_lambda,
                         const ReturningArrowQuiver& raq, Index q_index);

}  // namespace pathalg
