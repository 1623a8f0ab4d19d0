// Graded quotients of path algebras: bound quivers, degreewise monomial
// bases, expansion of paths over the chosen basis, maximal bound paths,
// n-homogeneity, minimal graded resolutions of simples and a bounded
// Koszulity witness.

#pragma once

#include "pathalg/linalg.hpp"
#include "pathalg/quiver.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pathalg {

struct PathTerm {
  Path path;
  Rat coeff;
};

using PathLinComb = std::vector<PathTerm>;

/// A homogeneous relation: a linear combination of parallel paths of one
/// length >= 2, with canonically ordered terms and no zero coefficients.
class RelationElement {
 public:
  RelationElement(const Quiver& q, PathLinComb terms);

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  int length() const { return length_; }
  const PathLinComb& terms() const { return terms_; }

  std::string render() const;

  friend bool operator==(const RelationElement& a, const RelationElement& b);

 private:
  std::string source_;
  std::string target_;
  int length_ = 0;
  PathLinComb terms_;
};

struct Presentation {
  Quiver quiver;
  std::vector<RelationElement> relations;

  bool is_quadratic() const;
};

/// Splits arbitrary combinations of paths of length >= 2 into homogeneous
/// relations, one per (source, target, length) group. Throws "not admissible"
/// when a term of length < 2 appears.
std::vector<RelationElement> normalize_relations(const Quiver& q,
                                                 const std::vector<PathLinComb>& raw);

Presentation normalize_relations(const Presentation& p);

/// One (source, target) block of kQ_t together with the degree-t piece of the
/// relation ideal and the chosen monomial basis of the quotient.
struct DegreeBlock {
  std::vector<Path> paths;           // canonical path order
  std::map<Path, Index> path_index;
  Subspace ideal;                    // subspace of the coordinate space of `paths`
  std::vector<Index> basis_local;    // columns of M_t inside this block
  Mat expansion;                     // paths x basis_local: quotient coordinates
  Index flat_offset = 0;             // offset of this block inside the flat M_t list
};

class GradedBasis {
 public:
  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }

  Index dim(int t) const;
  std::vector<Index> dims() const;

  /// The flat monomial basis M_t across all blocks.
  const std::vector<Path>& basis(int t) const;

  const DegreeBlock* block(int t, const std::string& source, const std::string& target) const;

  /// Coordinates of a length-t path over M_t (zero row when the path is not bound).
  RowVec expand_path(const Path& p) const;

  /// Coordinates of a homogeneous combination of length-t paths over the flat M_t.
  RowVec expand(int t, const PathLinComb& x) const;

  bool is_bound(const Path& p) const;

  Index ideal_dim(int t) const;

  /// Position of a basis path inside the flat M_t list.
  std::optional<Index> basis_index(int t, const Path& p) const;

 private:
  friend GradedBasis graded_basis(const Presentation& p, int max_degree);

  Presentation pres_;
  struct Degree {
    std::map<std::pair<int, int>, DegreeBlock> blocks;
    std::vector<Path> flat_basis;
    Index ideal_dim = 0;
  };
  std::vector<Degree> degrees_;
};

/// Computes the ideal and quotient basis degree by degree up to max_degree.
GradedBasis graded_basis(const Presentation& p, int max_degree);

/// Bound basis paths with no nonzero one-arrow extension on either side.
std::vector<std::pair<Path, int>> maximal_bound_paths(const GradedBasis& gb);

/// n when every maximal bound path has length n; empty otherwise.
/// Requires the basis computed beyond the top nonzero degree.
std::optional<int> homogeneity_degree(const GradedBasis& gb);

/// M_n for an n-homogeneous algebra; throws when the degree check fails.
std::vector<Path> top_degree_basis(const GradedBasis& gb, int n);

struct FreeGenerator {
  int vertex;  // vertex index in the quiver
  int degree;  // internal degree
};

struct ResolutionStage {
  std::vector<FreeGenerator> generators;
};

struct GradedResolution {
  std::vector<ResolutionStage> stages;
  bool composites_vanish = true;  // d^2 = 0, verified at every computed stage

  /// Per homological degree: internal degree -> number of generators.
  std::vector<std::map<int, int>> degree_multiplicities() const;
};

/// Minimal graded projective resolution of the simple at `vertex`, to the
/// given homological depth, by exact syzygy computation.
GradedResolution minimal_resolution_of_simple(const Presentation& p, const std::string& vertex,
                                              int depth);

struct KoszulWitness {
  bool pass = false;
  int depth = 0;
  std::string detail;  // first failure, or "certified to depth d"
};

/// Linear-resolution certificate for all simples, to bounded depth.
/// Requires a quadratic presentation.
KoszulWitness koszul_witness(const Presentation& p, int depth);

/// Default witness depth for an n-homogeneous algebra.
inline int default_witness_depth(int n) { return std::max(2 * (n + 1), 6); }

}  // namespace pathalg
