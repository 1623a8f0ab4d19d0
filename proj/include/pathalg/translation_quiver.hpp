// Finite windows of the level-indexed cover quiver: level-preserving copies
// of the base arrows, level-raising returning arrows, relations instantiated
// at every level, complete slice extraction and the slice characterizations.

#pragma once

#include "pathalg/graded.hpp"
#include "pathalg/trivial_extension.hpp"

#include <map>
#include <optional>
#include <string>

namespace pathalg {

std::string window_vertex_name(const std::string& base_vertex, int level);
std::string window_arrow_name(const std::string& base_arrow, int level);

struct WindowQuiver {
  Presentation base;
  int n = 0;
  int from = 0;
  int to = 0;
  Presentation window;  // quiver on (vertex, level) pairs with instantiated relations
  std::vector<Path> top_basis;  // M_n of the base, indexing the returning arrows

  /// The translation: (i, t) -> (i, t-1); empty at the lower boundary.
  std::optional<std::string> tau(const std::string& window_vertex) const;
};

/// Builds the window over levels [from, to]. Requires an acyclic
/// n-homogeneous base; relations are instantiated with the untwisted
/// mixed-block kernel and dropped when any endpoint leaves the window.
WindowQuiver znq_window(const Presentation& p, int from, int to);

/// One chosen level per base vertex.
struct SliceSpec {
  std::map<std::string, int> levels;
};

/// One vertex per translation orbit, strictly inside the window, and
/// path-convex: every directed path of the window between two slice
/// vertices stays in the slice. Throws "window too small" when a chosen
/// vertex touches the window boundary.
bool is_complete_tau_slice(const WindowQuiver& w, const SliceSpec& s);

/// Full subquiver on the slice vertices with the induced relations.
/// Requires is_complete_tau_slice.
Presentation slice_presentation(const WindowQuiver& w, const SliceSpec& s);

struct CharacterizationReport {
  std::optional<int> n;
  bool tau_slice = false;           // acyclic + n-homogeneous
  bool trivext_quadratic = false;   // untwisted extension
  std::optional<KoszulWitness> koszul;
  std::string detail;
};

/// Runs the slice-algebra characterizations on an acyclic presentation.
CharacterizationReport characterize(const Presentation& p, int depth);

}  // namespace pathalg
