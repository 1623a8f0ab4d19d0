// Quadratic duals: orthogonal complements of the relation span in each
// (source, target) block of the degree-two path space, with arrows
// identified with their dual basis.

#pragma once

#include "pathalg/graded.hpp"

namespace pathalg {

/// The quadratic dual presentation: same quiver, relations spanning the
/// orthogonal complement of the relation span blockwise in kQ_2.
/// Throws on non-quadratic input.
Presentation quadratic_dual(const Presentation& p);

/// Coordinate pairing of two combinations of parallel length-2 paths.
/// Throws "block mismatch" unless both live in one (source, target) block.
Rat pairing(const PathLinComb& x, const PathLinComb& y);

Rat pairing(const RelationElement& x, const RelationElement& y);

}  // namespace pathalg
