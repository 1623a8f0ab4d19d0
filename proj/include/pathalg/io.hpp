// Quiver document format and report serialization.
//
// A quiver document is a JSON object with "vertices", "arrows" ({name, from,
// to}), "relations" (lists of {coeff, path}) and an optional "n" hint.
// Relation paths are written in traversal order: the first listed arrow is
// applied first. Coefficients are rationals serialized as strings.

#pragma once

#include "pathalg/graded.hpp"
#include "pathalg/theorem.hpp"

#include <optional>
#include <string>

namespace pathalg {

struct QuiverDocument {
  Presentation presentation;
  std::optional<int> n_hint;
};

/// Parses a quiver document; errors carry the offending location.
QuiverDocument parse_document(const std::string& text);

/// Canonical serialization: fixed key order, two-space indentation, one
/// trailing newline. parse(serialize(x)) round-trips byte-identically.
std::string serialize_document(const Presentation& p, std::optional<int> n_hint = std::nullopt);

/// Machine-readable verification report; carries every dimension table the
/// text rendering shows.
std::string report_to_json(const VerificationReport& report);

}  // namespace pathalg
