// Finite quivers and their paths.
//
// A path stores its arrows in traversal order (first applied first) and is
// rendered right to left, so the printed form "b*a" is the composite
// "apply a, then b". Parallel arrows and loops are permitted.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathalg {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(const std::string& v) const;
  int vertex_index(const std::string& v) const;  // throws on unknown vertex
  std::optional<int> arrow_index(const std::string& name) const;
  const Arrow& arrow(const std::string& name) const;

  std::vector<int> arrows_from(const std::string& v) const;
  std::vector<int> arrows_into(const std::string& v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

class Path {
 public:
  /// Trivial path e_v.
  static Path trivial(const std::string& v);

  /// Path from arrow names in traversal order; validates composability.
  static Path of_arrows(const Quiver& q, const std::vector<std::string>& names);

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  const std::vector<std::string>& arrows() const { return arrows_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  bool is_trivial() const { return arrows_.empty(); }

  /// Right-to-left rendering matching algebraic composition order, e.g. "b*a".
  std::string render() const;

  friend bool operator==(const Path& a, const Path& b) = default;
  friend auto operator<=>(const Path& a, const Path& b) = default;
  friend Path compose(const Path& first, const Path& second);

 private:
  std::string source_;
  std::string target_;
  std::vector<std::string> arrows_;
};

/// The composite "first, then second"; requires first.target == second.source.
Path compose(const Path& first, const Path& second);

/// All length-t paths from i to j, ordered lexicographically by rendered form
/// in the declared arrow order (last applied arrow most significant).
std::vector<Path> paths_of_length(const Quiver& q, int t, const std::string& i,
                                  const std::string& j);

bool is_acyclic(const Quiver& q);

/// Length of the longest path; only meaningful for acyclic quivers.
int longest_path_length(const Quiver& q);

/// Same vertices, every arrow reversed. Arrow names keep their original
/// names by default; a suffix can be appended to each.
Quiver opposite_quiver(const Quiver& q, const std::string& name_suffix = "");

/// Counts arrows i -> j, as a matrix indexed by vertex order.
std::vector<std::vector<long>> adjacency_matrix(const Quiver& q);

}  // namespace pathalg
