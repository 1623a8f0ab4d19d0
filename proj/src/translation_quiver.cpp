#include "pathalg/translation_quiver.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace pathalg {

std::string window_vertex_name(const std::string& base_vertex, int level) {
  return "(" + base_vertex + "," + std::to_string(level) + ")";
}

std::string window_arrow_name(const std::string& base_arrow, int level) {
  return "(" + base_arrow + "," + std::to_string(level) + ")";
}

std::optional<std::string> WindowQuiver::tau(const std::string& window_vertex) const {
  for (const std::string& v : base.quiver.vertices()) {
    for (int t = from; t <= to; ++t) {
      if (window_vertex_name(v, t) != window_vertex) continue;
      if (t - 1 < from) return std::nullopt;
      return window_vertex_name(v, t - 1);
    }
  }
  throw std::invalid_argument("unknown vertex: " + window_vertex);
}

WindowQuiver znq_window(const Presentation& p, int from, int to) {
  if (from > to) throw std::invalid_argument("empty window");
  if (!is_acyclic(p.quiver)) throw std::invalid_argument("window requires an acyclic base");

  GradedBasis gb = graded_basis(p, longest_path_length(p.quiver) + 1);
  auto n = homogeneity_degree(gb);
  if (!n || *n < 1) throw std::invalid_argument("window requires an n-homogeneous base");

  ReturningArrowQuiver raq = returning_arrow_quiver(gb, *n);
  TrivExtAlgebra alg(gb, *n, TwistSpec::identity());
  std::vector<RelationElement> mixed = trivext_mixed_relations(raq, alg);

  WindowQuiver out;
  out.base = p;
  out.n = *n;
  out.from = from;
  out.to = to;
  out.top_basis = gb.basis(*n);

  std::vector<std::string> vertices;
  for (int t = from; t <= to; ++t)
    for (const std::string& v : p.quiver.vertices()) vertices.push_back(window_vertex_name(v, t));

  std::vector<Arrow> arrows;
  for (int t = from; t <= to; ++t)
    for (const Arrow& a : p.quiver.arrows())
      arrows.push_back({window_arrow_name(a.name, t), window_vertex_name(a.source, t),
                        window_vertex_name(a.target, t)});
  for (int t = from; t < to; ++t)
    for (const auto& [name, path] : raq.returning)
      arrows.push_back({window_arrow_name(name, t), window_vertex_name(path.target(), t),
                        window_vertex_name(path.source(), t + 1)});

  Quiver wq(vertices, arrows);

  // A path of the extended quiver instantiated at base level t: original
  // arrows keep the running level, returning arrows raise it by one.
  auto instantiate = [&](const Path& path, int t) -> Path {
    std::vector<std::string> names;
    int level = t;
    for (const std::string& a : path.arrows()) {
      names.push_back(window_arrow_name(a, level));
      if (raq.is_returning(a)) ++level;
    }
    return Path::of_arrows(wq, names);
  };

  std::vector<RelationElement> relations;
  for (const RelationElement& r : p.relations) {
    for (int t = from; t <= to; ++t) {
      PathLinComb terms;
      for (const auto& term : r.terms()) terms.push_back({instantiate(term.path, t), term.coeff});
      relations.emplace_back(wq, std::move(terms));
    }
  }
  for (const auto& [name_p, pp] : raq.returning) {
    for (const auto& [name_p2, pp2] : raq.returning) {
      if (pp.target() != pp2.source()) continue;
      Path pair = compose(Path::of_arrows(raq.quiver, {name_p2}),
                          Path::of_arrows(raq.quiver, {name_p}));
      for (int t = from; t + 2 <= to; ++t)
        relations.emplace_back(wq, PathLinComb{{instantiate(pair, t), Rat(1)}});
    }
  }
  for (const RelationElement& r : mixed) {
    for (int t = from; t + 1 <= to; ++t) {
      PathLinComb terms;
      for (const auto& term : r.terms()) terms.push_back({instantiate(term.path, t), term.coeff});
      relations.emplace_back(wq, std::move(terms));
    }
  }

  out.window = Presentation{std::move(wq), std::move(relations)};
  return out;
}

namespace {

std::set<std::string> slice_vertices(const WindowQuiver& w, const SliceSpec& s) {
  std::set<std::string> out;
  for (const std::string& v : w.base.quiver.vertices()) {
    auto it = s.levels.find(v);
    if (it == s.levels.end())
      throw std::invalid_argument("slice level missing for vertex " + v);
    if (it->second <= w.from || it->second >= w.to)
      throw std::invalid_argument("window too small");
    out.insert(window_vertex_name(v, it->second));
  }
  for (const auto& [v, level] : s.levels)
    w.base.quiver.vertex_index(v);  // reject unknown base vertices
  return out;
}

}  // namespace

bool is_complete_tau_slice(const WindowQuiver& w, const SliceSpec& s) {
  const std::set<std::string> slice = slice_vertices(w, s);
  const Quiver& q = w.window.quiver;

  // Path convexity: from each slice vertex, walk forward; reaching a slice
  // vertex after any off-slice intermediate is a violation. The window is
  // acyclic, so the walk terminates.
  std::function<bool(const std::string&, bool)> ok = [&](const std::string& v, bool left) {
    for (int ai : q.arrows_from(v)) {
      const Arrow& a = q.arrows()[static_cast<std::size_t>(ai)];
      const bool to_slice = slice.count(a.target) > 0;
      if (to_slice && left) return false;
      if (!ok(a.target, left || !to_slice)) return false;
    }
    return true;
  };
  for (const std::string& v : slice)
    if (!ok(v, false)) return false;
  return true;
}

Presentation slice_presentation(const WindowQuiver& w, const SliceSpec& s) {
  if (!is_complete_tau_slice(w, s))
    throw std::invalid_argument("not a complete tau-slice");
  const std::set<std::string> slice = slice_vertices(w, s);

  // Keep the base vertex order for the induced quiver.
  std::vector<std::string> vertices;
  for (const std::string& v : w.base.quiver.vertices())
    vertices.push_back(window_vertex_name(v, s.levels.at(v)));

  std::vector<Arrow> arrows;
  for (const Arrow& a : w.window.quiver.arrows())
    if (slice.count(a.source) && slice.count(a.target)) arrows.push_back(a);
  Quiver sq(vertices, arrows);

  std::vector<RelationElement> relations;
  for (const RelationElement& r : w.window.relations) {
    Path sample = r.terms().front().path;
    if (slice.count(sample.source()) && slice.count(sample.target()))
      relations.emplace_back(sq, r.terms());
  }
  return Presentation{std::move(sq), std::move(relations)};
}

CharacterizationReport characterize(const Presentation& p, int depth) {
  if (!is_acyclic(p.quiver)) throw std::invalid_argument("characterize requires an acyclic quiver");

  CharacterizationReport out;
  GradedBasis gb = graded_basis(p, longest_path_length(p.quiver) + 1);
  out.n = homogeneity_degree(gb);
  out.tau_slice = out.n.has_value() && *out.n >= 1;
  if (!out.tau_slice) {
    out.detail = "not a tau-slice algebra: maximal bound paths differ in length";
    return out;
  }

  ReturningArrowQuiver raq = returning_arrow_quiver(gb, *out.n);
  TrivExtAlgebra alg(gb, *out.n, TwistSpec::identity());
  out.trivext_quadratic = is_trivext_quadratic(raq, alg).quadratic;

  if (p.is_quadratic()) out.koszul = koszul_witness(p, depth);
  out.detail = "tau-slice algebra with n = " + std::to_string(*out.n);
  return out;
}

}  // namespace pathalg
