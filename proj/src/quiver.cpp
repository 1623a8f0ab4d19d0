#include "pathalg/quiver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pathalg {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex id: " + vertices_[i]);
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.name.empty()) throw std::invalid_argument("arrow with empty name");
    if (!arrow_index_.emplace(a.name, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate arrow name: " + a.name);
    if (!vertex_index_.count(a.source))
      throw std::invalid_argument("arrow " + a.name + " has undeclared source " + a.source);
    if (!vertex_index_.count(a.target))
      throw std::invalid_argument("arrow " + a.name + " has undeclared target " + a.target);
  }
}

bool Quiver::has_vertex(const std::string& v) const { return vertex_index_.count(v) > 0; }

int Quiver::vertex_index(const std::string& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) throw std::invalid_argument("unknown vertex: " + v);
  return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

const Arrow& Quiver::arrow(const std::string& name) const {
  auto idx = arrow_index(name);
  if (!idx) throw std::invalid_argument("unknown arrow: " + name);
  return arrows_[static_cast<std::size_t>(*idx)];
}

std::vector<int> Quiver::arrows_from(const std::string& v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Quiver::arrows_into(const std::string& v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) out.push_back(static_cast<int>(i));
  return out;
}

Path Path::trivial(const std::string& v) {
  Path p;
  p.source_ = v;
  p.target_ = v;
  return p;
}

Path Path::of_arrows(const Quiver& q, const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("path needs an explicit vertex when empty");
  Path p;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const Arrow& a = q.arrow(names[k]);
    if (k == 0) {
      p.source_ = a.source;
    } else if (p.target_ != a.source) {
      throw std::invalid_argument("non-composable path at arrow " + names[k]);
    }
    p.target_ = a.target;
    p.arrows_.push_back(a.name);
  }
  return p;
}

std::string Path::render() const {
  if (arrows_.empty()) return "e_" + source_;
  std::string out;
  for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
    if (!out.empty()) out += "*";
    out += *it;
  }
  return out;
}

Path compose(const Path& first, const Path& second) {
  if (first.target() != second.source())
    throw std::invalid_argument("non-composable paths: " + first.render() + " then " +
                                second.render());
  if (first.is_trivial()) return second;
  if (second.is_trivial()) return first;
  Path out;
  out.source_ = first.source_;
  out.target_ = second.target_;
  out.arrows_ = first.arrows_;
  out.arrows_.insert(out.arrows_.end(), second.arrows_.begin(), second.arrows_.end());
  return out;
}

std::vector<Path> paths_of_length(const Quiver& q, int t, const std::string& i,
                                  const std::string& j) {
  if (t < 0) throw std::invalid_argument("negative path length");
  q.vertex_index(i);
  q.vertex_index(j);
  if (t == 0) {
    if (i == j) return {Path::trivial(i)};
    return {};
  }
  std::vector<Path> out;
  // Choose the last applied arrow first: this yields lexicographic order of
  // the rendered form in the declared arrow order.
  for (const Arrow& a : q.arrows()) {
    if (a.target != j) continue;
    for (const Path& p : paths_of_length(q, t - 1, i, a.source))
      out.push_back(compose(p, Path::of_arrows(q, {a.name})));
  }
  return out;
}

bool is_acyclic(const Quiver& q) {
  const std::size_t n = q.vertices().size();
  std::vector<int> indegree(n, 0);
  for (const Arrow& a : q.arrows()) indegree[static_cast<std::size_t>(q.vertex_index(a.target))]++;
  std::deque<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    ++seen;
    for (const Arrow& a : q.arrows()) {
      if (q.vertex_index(a.source) != v) continue;
      int w = q.vertex_index(a.target);
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

int longest_path_length(const Quiver& q) {
  if (!is_acyclic(q)) throw std::invalid_argument("longest path undefined on cyclic quiver");
  const std::size_t n = q.vertices().size();
  std::vector<int> best(n, -1);
  // longest path ending at each vertex, by repeated relaxation (n rounds suffice)
  for (std::size_t v = 0; v < n; ++v) best[v] = 0;
  for (std::size_t round = 0; round < n; ++round) {
    for (const Arrow& a : q.arrows()) {
      int s = q.vertex_index(a.source);
      int t = q.vertex_index(a.target);
      best[static_cast<std::size_t>(t)] =
          std::max(best[static_cast<std::size_t>(t)], best[static_cast<std::size_t>(s)] + 1);
    }
  }
  int m = 0;
  for (std::size_t v = 0; v < n; ++v) m = std::max(m, best[v]);
  return m;
}

Quiver opposite_quiver(const Quiver& q, const std::string& name_suffix) {
  std::vector<Arrow> arrows;
  arrows.reserve(q.arrows().size());
  for (const Arrow& a : q.arrows()) arrows.push_back({a.name + name_suffix, a.target, a.source});
  return Quiver(q.vertices(), arrows);
}

std::vector<std::vector<long>> adjacency_matrix(const Quiver& q) {
  const std::size_t n = q.vertices().size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (const Arrow& a : q.arrows())
    m[static_cast<std::size_t>(q.vertex_index(a.source))]
     [static_cast<std::size_t>(q.vertex_index(a.target))]++;
  return m;
}

}  // namespace pathalg
