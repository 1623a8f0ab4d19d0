#include "pathalg/quadratic_dual.hpp"

#include <stdexcept>

namespace pathalg {

Presentation quadratic_dual(const Presentation& p) {
  if (!p.is_quadratic())
    throw std::invalid_argument("quadratic dual requires a quadratic presentation");
  const Quiver& q = p.quiver;

  std::vector<RelationElement> dual_relations;
  for (const std::string& i : q.vertices()) {
    for (const std::string& j : q.vertices()) {
      std::vector<Path> paths = paths_of_length(q, 2, i, j);
      if (paths.empty()) continue;
      std::map<Path, Index> index;
      for (std::size_t k = 0; k < paths.size(); ++k)
        index.emplace(paths[k], static_cast<Index>(k));

      std::vector<RowVec> rows;
      for (const RelationElement& r : p.relations) {
        if (r.source() != i || r.target() != j) continue;
        RowVec row = RowVec::Zero(static_cast<Index>(paths.size()));
        for (const auto& t : r.terms()) row(index.at(t.path)) += t.coeff;
        rows.push_back(std::move(row));
      }
      Mat m(static_cast<Index>(rows.size()), static_cast<Index>(paths.size()));
      for (std::size_t k = 0; k < rows.size(); ++k) m.row(static_cast<Index>(k)) = rows[k];
      Subspace span = Subspace::from_rows(static_cast<Index>(paths.size()), m);
      Subspace comp = orthogonal_complement(span);
      for (Index r = 0; r < comp.dim(); ++r) {
        PathLinComb terms;
        for (Index c = 0; c < comp.ambient(); ++c)
          if (comp.basis()(r, c) != 0)
            terms.push_back({paths[static_cast<std::size_t>(c)], comp.basis()(r, c)});
        dual_relations.emplace_back(q, std::move(terms));
      }
    }
  }
  return Presentation{q, std::move(dual_relations)};
}

Rat pairing(const PathLinComb& x, const PathLinComb& y) {
  std::string src, tgt;
  bool have_block = false;
  auto check = [&](const PathLinComb& z) {
    for (const auto& t : z) {
      if (t.path.length() != 2) throw std::invalid_argument("pairing needs degree-2 inputs");
      if (!have_block) {
        src = t.path.source();
        tgt = t.path.target();
        have_block = true;
      } else if (t.path.source() != src || t.path.target() != tgt) {
        throw std::invalid_argument("block mismatch");
      }
    }
  };
  check(x);
  check(y);
  Rat out = 0;
  for (const auto& a : x)
    for (const auto& b : y)
      if (a.path == b.path) out += a.coeff * b.coeff;
  return out;
}

Rat pairing(const RelationElement& x, const RelationElement& y) {
  return pairing(x.terms(), y.terms());
}

}  // namespace pathalg
