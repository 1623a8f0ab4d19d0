#include "pathalg/trivial_extension.hpp"

#include <stdexcept>

namespace pathalg {

std::string returning_arrow_name(const Path& p) { return "ret:" + p.render(); }

ReturningArrowQuiver returning_arrow_quiver(const GradedBasis& gb, int n) {
  std::vector<Path> top = top_degree_basis(gb, n);
  const Quiver& q = gb.quiver();

  std::vector<Arrow> arrows = q.arrows();
  ReturningArrowQuiver out;
  for (const Path& p : top) {
    std::string name = returning_arrow_name(p);
    arrows.push_back({name, p.target(), p.source()});
    out.returning_index.emplace(name, out.returning.size());
    out.returning.emplace_back(name, p);
  }
  out.quiver = Quiver(q.vertices(), arrows);
  return out;
}

TrivExtAlgebra::TrivExtAlgebra(GradedBasis gb, int n, TwistSpec twist)
    : gb_(std::move(gb)), n_(n), twist_(twist) {
  auto h = homogeneity_degree(gb_);
  if (!h || *h != n)
    throw std::invalid_argument("trivial extension requires an n-homogeneous algebra");

  std::vector<Key> keys;
  for (int t = 0; t <= n_; ++t) {
    for (Index i = 0; i < gb_.dim(t); ++i) {
      keys.push_back({false, t, i});
      keys.push_back({true, t, i});
    }
  }
  for (const Key& a : keys)
    for (const Key& b : keys) {
      Element prod = basis_product(a, b);
      if (!prod.empty()) table_.emplace(std::make_pair(a, b), std::move(prod));
    }
}

Index TrivExtAlgebra::dimension() const {
  Index d = 0;
  for (int t = 0; t <= n_; ++t) d += gb_.dim(t);
  return 2 * d;
}

TrivExtAlgebra::Element TrivExtAlgebra::lambda_unit(int t, Index idx) const {
  return Element{{Key{false, t, idx}, Rat(1)}};
}

TrivExtAlgebra::Element TrivExtAlgebra::dual_unit(int s, Index idx) const {
  return Element{{Key{true, s, idx}, Rat(1)}};
}

TrivExtAlgebra::Element TrivExtAlgebra::basis_product(const Key& a, const Key& b) const {
  Element out;
  if (a.dual && b.dual) return out;  // (D Lambda)^2 = 0

  if (!a.dual && !b.dual) {
    // product of basis paths: apply b first, then a
    const Path& pa = gb_.basis(a.deg)[static_cast<std::size_t>(a.idx)];
    const Path& pb = gb_.basis(b.deg)[static_cast<std::size_t>(b.idx)];
    const int t = a.deg + b.deg;
    if (t > n_) return out;
    if (pb.target() != pa.source()) return out;
    RowVec row = gb_.expand_path(compose(pb, pa));
    for (Index c = 0; c < row.cols(); ++c)
      if (row(c) != 0) out[{false, t, c}] = row(c);
    return out;
  }

  if (!a.dual && b.dual) {
    // left action on the dual: (a . m*)(z) = m*(z a)
    const Path& pa = gb_.basis(a.deg)[static_cast<std::size_t>(a.idx)];
    const int d = b.deg - a.deg;
    if (d < 0) return out;
    const auto& zs = gb_.basis(d);
    for (std::size_t zi = 0; zi < zs.size(); ++zi) {
      const Path& z = zs[zi];
      if (pa.target() != z.source()) continue;
      RowVec row = gb_.expand_path(compose(pa, z));
      const Rat& coeff = row(b.idx);
      if (coeff != 0) out[{true, d, static_cast<Index>(zi)}] = coeff;
    }
    return out;
  }

  // dual times algebra: (m* . b)(z) = m*(sigma(b) z), twist on the right action
  const Path& pb = gb_.basis(b.deg)[static_cast<std::size_t>(b.idx)];
  const int d = a.deg - b.deg;
  if (d < 0) return out;
  const Rat factor = twist_.path_factor(b.deg);
  const auto& zs = gb_.basis(d);
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    const Path& z = zs[zi];
    if (z.target() != pb.source()) continue;
    RowVec row = gb_.expand_path(compose(z, pb));
    const Rat coeff = factor * row(a.idx);
    if (coeff != 0) out[{true, d, static_cast<Index>(zi)}] = coeff;
  }
  return out;
}

TrivExtAlgebra::Element TrivExtAlgebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [ka, ca] : x) {
    for (const auto& [kb, cb] : y) {
      auto it = table_.find({ka, kb});
      if (it == table_.end()) continue;
      for (const auto& [k, c] : it->second) {
        Rat& acc = out[k];
        acc += ca * cb * c;
        if (acc == 0) out.erase(k);
      }
    }
  }
  return out;
}

TrivExtAlgebra::Element mu_sigma(const ReturningArrowQuiver& raq, const TrivExtAlgebra& alg,
                                 const Path& path) {
  const GradedBasis& gb = alg.graded();
  const int n = alg.top_degree();

  auto generator_image = [&](const std::string& arrow_name) -> TrivExtAlgebra::Element {
    if (raq.is_returning(arrow_name)) {
      const Path& p = raq.maximal_path(arrow_name);
      auto idx = gb.basis_index(n, p);
      if (!idx) throw std::logic_error("maximal path missing from top basis");
      return alg.dual_unit(n, *idx);
    }
    Path arrow = Path::of_arrows(gb.quiver(), {arrow_name});
    auto idx = gb.basis_index(1, arrow);
    if (!idx) throw std::invalid_argument("unknown arrow: " + arrow_name);
    return alg.lambda_unit(1, *idx);
  };

  if (path.is_trivial()) {
    Path e = Path::trivial(path.source());
    auto idx = gb.basis_index(0, e);
    if (!idx) throw std::invalid_argument("unknown vertex: " + path.source());
    return alg.lambda_unit(0, *idx);
  }

  TrivExtAlgebra::Element acc = generator_image(path.arrows().front());
  for (std::size_t k = 1; k < path.arrows().size(); ++k)
    acc = alg.multiply(generator_image(path.arrows()[k]), acc);
  return acc;
}

std::vector<RelationElement> trivext_mixed_relations(const ReturningArrowQuiver& raq,
                                                     const TrivExtAlgebra& alg) {
  const Quiver& qt = raq.quiver;
  const GradedBasis& gb = alg.graded();
  const int n = alg.top_degree();

  std::vector<RelationElement> out;
  for (const std::string& i : qt.vertices()) {
    for (const std::string& j : qt.vertices()) {
      std::vector<Path> mixed;
      for (const Path& p : paths_of_length(qt, 2, i, j)) {
        int returning = 0;
        for (const auto& a : p.arrows())
          if (raq.is_returning(a)) ++returning;
        if (returning == 1) mixed.push_back(p);
      }
      if (mixed.empty()) continue;

      // columns: mixed paths; rows: dual basis coordinates of D(Lambda_{n-1})
      Mat m = Mat::Zero(gb.dim(n - 1), static_cast<Index>(mixed.size()));
      for (std::size_t c = 0; c < mixed.size(); ++c) {
        TrivExtAlgebra::Element img = mu_sigma(raq, alg, mixed[c]);
        for (const auto& [key, coeff] : img) {
          if (!key.dual || key.deg != n - 1)
            throw std::logic_error("mixed product outside D(Lambda_{n-1})");
          m(key.idx, static_cast<Index>(c)) = coeff;
        }
      }
      Subspace ker = kernel(m);
      for (Index r = 0; r < ker.dim(); ++r) {
        PathLinComb terms;
        for (Index c = 0; c < ker.ambient(); ++c)
          if (ker.basis()(r, c) != 0)
            terms.push_back({mixed[static_cast<std::size_t>(c)], ker.basis()(r, c)});
        out.emplace_back(qt, std::move(terms));
      }
    }
  }
  return out;
}

Presentation trivext_relations(const ReturningArrowQuiver& raq, const TrivExtAlgebra& alg) {
  const Quiver& qt = raq.quiver;

  std::vector<RelationElement> relations;
  for (const RelationElement& r : alg.graded().presentation().relations)
    relations.emplace_back(qt, r.terms());

  // all composable returning-arrow pairs
  for (const auto& [name_p, p] : raq.returning) {
    for (const auto& [name_p2, p2] : raq.returning) {
      if (p.target() != p2.source()) continue;  // beta_p after beta_{p'}
      Path first = Path::of_arrows(qt, {name_p2});
      Path then = Path::of_arrows(qt, {name_p});
      relations.emplace_back(qt, PathLinComb{{compose(first, then), Rat(1)}});
    }
  }

  for (RelationElement& r : trivext_mixed_relations(raq, alg)) relations.push_back(std::move(r));
  return Presentation{qt, std::move(relations)};
}

TrivExtQuadraticity is_trivext_quadratic(const ReturningArrowQuiver& raq,
                                         const TrivExtAlgebra& alg, int guard) {
  const int n = alg.top_degree();
  if (guard < n + 2) guard = n + 2;

  Presentation cover = trivext_relations(raq, alg);
  GradedBasis gbc = graded_basis(cover, guard);
  const GradedBasis& gb = alg.graded();

  TrivExtQuadraticity out;
  auto lam = [&](int t) -> Index { return (t < 0 || t > n) ? 0 : gb.dim(t); };
  for (int t = 0; t <= guard; ++t) {
    out.cover_dims.push_back(gbc.dim(t));
    out.expected_dims.push_back(t <= n + 1 ? lam(t) + lam(n + 1 - t) : 0);
  }
  out.quadratic = true;
  for (int t = 0; t <= guard; ++t) {
    if (out.cover_dims[static_cast<std::size_t>(t)] !=
        out.expected_dims[static_cast<std::size_t>(t)]) {
      out.quadratic = false;
      out.detail = "quadratic cover dimension " +
                   std::to_string(out.cover_dims[static_cast<std::size_t>(t)]) +
                   " differs from extension dimension " +
                   std::to_string(out.expected_dims[static_cast<std::size_t>(t)]) +
                   " in degree " + std::to_string(t);
      break;
    }
  }
  if (out.quadratic) out.detail = "quadratic through degree " + std::to_string(guard);
  return out;
}

}  // namespace pathalg
