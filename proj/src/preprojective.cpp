#include "pathalg/preprojective.hpp"

#include <stdexcept>

namespace pathalg {

StructureCoefficients structure_coefficients(const GradedBasis& gb, int n) {
  if (n < 1 || gb.max_degree() < n)
    throw std::invalid_argument("structure coefficients need degrees up to n");
  const Quiver& q = gb.quiver();
  const auto& subtop = gb.basis(n - 1);
  const Index top_dim = gb.dim(n);

  StructureCoefficients sc;
  sc.n = n;
  sc.left.assign(q.arrows().size(), std::vector<RowVec>(subtop.size(), RowVec::Zero(top_dim)));
  sc.right.assign(subtop.size(), std::vector<RowVec>(q.arrows().size(), RowVec::Zero(top_dim)));

  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    Path arrow = Path::of_arrows(q, {q.arrows()[ai].name});
    for (std::size_t qi = 0; qi < subtop.size(); ++qi) {
      const Path& qr = subtop[qi];
      if (qr.target() == arrow.source())  // arrow * q
        sc.left[ai][qi] = gb.expand_path(compose(qr, arrow));
      if (arrow.target() == qr.source())  // q * arrow
        sc.right[qi][ai] = gb.expand_path(compose(arrow, qr));
    }
  }
  return sc;
}

PathLinComb zeta(const GradedBasis& gb, const ReturningArrowQuiver& raq,
                 const StructureCoefficients& sc, Index q_index) {
  const Quiver& q = gb.quiver();
  const Quiver& qt = raq.quiver;
  const int n = sc.n;
  const auto& top = gb.basis(n);
  const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);

  PathLinComb terms;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    Path arrow = Path::of_arrows(qt, {q.arrows()[ai].name});
    // p* (x) arrow, from arrow * q
    const RowVec& lrow = sc.left[ai][static_cast<std::size_t>(q_index)];
    for (Index p = 0; p < lrow.cols(); ++p) {
      if (lrow(p) == 0) continue;
      Path ret = Path::of_arrows(qt, {returning_arrow_name(top[static_cast<std::size_t>(p)])});
      terms.push_back({compose(arrow, ret), lrow(p)});
    }
    // arrow (x) p*, from q * arrow, with the alternating sign
    const RowVec& rrow = sc.right[static_cast<std::size_t>(q_index)][ai];
    for (Index p = 0; p < rrow.cols(); ++p) {
      if (rrow(p) == 0) continue;
      Path ret = Path::of_arrows(qt, {returning_arrow_name(top[static_cast<std::size_t>(p)])});
      terms.push_back({compose(ret, arrow), sign * rrow(p)});
    }
  }
  return terms;
}

PreprojPresentation preproj_presentation(const Presentation& gamma, const GradedBasis& gb_lambda,
                                         int n, const ReturningArrowQuiver& raq) {
  if (!is_acyclic(gamma.quiver))
    throw std::invalid_argument("preprojective presentation requires an acyclic quiver");
  const Quiver& qt = raq.quiver;

  PreprojPresentation out;
  for (const RelationElement& r : gamma.relations)
    out.dual_relations.emplace_back(qt, r.terms());

  StructureCoefficients sc = structure_coefficients(gb_lambda, n);
  const auto& subtop = gb_lambda.basis(n - 1);
  for (Index qi = 0; qi < static_cast<Index>(subtop.size()); ++qi) {
    PathLinComb z = zeta(gb_lambda, raq, sc, qi);
    if (z.empty())
      throw std::logic_error("degenerate zeta for " + subtop[static_cast<std::size_t>(qi)].render());
    out.zeta_relations.emplace_back(qt, std::move(z));
  }

  // Independence of the family: blockwise ranks must add up to |M_{n-1}|.
  std::map<std::pair<std::string, std::string>, std::vector<const RelationElement*>> by_block;
  for (const RelationElement& r : out.zeta_relations)
    by_block[{r.source(), r.target()}].push_back(&r);
  Index total_rank = 0;
  for (const auto& [block, rels] : by_block) {
    std::vector<Path> paths = paths_of_length(qt, 2, block.first, block.second);
    std::map<Path, Index> index;
    for (std::size_t k = 0; k < paths.size(); ++k) index.emplace(paths[k], static_cast<Index>(k));
    Mat m = Mat::Zero(static_cast<Index>(rels.size()), static_cast<Index>(paths.size()));
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (const auto& t : rels[r]->terms()) m(static_cast<Index>(r), index.at(t.path)) = t.coeff;
    total_rank += rank(m);
  }
  if (total_rank != static_cast<Index>(out.zeta_relations.size()))
    throw std::logic_error("zeta family is linearly dependent");

  std::vector<RelationElement> relations = out.dual_relations;
  relations.insert(relations.end(), out.zeta_relations.begin(), out.zeta_relations.end());
  out.presentation = Presentation{qt, std::move(relations)};
  return out;
}

namespace {

// Span of (right pad) * relation * (left pad) for a fixed split, inside the
// coordinate space of the degree-t paths of one block.
Subspace padded_relation_span(const Quiver& q, const std::vector<RelationElement>& relations,
                              const std::vector<Path>& paths,
                              const std::map<Path, Index>& index, const std::string& i,
                              const std::string& j, int right_pad, int left_pad) {
  std::vector<RowVec> rows;
  for (const RelationElement& r : relations) {
    std::vector<Path> vs = paths_of_length(q, right_pad, i, r.source());
    if (vs.empty()) continue;
    std::vector<Path> us = paths_of_length(q, left_pad, r.target(), j);
    if (us.empty()) continue;
    for (const Path& v : vs) {
      for (const Path& u : us) {
        RowVec row = RowVec::Zero(static_cast<Index>(paths.size()));
        for (const auto& term : r.terms()) row(index.at(compose(compose(v, term.path), u))) += term.coeff;
        rows.push_back(std::move(row));
      }
    }
  }
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(paths.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) m.row(static_cast<Index>(k)) = rows[k];
  return Subspace::from_rows(static_cast<Index>(paths.size()), m);
}

}  // namespace

KoszulBimoduleComplex koszul_complex_maps(const GradedBasis& gb_lambda,
                                          const GradedBasis& gb_gamma, int n) {
  const Quiver& q = gb_lambda.quiver();
  const std::vector<RelationElement>& dual_relations = gb_gamma.presentation().relations;

  KoszulBimoduleComplex cx;
  cx.n = n;
  cx.maps.resize(static_cast<std::size_t>(n) + 1);
  cx.kspaces.resize(static_cast<std::size_t>(n) + 1);

  for (int t = 1; t <= n; ++t) {
    // Joint intersection over all split positions of the dual relation span.
    std::map<std::pair<int, int>, Subspace> kblocks;
    std::map<std::pair<int, int>, std::pair<std::vector<Path>, std::map<Path, Index>>> blockpaths;
    for (const std::string& i : q.vertices()) {
      for (const std::string& j : q.vertices()) {
        std::vector<Path> paths = paths_of_length(q, t, i, j);
        if (paths.empty()) continue;
        std::map<Path, Index> index;
        for (std::size_t k = 0; k < paths.size(); ++k)
          index.emplace(paths[k], static_cast<Index>(k));
        Subspace kspace = Subspace::full(static_cast<Index>(paths.size()));
        for (int a = 0; a + 2 <= t; ++a) {
          Subspace layer =
              padded_relation_span(q, dual_relations, paths, index, i, j, a, t - 2 - a);
          kspace = subspace_intersect(kspace, layer);
        }
        auto key = std::make_pair(q.vertex_index(i), q.vertex_index(j));
        kblocks.emplace(key, std::move(kspace));
        blockpaths.emplace(key, std::make_pair(std::move(paths), std::move(index)));
      }
    }

    // Lift each basis monomial into the joint intersection: the unique element
    // whose coordinate pairing against the monomial basis is a unit vector.
    const auto& basis_t = gb_lambda.basis(t);
    std::vector<BimoduleMapRow> rows(basis_t.size());
    const Rat sign = (t % 2 == 0) ? Rat(1) : Rat(-1);

    for (std::size_t mi = 0; mi < basis_t.size(); ++mi) {
      const Path& m = basis_t[mi];
      auto key = std::make_pair(q.vertex_index(m.source()), q.vertex_index(m.target()));
      const Subspace& kspace = kblocks.at(key);
      const auto& [paths, index] = blockpaths.at(key);
      const DegreeBlock* lblk = gb_lambda.block(t, m.source(), m.target());
      if (lblk == nullptr || kspace.dim() != static_cast<Index>(lblk->basis_local.size()))
        throw std::logic_error("koszul middle-slot dimension mismatch");

      // solve c * K = unit against the monomial columns
      const Index kd = kspace.dim();
      Mat km(kd, kd);
      Index mpos = -1;
      for (Index col = 0; col < kd; ++col) {
        const Path& bm = lblk->paths[static_cast<std::size_t>(lblk->basis_local[col])];
        if (bm == m) mpos = col;
        for (Index r = 0; r < kd; ++r) km(r, col) = kspace.basis()(r, index.at(bm));
      }
      if (mpos < 0) throw std::logic_error("basis path missing from its block");
      Vec e = Vec::Zero(kd);
      e(mpos) = 1;
      auto c = solve(km.transpose(), e);
      if (!c) throw std::logic_error("koszul lift failed");
      RowVec lift = RowVec::Zero(static_cast<Index>(paths.size()));
      for (Index r = 0; r < kd; ++r) lift += (*c)(r) * kspace.basis().row(r);

      // slices of the lift: left factor arrow (applied last), right (applied first)
      BimoduleMapRow& row = rows[mi];
      if (t >= 1) {
        const auto& basis_prev = gb_lambda.basis(t - 1);
        for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
          Path arrow = Path::of_arrows(q, {q.arrows()[ai].name});
          for (std::size_t pi = 0; pi < basis_prev.size(); ++pi) {
            const Path& mp = basis_prev[pi];
            if (mp.source() == m.source() && mp.target() == arrow.source() &&
                arrow.target() == m.target()) {
              const Rat& c1 = lift(index.at(compose(mp, arrow)));
              if (c1 != 0) row.left[{static_cast<int>(ai), static_cast<Index>(pi)}] = c1;
            }
            if (arrow.source() == m.source() && arrow.target() == mp.source() &&
                mp.target() == m.target()) {
              const Rat c2 = sign * lift(index.at(compose(arrow, mp)));
              if (c2 != 0) row.right[{static_cast<Index>(pi), static_cast<int>(ai)}] = c2;
            }
          }
        }
      }
    }
    cx.kspaces[static_cast<std::size_t>(t)] = std::move(kblocks);
    cx.maps[static_cast<std::size_t>(t)] = std::move(rows);
  }
  return cx;
}

bool complex_composites_vanish(const KoszulBimoduleComplex& cx, const GradedBasis& gb_lambda,
                               const GradedBasis& gb_gamma) {
  const Quiver& q = gb_lambda.quiver();
  auto arrow_path = [&](int ai) {
    return Path::of_arrows(q, {q.arrows()[static_cast<std::size_t>(ai)].name});
  };

  for (int t = 2; t <= cx.n; ++t) {
    const auto& ft = cx.maps[static_cast<std::size_t>(t)];
    const auto& fprev = cx.maps[static_cast<std::size_t>(t - 1)];
    for (std::size_t mi = 0; mi < ft.size(); ++mi) {
      // Accumulate over (side, word, middle): side 0 holds degree-(2,0)
      // coefficients, side 1 the (1,1) ones keyed "left|right", side 2 the
      // (0,2) ones. Length-two words are reduced in the dual algebra first.
      std::map<std::tuple<int, std::string, Index>, Rat> acc;
      auto add_reduced = [&](int side, const Path& word, Index middle, const Rat& coeff) {
        RowVec row = gb_gamma.expand_path(word);
        for (Index c = 0; c < row.cols(); ++c)
          if (row(c) != 0)
            acc[{side, gb_gamma.basis(2)[static_cast<std::size_t>(c)].render(), middle}] +=
                coeff * row(c);
      };

      const BimoduleMapRow& top = ft[mi];
      for (const auto& [la, c1] : top.left) {
        const auto& [a1, m1] = la;
        const BimoduleMapRow& mid = fprev[static_cast<std::size_t>(m1)];
        for (const auto& [la2, c2] : mid.left) {
          const auto& [a2, m2] = la2;
          // a1 . (a2 (x) m2 (x) 1): left word applies a2 first
          add_reduced(0, compose(arrow_path(a2), arrow_path(a1)), m2, c1 * c2);
        }
        for (const auto& [ra2, c2] : mid.right) {
          const auto& [m2, a2] = ra2;
          acc[{1,
               q.arrows()[static_cast<std::size_t>(a1)].name + "|" +
                   q.arrows()[static_cast<std::size_t>(a2)].name,
               m2}] += c1 * c2;
        }
      }
      for (const auto& [ra, c1] : top.right) {
        const auto& [m1, a1] = ra;
        const BimoduleMapRow& mid = fprev[static_cast<std::size_t>(m1)];
        for (const auto& [la2, c2] : mid.left) {
          const auto& [a2, m2] = la2;
          acc[{1,
               q.arrows()[static_cast<std::size_t>(a2)].name + "|" +
                   q.arrows()[static_cast<std::size_t>(a1)].name,
               m2}] += c1 * c2;
        }
        for (const auto& [ra2, c2] : mid.right) {
          const auto& [m2, a2] = ra2;
          // (1 (x) m2 (x) a2) . a1: right word applies a1 first
          add_reduced(2, compose(arrow_path(a1), arrow_path(a2)), m2, c1 * c2);
        }
      }
      for (const auto& [key, value] : acc)
        if (value != 0) return false;
    }
  }
  return true;
}

PathLinComb fstar_oracle(const KoszulBimoduleComplex& cx, const GradedBasis& gb_lambda,
                         const ReturningArrowQuiver& raq, Index q_index) {
  const Quiver& q = gb_lambda.quiver();
  const Quiver& qt = raq.quiver;
  const int n = cx.n;
  const auto& top = gb_lambda.basis(n);
  const auto& fn = cx.maps[static_cast<std::size_t>(n)];

  PathLinComb terms;
  for (std::size_t pi = 0; pi < top.size(); ++pi) {
    Path ret = Path::of_arrows(qt, {returning_arrow_name(top[pi])});
    const BimoduleMapRow& row = fn[pi];
    // psi_q(f_n(p)): the middle-slot functional picks out the q coordinate;
    // Phi turns the surviving envelope values into generator-block words.
    for (const auto& [la, coeff] : row.left) {
      const auto& [ai, mi] = la;
      if (mi != q_index) continue;
      Path arrow = Path::of_arrows(qt, {q.arrows()[static_cast<std::size_t>(ai)].name});
      terms.push_back({compose(arrow, ret), coeff});
    }
    for (const auto& [ra, coeff] : row.right) {
      const auto& [mi, ai] = ra;
      if (mi != q_index) continue;
      Path arrow = Path::of_arrows(qt, {q.arrows()[static_cast<std::size_t>(ai)].name});
      terms.push_back({compose(ret, arrow), coeff});
    }
  }
  return terms;
}

}  // namespace pathalg
