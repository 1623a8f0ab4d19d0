#include "pathalg/theorem.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace pathalg {

GradedDimsComparison compare_graded_dims(const Presentation& a, const Presentation& b, int depth) {
  if (a.quiver.vertices() != b.quiver.vertices())
    throw std::invalid_argument("graded dimension comparison needs one quiver");
  const auto& qa = a.quiver.arrows();
  const auto& qb = b.quiver.arrows();
  if (qa.size() != qb.size())
    throw std::invalid_argument("graded dimension comparison needs one quiver");
  for (std::size_t k = 0; k < qa.size(); ++k)
    if (qa[k].name != qb[k].name || qa[k].source != qb[k].source || qa[k].target != qb[k].target)
      throw std::invalid_argument("graded dimension comparison needs one quiver");

  GradedBasis ga = graded_basis(a, depth);
  GradedBasis gb = graded_basis(b, depth);

  GradedDimsComparison out;
  for (int t = 0; t <= depth; ++t) {
    out.rows.push_back({t, ga.dim(t), gb.dim(t)});
    if (ga.dim(t) != gb.dim(t)) {
      out.equal = false;
      if (out.first_mismatch < 0) out.first_mismatch = t;
    }
  }
  for (const std::string& i : a.quiver.vertices()) {
    for (const std::string& j : a.quiver.vertices()) {
      std::vector<Index> da, db;
      bool seen = false;
      for (int t = 0; t <= depth; ++t) {
        const DegreeBlock* ba = ga.block(t, i, j);
        const DegreeBlock* bb = gb.block(t, i, j);
        Index na = ba ? static_cast<Index>(ba->basis_local.size()) : 0;
        Index nb = bb ? static_cast<Index>(bb->basis_local.size()) : 0;
        da.push_back(na);
        db.push_back(nb);
        if (na > 0 || nb > 0) seen = true;
        if (na != nb) {
          out.equal = false;
          if (out.first_mismatch < 0) out.first_mismatch = t;
        }
      }
      if (seen) out.block_dims.emplace(std::make_pair(i, j), std::make_pair(da, db));
    }
  }
  return out;
}

namespace {

bool in_mixed_block(const ReturningArrowQuiver& raq, const RelationElement& r) {
  if (r.length() != 2) return false;
  for (const auto& t : r.terms()) {
    int returning = 0;
    for (const auto& a : t.path.arrows())
      if (raq.is_returning(a)) ++returning;
    if (returning != 1) return false;
  }
  return true;
}

}  // namespace

bool verify_orthogonality(const ReturningArrowQuiver& raq,
                          const std::vector<RelationElement>& lhs,
                          const std::vector<RelationElement>& rhs) {
  for (const auto& r : lhs)
    if (!in_mixed_block(raq, r)) throw std::invalid_argument("block mismatch: not a mixed element");
  for (const auto& r : rhs)
    if (!in_mixed_block(raq, r)) throw std::invalid_argument("block mismatch: not a mixed element");
  for (const auto& x : lhs) {
    for (const auto& y : rhs) {
      if (x.source() != y.source() || x.target() != y.target()) continue;
      if (pairing(x, y) != 0) return false;
    }
  }
  return true;
}

bool VerificationReport::hypotheses_ok() const {
  for (const auto& s : stages) {
    if (s.name == "n-homogeneous" || s.name == "trivial extension quadratic" ||
        s.name == "koszul witness") {
      if (!s.pass) return false;
    }
  }
  return true;
}

bool VerificationReport::identity_ok() const {
  bool seen = false;
  for (const auto& s : stages) {
    if (s.name == "orthogonality" || s.name == "dimension sum" ||
        s.name == "complement equality") {
      seen = true;
      if (!s.pass || s.skipped) return false;
    }
  }
  return seen && corroboration_ok;
}

bool VerificationReport::pass() const {
  for (const auto& s : stages)
    if (!s.pass) return false;
  return corroboration_ok;
}

std::string VerificationReport::render_text() const {
  std::ostringstream os;
  os << "theorem verification\n";
  for (const auto& s : stages) {
    os << "  " << s.name << ": " << (s.skipped ? "skipped" : (s.pass ? "pass" : "FAIL"));
    if (!s.detail.empty()) os << " (" << s.detail << ")";
    os << "\n";
  }
  if (n) {
    os << "graded dimensions of the input:";
    for (Index d : lambda_dims) os << " " << d;
    os << "\n";
  }
  if (!blocks.empty()) {
    os << "degree-2 blocks (source -> target: paths = extension span + preprojective span):\n";
    for (const auto& b : blocks) {
      os << "  " << b.source << " -> " << b.target << ": " << b.path_count << " = "
         << b.trivext_dim << " + " << b.preproj_dim
         << (b.sum_ok && b.complement_ok ? "" : "  [MISMATCH]") << "\n";
    }
  }
  if (!corroboration.rows.empty()) {
    os << "corroboration (cover of preprojective relations vs dual of extension):\n";
    for (const auto& row : corroboration.rows)
      os << "  degree " << row.degree << ": " << row.dim_a << " vs " << row.dim_b << "\n";
    os << "  graded dimensions " << (corroboration.equal ? "agree" : "DISAGREE");
    if (!corroboration.equal) os << " (first mismatch at degree " << corroboration.first_mismatch << ")";
    os << "\n";
  }
  os << "result: ";
  if (pass())
    os << "pass";
  else if (!hypotheses_ok())
    os << (identity_ok() ? "hypothesis unmet (the degree-2 subspace identity holds)"
                         : "hypothesis unmet");
  else
    os << "THEOREM VIOLATION (implementation bug)";
  os << "\n";
  return os.str();
}

VerificationReport verify_main_theorem(const Presentation& p, int depth) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;

  auto push = [&](const std::string& name, bool pass, const std::string& detail = "",
                  bool skipped = false) {
    report.stages.push_back({name, pass, skipped, detail});
    return pass;
  };
  auto skip_rest = [&](const std::string& why) {
    for (const char* name : {"orthogonality", "dimension sum", "complement equality"})
      report.stages.push_back({name, false, true, why});
  };
  auto finish = [&]() -> VerificationReport& {
    report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
    return report;
  };

  // Stage 1: acyclic and n-homogeneous.
  if (!is_acyclic(p.quiver)) {
    push("n-homogeneous", false, "quiver has directed cycles");
    push("trivial extension quadratic", false, "", true);
    push("koszul witness", false, "", true);
    skip_rest("homogeneity failed");
    return finish();
  }
  GradedBasis gb = graded_basis(p, longest_path_length(p.quiver) + 1);
  report.lambda_dims = gb.dims();
  while (!report.lambda_dims.empty() && report.lambda_dims.back() == 0)
    report.lambda_dims.pop_back();
  std::optional<int> n = homogeneity_degree(gb);
  if (!n || *n < 1) {
    push("n-homogeneous", false,
         n ? "degenerate (top degree 0)" : "maximal bound paths of different lengths");
    push("trivial extension quadratic", false, "", true);
    push("koszul witness", false, "", true);
    skip_rest("homogeneity failed");
    return finish();
  }
  report.n = n;
  push("n-homogeneous", true, "n = " + std::to_string(*n));

  // Stage 2: quadraticity of the twisted trivial extension.
  ReturningArrowQuiver raq = returning_arrow_quiver(gb, *n);
  TrivExtAlgebra alg(gb, *n, TwistSpec::nu(*n));
  TrivExtQuadraticity quad = is_trivext_quadratic(raq, alg);
  push("trivial extension quadratic", quad.quadratic,
       quad.quadratic ? "" : "trivial extension not quadratic: " + quad.detail);

  // Stage 3: bounded Koszul witnesses for the algebra and its dual.
  bool koszul_ok = false;
  std::string koszul_detail;
  Presentation gamma{p.quiver, {}};
  bool have_gamma = false;
  if (!p.is_quadratic()) {
    koszul_detail = "presentation is not quadratic";
  } else {
    gamma = quadratic_dual(p);
    have_gamma = true;
    KoszulWitness wl = koszul_witness(p, depth);
    KoszulWitness wg = koszul_witness(gamma, depth);
    koszul_ok = wl.pass && wg.pass;
    koszul_detail = wl.pass ? (wg.pass ? "witnessed to depth " + std::to_string(depth)
                                       : "dual: " + wg.detail)
                            : wl.detail;
  }
  push("koszul witness", koszul_ok, koszul_detail);

  if (!have_gamma) {
    skip_rest("input not quadratic");
    return finish();
  }

  // Stage 4-6: build both relation sets independently and compare. These run
  // even when stage 2 failed: the comparison is a statement about the
  // degree-2 spans and stays well defined for any n-homogeneous input.
  try {
    Presentation ext_pres = trivext_relations(raq, alg);
    std::vector<RelationElement> mixed = trivext_mixed_relations(raq, alg);
    PreprojPresentation pi = preproj_presentation(gamma, gb, *n, raq);

    push("orthogonality", verify_orthogonality(raq, mixed, pi.zeta_relations));

    const Quiver& qt = raq.quiver;
    bool sums_ok = true;
    bool comps_ok = true;
    for (const std::string& i : qt.vertices()) {
      for (const std::string& j : qt.vertices()) {
        std::vector<Path> paths = paths_of_length(qt, 2, i, j);
        if (paths.empty()) continue;
        std::map<Path, Index> index;
        for (std::size_t k = 0; k < paths.size(); ++k)
          index.emplace(paths[k], static_cast<Index>(k));
        auto span_of = [&](const std::vector<RelationElement>& rels) {
          std::vector<RowVec> rows;
          for (const auto& r : rels) {
            if (r.source() != i || r.target() != j) continue;
            RowVec row = RowVec::Zero(static_cast<Index>(paths.size()));
            for (const auto& t : r.terms()) row(index.at(t.path)) += t.coeff;
            rows.push_back(std::move(row));
          }
          Mat m(static_cast<Index>(rows.size()), static_cast<Index>(paths.size()));
          for (std::size_t k = 0; k < rows.size(); ++k) m.row(static_cast<Index>(k)) = rows[k];
          return Subspace::from_rows(static_cast<Index>(paths.size()), m);
        };
        Subspace ext_span = span_of(ext_pres.relations);
        Subspace pi_span = span_of(pi.presentation.relations);

        BlockReport blk;
        blk.source = i;
        blk.target = j;
        blk.path_count = static_cast<Index>(paths.size());
        blk.trivext_dim = ext_span.dim();
        blk.preproj_dim = pi_span.dim();
        blk.sum_ok = (ext_span.dim() + pi_span.dim() == blk.path_count);
        blk.complement_ok = (orthogonal_complement(ext_span) == pi_span) &&
                            (orthogonal_complement(pi_span) == ext_span);
        sums_ok = sums_ok && blk.sum_ok;
        comps_ok = comps_ok && blk.complement_ok;
        report.blocks.push_back(std::move(blk));
      }
    }
    push("dimension sum", sums_ok);
    push("complement equality", comps_ok);

    // Corroboration: the cover of the preprojective relations against the
    // quadratic dual of the extension presentation, degree by degree.
    Presentation dual_of_ext = quadratic_dual(ext_pres);
    report.corroboration = compare_graded_dims(pi.presentation, dual_of_ext, depth);
    report.corroboration_ok = report.corroboration.equal;
  } catch (const std::logic_error& e) {
    auto have = [&](const char* name) {
      for (const auto& s : report.stages)
        if (s.name == name) return true;
      return false;
    };
    for (const char* name : {"orthogonality", "dimension sum", "complement equality"})
      if (!have(name))
        report.stages.push_back(
            {name, false, false, std::string("internal inconsistency: ") + e.what()});
    report.corroboration_ok = false;
  }
  return finish();
}

}  // namespace pathalg
