// Command line surface: exact computations with bound quiver algebras.
//
// Exit codes for verify-theorem: 0 pass, 1 hypothesis unmet, 2 theorem
// violation (an implementation bug), 3 input error. Other commands use 0 on
// success and 3 on input errors. Data goes to stdout, diagnostics to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include "pathalg/io.hpp"
#include "pathalg/preprojective.hpp"
#include "pathalg/quadratic_dual.hpp"
#include "pathalg/theorem.hpp"
#include "pathalg/translation_quiver.hpp"
#include "pathalg/trivial_extension.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pathalg;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Pipeline {
  GradedBasis gb;
  int n = 0;
};

Pipeline homogeneous_pipeline(const Presentation& p) {
  if (!is_acyclic(p.quiver))
    throw std::invalid_argument("cyclic quiver: finite dimensionality not certified");
  GradedBasis gb = graded_basis(p, longest_path_length(p.quiver) + 1);
  auto n = homogeneity_degree(gb);
  if (!n || *n < 1) throw std::invalid_argument("presentation is not n-homogeneous");
  return {std::move(gb), *n};
}

int cmd_check(const std::string& file, int depth) {
  QuiverDocument doc = parse_document(read_file(file));
  const Presentation& p = doc.presentation;
  if (!is_acyclic(p.quiver))
    throw std::invalid_argument("cyclic quiver: finite dimensionality not certified");
  GradedBasis gb = graded_basis(p, longest_path_length(p.quiver) + 1);
  auto n = homogeneity_degree(gb);
  if (n)
    std::cout << "n-homogeneous: yes (n = " << *n << ")\n";
  else
    std::cout << "n-homogeneous: no\n";
  std::cout << "quadratic: " << (p.is_quadratic() ? "yes" : "no") << "\n";
  if (p.is_quadratic()) {
    if (depth <= 0) depth = default_witness_depth(n ? *n : 1);
    KoszulWitness w = koszul_witness(p, depth);
    std::cout << "koszul witness: " << (w.pass ? "pass" : "fail") << " (" << w.detail << ")\n";
  } else {
    std::cout << "koszul witness: skipped (not quadratic)\n";
  }
  return 0;
}

int cmd_dual(const std::string& file) {
  QuiverDocument doc = parse_document(read_file(file));
  std::cout << serialize_document(quadratic_dual(doc.presentation), doc.n_hint);
  return 0;
}

int cmd_trivext(const std::string& file, const std::string& twist) {
  QuiverDocument doc = parse_document(read_file(file));
  Pipeline pl = homogeneous_pipeline(doc.presentation);
  ReturningArrowQuiver raq = returning_arrow_quiver(pl.gb, pl.n);
  TwistSpec spec = (twist == "nu") ? TwistSpec::nu(pl.n) : TwistSpec::identity();
  TrivExtAlgebra alg(pl.gb, pl.n, spec);
  Presentation pres = trivext_relations(raq, alg);
  TrivExtQuadraticity quad = is_trivext_quadratic(raq, alg);
  std::cout << serialize_document(pres, pl.n);
  std::cerr << "trivial extension quadratic: " << (quad.quadratic ? "yes" : "no") << " ("
            << quad.detail << ")\n";
  return 0;
}

int cmd_preproj(const std::string& file, bool verify_oracle) {
  QuiverDocument doc = parse_document(read_file(file));
  Pipeline pl = homogeneous_pipeline(doc.presentation);
  ReturningArrowQuiver raq = returning_arrow_quiver(pl.gb, pl.n);
  Presentation gamma = quadratic_dual(doc.presentation);
  PreprojPresentation pi = preproj_presentation(gamma, pl.gb, pl.n, raq);
  if (verify_oracle) {
    GradedBasis gbg = graded_basis(gamma, std::max(2, pl.n));
    KoszulBimoduleComplex cx = koszul_complex_maps(pl.gb, gbg, pl.n);
    const auto& subtop = pl.gb.basis(pl.n - 1);
    for (Index qi = 0; qi < static_cast<Index>(subtop.size()); ++qi) {
      RelationElement direct = pi.zeta_relations[static_cast<std::size_t>(qi)];
      RelationElement oracle(raq.quiver, fstar_oracle(cx, pl.gb, raq, qi));
      if (!(direct == oracle)) {
        std::cerr << "oracle mismatch at " << subtop[static_cast<std::size_t>(qi)].render()
                  << ": " << direct.render() << " vs " << oracle.render() << "\n";
        return 2;
      }
    }
    std::cerr << "oracle check: ok (" << subtop.size() << " relations)\n";
  }
  std::cout << serialize_document(pi.presentation, pl.n);
  return 0;
}

int cmd_verify(const std::string& file, int depth, const std::string& format) {
  QuiverDocument doc = parse_document(read_file(file));
  if (depth <= 0) depth = 6;
  VerificationReport report = verify_main_theorem(doc.presentation, depth);
  if (format == "machine")
    std::cout << report_to_json(report);
  else
    std::cout << report.render_text();
  std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
  if (report.pass()) return 0;
  if (!report.hypotheses_ok()) {
    std::cerr << "hypothesis unmet\n";
    return 1;
  }
  std::cerr << "theorem violation: this indicates a bug\n";
  return 2;
}

int cmd_znq(const std::string& file, int from, int to, const std::string& slice_file) {
  QuiverDocument doc = parse_document(read_file(file));
  WindowQuiver w = znq_window(doc.presentation, from, to);
  if (w.n % 2 == 1)
    std::cerr << "note: the window instantiates the untwisted mixed relations; "
                 "for odd n the twisted variant differs by signs\n";
  if (slice_file.empty()) {
    std::cout << serialize_document(w.window, w.n);
    return 0;
  }
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(read_file(slice_file));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed slice file: ") + e.what());
  }
  if (!spec.is_object() || !spec.contains("levels") || !spec["levels"].is_object())
    throw std::invalid_argument("slice file needs a \"levels\" object");
  SliceSpec s;
  for (const auto& [vertex, level] : spec["levels"].items())
    s.levels[vertex] = level.get<int>();
  if (!is_complete_tau_slice(w, s)) throw std::invalid_argument("not a complete tau-slice");
  std::cout << serialize_document(slice_presentation(w, s), w.n);
  return 0;
}

int cmd_hilbert(const std::string& file, int max_degree) {
  QuiverDocument doc = parse_document(read_file(file));
  GradedBasis gb = graded_basis(doc.presentation, max_degree);
  for (int t = 0; t <= max_degree; ++t) std::cout << t << " " << gb.dim(t) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with bound quiver algebras"};
  app.require_subcommand(1);

  std::string file, slice_file, twist = "nu", format = "text";
  int depth = 0, from = 0, to = 0, max_degree = 6;
  bool verify_oracle = false;

  auto* check = app.add_subcommand("check", "homogeneity, quadraticity and koszul witness");
  check->add_option("file", file)->required();
  check->add_option("--depth", depth);

  auto* dual = app.add_subcommand("dual", "emit the quadratic dual presentation");
  dual->add_option("file", file)->required();

  auto* trivext = app.add_subcommand("trivext", "emit the extended presentation");
  trivext->add_option("file", file)->required();
  trivext->add_option("--twist", twist)->check(CLI::IsMember({"nu", "id"}));

  auto* preproj = app.add_subcommand("preproj", "emit the preprojective presentation");
  preproj->add_option("file", file)->required();
  preproj->add_flag("--verify-oracle", verify_oracle);

  auto* verify = app.add_subcommand("verify-theorem", "run the verification pipeline");
  verify->add_option("file", file)->required();
  verify->add_option("--depth", depth);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  auto* znq = app.add_subcommand("znq", "window of the level-indexed cover");
  znq->add_option("file", file)->required();
  znq->add_option("--from", from)->required();
  znq->add_option("--to", to)->required();
  znq->add_option("--slice", slice_file);

  auto* hilbert = app.add_subcommand("hilbert", "graded dimension table");
  hilbert->add_option("file", file)->required();
  hilbert->add_option("--max-degree", max_degree)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file, depth);
    if (dual->parsed()) return cmd_dual(file);
    if (trivext->parsed()) return cmd_trivext(file, twist);
    if (preproj->parsed()) return cmd_preproj(file, verify_oracle);
    if (verify->parsed()) return cmd_verify(file, depth, format);
    if (znq->parsed()) return cmd_znq(file, from, to, slice_file);
    if (hilbert->parsed()) return cmd_hilbert(file, max_degree);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
