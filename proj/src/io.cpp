#include "pathalg/io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace pathalg {

using nlohmann::json;
using nlohmann::ordered_json;

QuiverDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("malformed document: not an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("malformed document: missing \"vertices\"");
  if (!doc.contains("arrows") || !doc["arrows"].is_array())
    throw std::invalid_argument("malformed document: missing \"arrows\"");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("malformed document: vertex is not a string");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < doc["arrows"].size(); ++k) {
    const auto& a = doc["arrows"][k];
    if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to"))
      throw std::invalid_argument("arrow " + std::to_string(k) +
                                  ": expected {name, from, to}");
    arrows.push_back({a["name"].get<std::string>(), a["from"].get<std::string>(),
                      a["to"].get<std::string>()});
  }
  Quiver quiver(vertices, arrows);

  std::vector<PathLinComb> raw;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array())
      throw std::invalid_argument("malformed document: \"relations\" is not a list");
    for (std::size_t r = 0; r < doc["relations"].size(); ++r) {
      const auto& rel = doc["relations"][r];
      const std::string where = "relation " + std::to_string(r);
      if (!rel.is_array()) throw std::invalid_argument(where + ": expected a list of terms");
      PathLinComb combo;
      for (std::size_t t = 0; t < rel.size(); ++t) {
        const auto& term = rel[t];
        const std::string at = where + ", term " + std::to_string(t);
        if (!term.is_object() || !term.contains("coeff") || !term.contains("path"))
          throw std::invalid_argument(at + ": expected {coeff, path}");
        Rat coeff;
        try {
          coeff = parse_rat(term["coeff"].get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw std::invalid_argument(at + ": " + e.what());
        }
        std::vector<std::string> names;
        for (const auto& nm : term["path"]) {
          std::string name = nm.get<std::string>();
          if (!quiver.arrow_index(name))
            throw std::invalid_argument(at + ": unknown arrow '" + name + "'");
          names.push_back(std::move(name));
        }
        Path path = [&] {
          try {
            return Path::of_arrows(quiver, names);
          } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(at + ": " + e.what());
          }
        }();
        combo.push_back({std::move(path), std::move(coeff)});
      }
      raw.push_back(std::move(combo));
    }
  }

  QuiverDocument out{Presentation{quiver, normalize_relations(quiver, raw)}, std::nullopt};
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer())
      throw std::invalid_argument("malformed document: \"n\" is not an integer");
    out.n_hint = doc["n"].get<int>();
  }
  return out;
}

std::string serialize_document(const Presentation& p, std::optional<int> n_hint) {
  ordered_json doc;
  doc["vertices"] = p.quiver.vertices();
  doc["arrows"] = ordered_json::array();
  for (const Arrow& a : p.quiver.arrows())
    doc["arrows"].push_back({{"name", a.name}, {"from", a.source}, {"to", a.target}});
  doc["relations"] = ordered_json::array();
  for (const RelationElement& r : p.relations) {
    ordered_json rel = ordered_json::array();
    for (const auto& t : r.terms())
      rel.push_back({{"coeff", rat_to_string(t.coeff)}, {"path", t.path.arrows()}});
    doc["relations"].push_back(std::move(rel));
  }
  if (n_hint) doc["n"] = *n_hint;
  return doc.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  if (report.n) doc["n"] = *report.n;
  doc["stages"] = ordered_json::array();
  for (const auto& s : report.stages)
    doc["stages"].push_back({{"name", s.name},
                             {"pass", s.pass},
                             {"skipped", s.skipped},
                             {"detail", s.detail}});
  doc["graded_dimensions"] = report.lambda_dims;
  doc["blocks"] = ordered_json::array();
  for (const auto& b : report.blocks)
    doc["blocks"].push_back({{"source", b.source},
                             {"target", b.target},
                             {"paths", b.path_count},
                             {"extension_span", b.trivext_dim},
                             {"preprojective_span", b.preproj_dim},
                             {"sum_ok", b.sum_ok},
                             {"complement_ok", b.complement_ok}});
  ordered_json corr;
  corr["rows"] = ordered_json::array();
  for (const auto& row : report.corroboration.rows)
    corr["rows"].push_back(
        {{"degree", row.degree}, {"preprojective", row.dim_a}, {"dual_of_extension", row.dim_b}});
  ordered_json blocks = ordered_json::object();
  for (const auto& [key, dims] : report.corroboration.block_dims) {
    ordered_json pair;
    pair["preprojective"] = dims.first;
    pair["dual_of_extension"] = dims.second;
    blocks[key.first + "->" + key.second] = std::move(pair);
  }
  corr["block_dimensions"] = std::move(blocks);
  corr["equal"] = report.corroboration.equal;
  corr["first_mismatch"] = report.corroboration.first_mismatch;
  doc["corroboration"] = std::move(corr);
  doc["subspace_identity"] = report.identity_ok();
  doc["result"] = report.pass() ? "pass"
                                : (report.hypotheses_ok() ? "theorem-violation" : "hypothesis-unmet");
  return doc.dump(2) + "\n";
}

}  // namespace pathalg
