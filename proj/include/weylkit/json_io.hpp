// JSON views of the library's reports, used by the command line tool, plus a
// checker for the schema subset the shipped schema files use. Objects keep
// insertion order (nlohmann::ordered_json): for fixed inputs the dumped text
// is byte-stable. Exact rationals serialize as strings, never as doubles.

#pragma once

#include "weylkit/blockmatch.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wk {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

inline OJson json_vec(const VecI& v) {
  OJson out = OJson::array();
  for (Int x : v) out.push_back(x);
  return out;
}

inline OJson json_vec(const std::vector<int>& v) {
  OJson out = OJson::array();
  for (int x : v) out.push_back(x);
  return out;
}

inline OJson json_vec(const VecQ& v) {
  OJson out = OJson::array();
  for (const Rat& x : v) out.push_back(to_string(x));
  return out;
}

inline OJson json_matrix(const MatI& m) {
  OJson out = OJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OJson row = OJson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

// {"w": [...], "t": [...]}: reduced word of the finite part over 0-based
// node indices, then the translation in coweight coordinates.
inline OJson element_json(const AffineWeyl& aw, const AffineElement& x) {
  OJson out;
  out["w"] = json_vec(aw.finite().word(x.w));
  out["t"] = json_vec(x.t);
  return out;
}

inline OJson rootdata_json(const RootDatum& rd) {
  OJson out;
  out["type"] = rd.type_string();
  out["rank"] = rd.rank();
  out["ss_rank"] = rd.ss_rank();
  out["positive_roots"] = rd.num_positive();
  out["factors"] = OJson::array();
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    OJson fac;
    fac["type"] = type_string({rd.factor(f)});
    fac["torus"] = rd.factor(f).torus;
    if (!rd.factor(f).torus) {
      fac["dual_coxeter"] = rd.dual_coxeter_number(f);
      fac["lacing"] = rd.lacing(f);
      fac["bad_prime_product"] = bad_prime_product(rd, f);
      fac["marks"] = json_vec(rd.marks(f));
      fac["comarks"] = json_vec(rd.comarks(f));
    }
    out["factors"].push_back(std::move(fac));
  }
  out["cartan"] = json_matrix(rd.cartan());
  out["rho"] = json_vec(rd.rho());
  return out;
}

inline OJson dual_level_json(const AffineWeyl& aw, const Level& level,
                             const LevelDuality& dual) {
  OJson out;
  out["type"] = aw.datum().type_string();
  out["level"] = level_string(aw.datum(), level);
  out["dual_type"] = dual.dual_datum().type_string();
  out["dual_level"] = level_string(dual.dual_datum(), dual.dual_level());
  out["num_generators"] = dual.source().num_generators();
  OJson gens = OJson::array();
  for (int g = 0; g < dual.source().num_generators(); ++g)
    gens.push_back(dual.generator_image(g));
  out["generator_image"] = std::move(gens);
  return out;
}

inline OJson goodness_json(const RootDatum& rd, const Level& level,
                           const GoodnessReport& report) {
  OJson out;
  out["type"] = rd.type_string();
  out["level"] = level_string(rd, level);
  out["good"] = report.good;
  out["decided"] = report.decided;
  OJson faces = OJson::array();
  for (const FaceReport& face : report.faces) {
    OJson fj;
    fj["factor"] = face.factor;
    fj["parabolic"] = json_vec(face.parabolic);
    fj["status"] = face.status == FaceStatus::witnessed    ? "witnessed"
                   : face.status == FaceStatus::impossible ? "impossible"
                                                           : "inconclusive";
    if (face.status == FaceStatus::witnessed) {
      fj["weight"] = json_vec(face.weight);
      fj["scale"] = face.scale;
      fj["shift"] = face.shift;
    }
    if (!face.note.empty()) fj["note"] = face.note;
    faces.push_back(std::move(fj));
  }
  out["faces"] = std::move(faces);
  return out;
}

inline OJson intweyl_json(const AffineWeyl& aw, const Level& level,
                          const IntegralWeyl& iw) {
  OJson out;
  out["type"] = aw.datum().type_string();
  out["level"] = level_string(aw.datum(), level);
  out["num_generators"] = iw.num_generators();
  OJson gens = OJson::array();
  for (int g = 0; g < iw.num_generators(); ++g) {
    OJson gj;
    gj["index"] = g;
    gj["affine"] = iw.is_affine_node(g);
    AffineCoroot c = iw.simple_coroot(g);
    gj["coroot"] = OJson{{"root", c.root}, {"level", c.level}};
    gj["element"] = element_json(aw, iw.generator(g));
    gens.push_back(std::move(gj));
  }
  out["generators"] = std::move(gens);
  int n = iw.num_generators();
  MatI cox(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cox(i, j) = detail::generator_pair_order(iw, i, j);
  out["coxeter_matrix"] = json_matrix(cox);
  return out;
}

inline OJson blocks_json(const AffineWeyl& aw, const Level& level, Int bound,
                         const std::vector<BlockDescriptor>& blocks) {
  OJson out;
  out["type"] = aw.datum().type_string();
  out["level"] = level_string(aw.datum(), level);
  out["bound"] = bound;
  OJson list = OJson::array();
  for (const BlockDescriptor& b : blocks) {
    OJson bj;
    bj["weight"] = json_vec(b.weight);
    bj["y"] = element_json(aw, b.minimal_element);
    bj["stabilizer"] = json_vec(b.stabilizer);
    bj["window_size"] = b.coset_window.size();
    list.push_back(std::move(bj));
  }
  out["blocks"] = std::move(list);
  out["summary"] = OJson{{"windows", blocks.size()}};
  return out;
}

inline OJson match_json(const AffineWeyl& aw, const Level& level, Int bound,
                        const BlockMatchReport& report) {
  OJson out;
  out["type"] = aw.datum().type_string();
  out["level"] = level_string(aw.datum(), level);
  out["bound"] = bound;
  OJson list = OJson::array();
  for (const BlockMatchEntry& e : report.entries) {
    OJson bj;
    bj["weight"] = json_vec(e.weight);
    bj["y"] = element_json(aw, e.minimal_element);
    bj["stabilizer"] = json_vec(e.window_stabilizer);
    bj["dual_stabilizer"] = json_vec(e.dual_stabilizer);
    bj["antidominant"] = e.antidominant;
    bj["verdict"] = e.match ? "MATCH" : "MISMATCH";
    list.push_back(std::move(bj));
  }
  out["blocks"] = std::move(list);
  out["summary"] =
      OJson{{"windows", report.entries.size()}, {"all_match", report.all_match}};
  return out;
}

inline OJson coxeter_iso_json(const AffineWeyl& aw, const Level& level,
                              const LevelDuality& dual,
                              const CoxeterIsoReport& report) {
  OJson out;
  out["type"] = aw.datum().type_string();
  out["level"] = level_string(aw.datum(), level);
  out["dual_type"] = dual.dual_datum().type_string();
  out["dual_level"] = level_string(dual.dual_datum(), dual.dual_level());
  out["ok"] = report.ok;
  out["generators_match"] = report.generators_match;
  out["coxeter_equal"] = report.coxeter_equal;
  out["lattice_basis_match"] = report.lattice_basis_match;
  out["ball_radius"] = report.ball_radius;
  out["ball_bijection"] = report.ball_bijection;
  out["lengths_match"] = report.lengths_match;
  out["generator_image"] = json_vec(report.generator_image);
  out["coxeter_matrix"] = json_matrix(report.coxeter_source);
  return out;
}

inline OJson parahoric_json(const AffineWeyl& aw, const std::vector<int>& levi,
                            Int bound, const ParahoricReport& report) {
  OJson out;
  out["type"] = aw.datum().type_string();
  out["levi"] = json_vec(levi);
  out["bound"] = bound;
  out["equal"] = report.equal;
  out["via_descents"] = report.via_descents.size();
  out["via_labels"] = report.via_labels.size();
  out["via_coset_maxima"] = report.via_coset_maxima.size();
  OJson minima = OJson::array();
  for (const AffineElement& x : report.via_descents)
    minima.push_back(element_json(aw, x));
  out["minima"] = std::move(minima);
  OJson ties = OJson::array();
  for (const AffineElement& x : report.tied_cosets)
    ties.push_back(element_json(aw, x));
  out["tied_cosets"] = std::move(ties);
  return out;
}

// -- schema checking ---------------------------------------------------------------

// Validates against the subset of JSON Schema the shipped files use: "type",
// "properties", "required", "additionalProperties": false, "items" with a
// single schema, and "enum". Returns the path of the first violation, or
// nothing when the value conforms.
inline std::optional<std::string> schema_violation(const Json& schema,
                                                   const Json& value,
                                                   const std::string& path = "$") {
  if (schema.contains("type")) {
    const std::string& t = schema["type"].get_ref<const std::string&>();
    bool ok = (t == "object" && value.is_object()) ||
              (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) ||
              (t == "integer" && value.is_number_integer()) ||
              (t == "number" && value.is_number()) ||
              (t == "boolean" && value.is_boolean());
    if (!ok) return path + ": expected " + t;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const Json& option : schema["enum"])
      if (option == value) hit = true;
    if (!hit) return path + ": not in enum";
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const Json& key : schema["required"])
        if (!value.contains(key.get_ref<const std::string&>()))
          return path + ": missing " + key.get<std::string>();
    const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (const auto& [key, sub] : value.items()) {
      if (props && props->contains(key)) {
        if (auto bad = schema_violation((*props)[key], sub, path + "." + key))
          return bad;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"] == false) {
        return path + ": unexpected key " + key;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (auto bad = schema_violation(schema["items"], value[i],
                                      path + "[" + std::to_string(i) + "]"))
        return bad;
  }
  return std::nullopt;
}

}  // namespace wk
