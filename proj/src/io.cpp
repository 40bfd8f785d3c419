#include "polyvol/io.hpp"

#include <cstdio>
#include <cstdlib>

namespace polyvol {

using nlohmann::json;

double sig9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

namespace {

angle label_value(const json& l) {
  if (l.contains("pi_over")) {
    const auto& k = l["pi_over"];
    if (!k.is_number_integer() || k.get<long long>() < 1) throw format_error("pi_over must be a positive integer");
    return angle::pi_over(k.get<long long>());
  }
  if (l.contains("pi_fraction")) {
    if (!l["pi_fraction"].is_string()) throw format_error("pi_fraction must be a string \"p/q\"");
    try {
      return parse_pi_fraction(l["pi_fraction"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw format_error(e.what());
    }
  }
  if (l.contains("radians")) {
    if (!l["radians"].is_number()) throw format_error("radians must be a number");
    return angle::from_radians(l["radians"].get<double>());
  }
  throw format_error("label needs pi_over, pi_fraction or radians");
}

json label_json(const angle& a) {
  if (!a.is_exact()) return {{"radians", a.radians()}};
  auto q = a.pi_multiple();
  if (q.numerator() == 1) return {{"pi_over", q.denominator()}};
  return {{"pi_fraction", std::to_string(q.numerator()) + "/" + std::to_string(q.denominator())}};
}

}  // namespace

labeled_polyhedron polyhedron_from_json(const json& doc) {
  if (!doc.is_object()) throw format_error("document must be an object");
  for (const char* k : {"vertices", "faces", "labels"})
    if (!doc.contains(k)) throw format_error(std::string("missing field '") + k + "'");
  if (!doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 1)
    throw format_error("'vertices' must be a positive integer");
  const int n = doc["vertices"].get<int>();
  if (!doc["faces"].is_array()) throw format_error("'faces' must be an array");
  std::vector<std::vector<int>> faces;
  for (const auto& f : doc["faces"]) {
    if (!f.is_array()) throw format_error("each face must be an array of vertex indices");
    std::vector<int> cyc;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw format_error("vertex indices must be integers");
      int x = v.get<int>();
      if (x < 0 || x >= n) throw format_error("vertex index " + std::to_string(x) + " out of range");
      cyc.push_back(x);
    }
    faces.push_back(std::move(cyc));
  }
  if (!doc["labels"].is_array()) throw format_error("'labels' must be an array");
  std::vector<edge_label> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_object() || !l.contains("edge") || !l["edge"].is_array() || l["edge"].size() != 2 ||
        !l["edge"][0].is_number_integer() || !l["edge"][1].is_number_integer())
      throw format_error("each label needs \"edge\": [u, v]");
    labels.push_back({l["edge"][0].get<int>(), l["edge"][1].get<int>(), label_value(l)});
  }
  return build_polyhedron(n, std::move(faces), labels);
}

labeled_polyhedron read_polyhedron(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw format_error(std::string("not valid JSON: ") + e.what());
  }
  return polyhedron_from_json(doc);
}

json to_json(const labeled_polyhedron& p) {
  json labels = json::array();
  for (int e = 0; e < p.edge_count(); ++e) {
    json l = label_json(p.label(e));
    l["edge"] = {p.edges()[e].u, p.edges()[e].v};
    labels.push_back(std::move(l));
  }
  return {{"vertices", p.vertex_count()}, {"faces", p.faces()}, {"labels", std::move(labels)}};
}

json to_json(const realizability_report& r) {
  json violated = json::array();
  for (const auto& v : r.violated)
    violated.push_back({{"condition", v.condition},
                        {"witness", v.witness},
                        {"vertices", v.vertices},
                        {"edges", v.edges},
                        {"faces", v.faces}});
  json types = json::array();
  for (auto k : r.vertex_types) types.push_back(to_string(k));
  return {{"realizable", r.realizable},
          {"finite_volume", r.finite_volume},
          {"violated", std::move(violated)},
          {"vertex_types", std::move(types)},
          {"flags", r.flags}};
}

json to_json(const decomposition_result& r) {
  json comps = json::array();
  for (const auto& q : r.seifert_fibered) comps.push_back({{"class", "SF"}, {"polyhedron", to_json(q)}});
  for (const auto& q : r.atoroidal) comps.push_back({{"class", "AT"}, {"polyhedron", to_json(q)}});
  json splits = json::array();
  for (const auto& s : r.splits)
    splits.push_back({{"step", s.step},
                      {"crossed_edge_ids", s.crossed},
                      {"nontrivial", s.nontrivial},
                      {"c_before", s.c_before},
                      {"c_after", s.c_after}});
  return {{"components", std::move(comps)},
          {"seifert_fibered", r.seifert_fibered.size()},
          {"atoroidal", r.atoroidal.size()},
          {"spherical_splits", r.spherical_splits},
          {"euclidean3_splits", r.euclidean3_splits},
          {"splits", std::move(splits)},
          {"trace", r.trace},
          {"flags", r.flags}};
}

namespace {

json contribution_json(const contribution& c) {
  return {{"component", c.component},
          {"theorem", c.theorem},
          {"value", sig9(c.value)},
          {"expression", to_string(c.expr)}};
}

}  // namespace

json to_json(const bound_report& r) {
  json breakdown = json::array(), upper = json::array(), cands = json::array(), comps = json::array();
  for (const auto& c : r.breakdown) breakdown.push_back(contribution_json(c));
  for (const auto& c : r.upper_breakdown) upper.push_back(contribution_json(c));
  for (const auto& c : r.candidates) cands.push_back(contribution_json(c));
  for (const auto& c : r.components)
    comps.push_back({{"id", c.id},
                     {"role", c.role},
                     {"ideal_vertices", c.n_ideal},
                     {"finite_vertices", c.n_finite},
                     {"region_vertices", c.region_vertices}});
  const auto& k = r.counts;
  json counts = {{"N", k.n},        {"N3", k.n3},           {"N4", k.n4},          {"M3", k.m3},
                 {"n2", k.trunc.n2}, {"n3", k.trunc.n3},     {"n4", k.trunc.n4},    {"E33", k.trunc.e33},
                 {"E34", k.trunc.e34}, {"N_inf_hat", k.trunc.ideal()}, {"N_F_hat", k.trunc.finite()}};
  return {{"lower", sig9(r.lower)},
          {"upper", sig9(r.upper)},
          {"lower_route", r.lower_route},
          {"breakdown", std::move(breakdown)},
          {"upper_candidates", std::move(upper)},
          {"lower_candidates", std::move(cands)},
          {"components", std::move(comps)},
          {"counts", std::move(counts)},
          {"flags", r.flags}};
}

}  // namespace polyvol
