#include "polyvol/andreev.hpp"

#include "polyvol/circuits.hpp"
#include "polyvol/generators.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <sstream>

namespace polyvol {

const char* to_string(vertex_kind k) {
  switch (k) {
    case vertex_kind::finite: return "finite";
    case vertex_kind::ideal: return "ideal";
    case vertex_kind::hyperideal: return "hyperideal";
  }
  return "?";
}

bool realizability_report::violates(const std::string& c) const {
  return std::any_of(violated.begin(), violated.end(),
                     [&](const violation& v) { return v.condition == c; });
}

namespace {

void check_preconditions(const labeled_polyhedron& p) {
  if (p.vertex_count() <= 4)
    throw andreev_error(andreev_errc::too_few_vertices,
                        "polyhedron has " + std::to_string(p.vertex_count()) +
                            " vertices, more than 4 required");
  for (int e = 0; e < p.edge_count(); ++e)
    if (p.label(e).radians() > std::numbers::pi / 2 + angle_tolerance)
      throw andreev_error(andreev_errc::obtuse_label, "edge " + std::to_string(e) + " is obtuse");
}

std::string edge_list(const labeled_polyhedron& p, const std::vector<int>& es) {
  std::ostringstream os;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& e = p.edges()[es[i]];
    os << (i ? " " : "") << '(' << e.u << ',' << e.v << ')';
  }
  return os.str();
}

void note_tie(realizability_report& r, bool tie, const std::string& what) {
  if (tie) r.flags.push_back("near tie: " + what);
}

// prismatic circuit conditions; names differ between the two theorems
void check_circuits(const labeled_polyhedron& p, realizability_report& r, const char* c3,
                    const char* c4) {
  for (int k : {3, 4}) {
    for (const auto& c : enumerate_prismatic_circuits(p, k)) {
      note_tie(r, c.near_tie, std::to_string(k) + "-circuit " + edge_list(p, c.edges));
      if (c.geometry == circuit_geometry::hyperbolic) continue;
      violation v;
      v.condition = k == 3 ? c3 : c4;
      v.witness = std::string("prismatic ") + std::to_string(k) + "-circuit " +
                  edge_list(p, c.edges) + " has label sum >= " + (k == 3 ? "pi" : "2pi");
      v.edges = c.edges;
      v.faces = c.faces;
      r.violated.push_back(v);
    }
  }
}

void check_two_edge(const labeled_polyhedron& p, const std::vector<vertex_kind>& kinds,
                    realizability_report& r, const char* name) {
  const auto& m = p.map();
  std::vector<std::set<int>> fverts(m.face_count());
  for (int f = 0; f < m.face_count(); ++f) fverts[f] = {m.faces()[f].begin(), m.faces()[f].end()};
  auto shared_edge = [&](int f, int g) {
    const auto& fc = m.faces()[f];
    for (std::size_t i = 0; i < fc.size(); ++i) {
      int a = fc[i], b = fc[(i + 1) % fc.size()];
      if (m.face_left_of(b, a) == g) return m.edge_index(a, b);
    }
    return -1;
  };
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (kinds[v] != vertex_kind::ideal) continue;
    const auto& around = m.vertex_faces(v);
    for (std::size_t x = 0; x < around.size(); ++x) {
      for (std::size_t y = x + 1; y < around.size(); ++y) {
        int fi = around[x], fk = around[y];
        std::vector<int> common;
        std::set_intersection(fverts[fi].begin(), fverts[fi].end(), fverts[fk].begin(),
                              fverts[fk].end(), std::back_inserter(common));
        if (common.size() != 1) continue;
        for (int fj = 0; fj < m.face_count(); ++fj) {
          if (fj == fi || fj == fk) continue;
          int eij = shared_edge(fi, fj), ejk = shared_edge(fj, fk);
          if (eij < 0 || ejk < 0) continue;
          const auto& a = m.edge_at(eij);
          const auto& b = m.edge_at(ejk);
          if (a.u == v || a.v == v || b.u == v || b.v == v) continue;
          std::vector<angle> parts{p.label(eij), p.label(ejk)};
          auto cmp = compare_sum(parts, rational(1));
          note_tie(r, cmp.near_tie, "two-edge condition at vertex " + std::to_string(v));
          if (cmp.sign < 0) continue;
          violation w;
          w.condition = name;
          w.witness = "faces " + std::to_string(fi) + "," + std::to_string(fj) + "," +
                      std::to_string(fk) + " around ideal vertex " + std::to_string(v) +
                      ": edges " + edge_list(p, {eij, ejk}) + " sum >= pi";
          w.vertices = {v};
          w.edges = {eij, ejk};
          w.faces = {fi, fj, fk};
          r.violated.push_back(w);
        }
      }
    }
  }
}

std::vector<vertex_kind> link_kinds(const labeled_polyhedron& p, realizability_report& r) {
  std::vector<vertex_kind> kinds;
  for (int v = 0; v < p.vertex_count(); ++v) {
    auto c = classify_vertex_link(p, v);
    note_tie(r, c.near_tie, "vertex " + std::to_string(v));
    kinds.push_back(c.type == link_type::spherical
                        ? vertex_kind::finite
                        : (c.type == link_type::euclidean ? vertex_kind::ideal
                                                          : vertex_kind::hyperideal));
  }
  return kinds;
}

void finish(realizability_report& r) {
  r.realizable = r.violated.empty();
  r.finite_volume =
      r.realizable && std::none_of(r.vertex_types.begin(), r.vertex_types.end(),
                                   [](vertex_kind k) { return k == vertex_kind::hyperideal; });
}

}  // namespace

realizability_report check_andreev(const labeled_polyhedron& p) {
  check_preconditions(p);
  realizability_report r;
  r.vertex_types = link_kinds(p, r);
  for (int v = 0; v < p.vertex_count(); ++v) {
    int d = p.degree(v);
    if (d != 3 && d != 4) {
      r.violated.push_back({"A1", "vertex " + std::to_string(v) + " has degree " + std::to_string(d), {v}, {}, {}});
      continue;
    }
    auto k = r.vertex_types[v];
    if (d == 3 && k == vertex_kind::hyperideal)
      r.violated.push_back({"A2", "labels at vertex " + std::to_string(v) + " sum below pi", {v}, {}, {}});
    if (d == 4 && k != vertex_kind::ideal)
      r.violated.push_back({"A3", "labels at degree-4 vertex " + std::to_string(v) + " do not sum to 2pi", {v}, {}, {}});
  }
  check_circuits(p, r, "A4", "A5");
  if (auto pr = as_prism(p); pr && pr->n == 3) {
    std::vector<angle> parts;
    std::vector<int> es = pr->a;
    es.insert(es.end(), pr->b.begin(), pr->b.end());
    for (int e : es) parts.push_back(p.label(e));
    auto cmp = compare_sum(parts, rational(3));
    note_tie(r, cmp.near_tie, "triangular prism condition");
    if (cmp.sign >= 0) {
      violation v;
      v.condition = "A6";
      v.witness = "triangular prism: triangular-face edges " + edge_list(p, es) + " sum >= 3pi";
      v.edges = es;
      r.violated.push_back(v);
    }
  }
  check_two_edge(p, r.vertex_types, r, "A7");
  finish(r);
  return r;
}

realizability_report check_generalized(const labeled_polyhedron& p) {
  check_preconditions(p);
  if (auto pr = as_prism(p); pr && pr->n == 3)
    throw andreev_error(andreev_errc::is_triangular_prism, "input is a triangular prism");
  realizability_report r;
  r.vertex_types = link_kinds(p, r);
  check_circuits(p, r, "G1", "G2");
  check_two_edge(p, r.vertex_types, r, "G3");
  finish(r);
  return r;
}

}  // namespace polyvol
