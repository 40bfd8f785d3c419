#include "polyvol/rewrite.hpp"

#include "polyvol/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polyvol {

namespace {

enum class vclass { n2, n3, n4 };

std::vector<vclass> vertex_classes(const labeled_polyhedron& p) {
  const auto& m = p.map();
  std::vector<vclass> cls(m.vertex_count(), vclass::n3);
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (m.degree(v) == 4) {
      cls[v] = vclass::n4;
      continue;
    }
    const auto& r = m.rotation(v);
    if (std::all_of(r.begin(), r.end(), [&](int w) { return m.degree(w) == 4; })) cls[v] = vclass::n2;
  }
  return cls;
}

int max_edge_id(const labeled_polyhedron& p) {
  const auto& ids = p.origin().edge;
  return ids.empty() ? -1 : *std::max_element(ids.begin(), ids.end());
}

void dedupe_cyclic(std::vector<int>& f) {
  std::vector<int> g;
  for (int x : f)
    if (g.empty() || g.back() != x) g.push_back(x);
  while (g.size() > 1 && g.front() == g.back()) g.pop_back();
  f = std::move(g);
}

}  // namespace

truncation_counts truncation_counts_of(const labeled_polyhedron& p) {
  const auto cls = vertex_classes(p);
  truncation_counts c;
  for (auto k : cls) {
    if (k == vclass::n2) ++c.n2;
    else if (k == vclass::n3) ++c.n3;
    else ++c.n4;
  }
  for (const auto& e : p.edges()) {
    auto a = cls[e.u], b = cls[e.v];
    if (a == vclass::n3 && b == vclass::n3) ++c.e33;
    else if ((a == vclass::n3 && b == vclass::n4) || (a == vclass::n4 && b == vclass::n3)) ++c.e34;
  }
  return c;
}

full_truncation_result full_truncation(const labeled_polyhedron& p) {
  const auto& m = p.map();
  const auto cls = vertex_classes(p);
  const int n = m.vertex_count();
  std::vector<int> id(n, -1), mid(m.edge_count(), -1);
  std::vector<int> old_vertex;  // new index -> old vertex, or -1 for midpoints
  std::vector<int> old_edge;    // new index -> old edge for midpoints
  source_tags tags;
  for (int v = 0; v < n; ++v)
    if (cls[v] != vclass::n3) {
      id[v] = static_cast<int>(old_vertex.size());
      old_vertex.push_back(v);
      old_edge.push_back(-1);
      tags.vertex.push_back(p.origin().vertex[v]);
    }
  for (int e = 0; e < m.edge_count(); ++e) {
    const auto& ed = m.edge_at(e);
    if (cls[ed.u] == vclass::n3 || cls[ed.v] == vclass::n3) {
      mid[e] = static_cast<int>(old_vertex.size());
      old_vertex.push_back(-1);
      old_edge.push_back(e);
      tags.vertex.push_back(-1);
    }
  }

  std::vector<std::vector<int>> faces;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& fc = m.faces()[f];
    const int k = static_cast<int>(fc.size());
    std::vector<int> g;
    for (int j = 0; j < k; ++j) {
      int v = fc[j];
      if (cls[v] != vclass::n3) {
        g.push_back(id[v]);
        continue;
      }
      int prev = fc[(j + k - 1) % k], next = fc[(j + 1) % k];
      g.push_back(mid[m.edge_index(prev, v)]);
      g.push_back(mid[m.edge_index(v, next)]);
    }
    dedupe_cyclic(g);
    faces.push_back(g);
    tags.face.push_back(p.origin().face[f]);
    tags.kind.push_back(p.origin().kind[f]);
  }
  for (int v = 0; v < n; ++v) {
    if (cls[v] != vclass::n3) continue;
    std::vector<int> tri;
    for (int w : m.rotation(v)) tri.push_back(mid[m.edge_index(v, w)]);
    faces.push_back(tri);
    tags.face.push_back(-1);
    tags.kind.push_back(face_kind::truncation);
  }

  // edge ids: halves keep the id of their edge, triangle sides are new
  const int base = max_edge_id(p) + 1;
  std::map<std::pair<int, int>, int> fresh;
  tags.edge = [&](int a, int b) {
    if (old_vertex[a] >= 0 && old_vertex[b] >= 0)
      return p.origin().edge[m.edge_index(old_vertex[a], old_vertex[b])];
    if (old_vertex[a] >= 0) return p.origin().edge[old_edge[b]];
    if (old_vertex[b] >= 0) return p.origin().edge[old_edge[a]];
    auto key = std::minmax(a, b);
    auto it = fresh.find(key);
    if (it == fresh.end()) it = fresh.emplace(key, base + static_cast<int>(fresh.size())).first;
    return it->second;
  };
  auto poly = build_polyhedron(static_cast<int>(old_vertex.size()), faces,
                               [](int, int) { return angle::pi_over(2); }, build_options{}, &tags);
  return {std::move(poly), truncation_counts_of(p)};
}

labeled_polyhedron truncate_hyperideal(const labeled_polyhedron& p) {
  const auto& m = p.map();
  const int n = m.vertex_count();
  std::vector<bool> cut(n, false);
  bool any = false;
  for (int v = 0; v < n; ++v)
    if (classify_vertex_link(p, v).type == link_type::hyperbolic) cut[v] = any = true;
  if (!any) return p;

  std::vector<int> id(n, -1);
  std::map<std::pair<int, int>, int> corner;  // (vertex, edge) -> new vertex
  std::vector<int> old_vertex, old_edge;
  source_tags tags;
  for (int v = 0; v < n; ++v) {
    if (cut[v]) continue;
    id[v] = static_cast<int>(old_vertex.size());
    old_vertex.push_back(v);
    old_edge.push_back(-1);
    tags.vertex.push_back(p.origin().vertex[v]);
  }
  for (int v = 0; v < n; ++v) {
    if (!cut[v]) continue;
    for (int w : m.rotation(v)) {
      int e = m.edge_index(v, w);
      corner[{v, e}] = static_cast<int>(old_vertex.size());
      old_vertex.push_back(-1);
      old_edge.push_back(e);
      tags.vertex.push_back(-1);
    }
  }
  std::vector<std::vector<int>> faces;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& fc = m.faces()[f];
    const int k = static_cast<int>(fc.size());
    std::vector<int> g;
    for (int j = 0; j < k; ++j) {
      int v = fc[j];
      if (!cut[v]) {
        g.push_back(id[v]);
        continue;
      }
      g.push_back(corner[{v, m.edge_index(fc[(j + k - 1) % k], v)}]);
      g.push_back(corner[{v, m.edge_index(v, fc[(j + 1) % k])}]);
    }
    faces.push_back(g);
    tags.face.push_back(p.origin().face[f]);
    tags.kind.push_back(p.origin().kind[f]);
  }
  for (int v = 0; v < n; ++v) {
    if (!cut[v]) continue;
    std::vector<int> poly;
    for (int w : m.rotation(v)) poly.push_back(corner[{v, m.edge_index(v, w)}]);
    faces.push_back(poly);
    tags.face.push_back(-1);
    tags.kind.push_back(face_kind::truncation);
  }

  const int base = max_edge_id(p) + 1;
  std::map<std::pair<int, int>, int> fresh;
  // old edge behind a new edge, or -1 for the sides of a cut polygon
  auto source = [&](int a, int b) {
    if (old_vertex[a] >= 0 && old_vertex[b] >= 0) return m.edge_index(old_vertex[a], old_vertex[b]);
    if (old_vertex[a] >= 0) return old_edge[b];
    if (old_vertex[b] >= 0) return old_edge[a];
    return old_edge[a] == old_edge[b] ? old_edge[a] : -1;
  };
  tags.edge = [&](int a, int b) {
    int e = source(a, b);
    if (e >= 0) return p.origin().edge[e];
    auto key = std::minmax(a, b);
    auto it = fresh.find(key);
    if (it == fresh.end()) it = fresh.emplace(key, base + static_cast<int>(fresh.size())).first;
    return it->second;
  };
  return build_polyhedron(static_cast<int>(old_vertex.size()), faces,
                          [&](int a, int b) {
                            int e = source(a, b);
                            return e >= 0 ? p.label(e) : angle::pi_over(2);
                          },
                          build_options{}, &tags);
}

std::vector<int> parallel_triangles(const labeled_polyhedron& p) {
  const auto& m = p.map();
  std::vector<int> out;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& t = m.faces()[f];
    if (t.size() != 3) continue;
    if (!std::all_of(t.begin(), t.end(), [&](int v) { return m.degree(v) == 3; })) continue;
    std::vector<int> outer;
    for (int v : t)
      for (int w : m.rotation(v))
        if (std::find(t.begin(), t.end(), w) == t.end()) outer.push_back(w);
    std::set<int> distinct(outer.begin(), outer.end());
    if (outer.size() == 3 && distinct.size() == 3) out.push_back(f);
  }
  return out;
}

namespace {

std::vector<int> triangle_key(const labeled_polyhedron& p, int f) {
  const auto& t = p.faces()[f];
  std::vector<int> key;
  for (int i = 0; i < 3; ++i) key.push_back(p.origin().edge[p.edge_index(t[i], t[(i + 1) % 3])]);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

labeled_polyhedron collapse_triangle(const labeled_polyhedron& p, int f) {
  const auto& m = p.map();
  const auto t = m.faces()[f];
  const int n = m.vertex_count();
  std::vector<int> id(n, -1), old_vertex;
  source_tags tags;
  for (int v = 0; v < n; ++v) {
    if (std::find(t.begin(), t.end(), v) != t.end()) continue;
    id[v] = static_cast<int>(old_vertex.size());
    old_vertex.push_back(v);
    tags.vertex.push_back(p.origin().vertex[v]);
  }
  const int z = static_cast<int>(old_vertex.size());
  old_vertex.push_back(-1);
  tags.vertex.push_back(-1);
  for (int v : t) id[v] = z;

  std::vector<std::vector<int>> faces;
  for (int g = 0; g < m.face_count(); ++g) {
    if (g == f) continue;
    std::vector<int> h;
    for (int v : m.faces()[g]) h.push_back(id[v]);
    dedupe_cyclic(h);
    faces.push_back(h);
    tags.face.push_back(p.origin().face[g]);
    tags.kind.push_back(p.origin().kind[g]);
  }
  auto source = [&](int a, int b) {
    if (a == z) std::swap(a, b);
    int w = old_vertex[a];
    if (b != z) return m.edge_index(w, old_vertex[b]);
    for (int c : t)
      if (int e = m.edge_index(c, w); e >= 0) return e;
    return -1;
  };
  tags.edge = [&](int a, int b) { return p.origin().edge[source(a, b)]; };
  return build_polyhedron(z + 1, faces, [&](int a, int b) { return p.label(source(a, b)); },
                          build_options{}, &tags);
}

extension_result extend(const labeled_polyhedron& p) {
  extension_result r{p, 0, 0};
  std::set<std::vector<int>> skipped;
  while (true) {
    bool changed = false;
    for (int f : parallel_triangles(r.polyhedron)) {
      auto key = triangle_key(r.polyhedron, f);
      if (skipped.count(key)) continue;
      try {
        r.polyhedron = collapse_triangle(r.polyhedron, f);
        ++r.collapsed;
        changed = true;
        break;
      } catch (const polyhedron_error&) {
        skipped.insert(key);
      }
    }
    if (!changed) break;
  }
  r.skipped = static_cast<int>(skipped.size());
  return r;
}

const char* to_string(rewrite_errc c) {
  switch (c) {
    case rewrite_errc::has_prismatic_3_circuit: return "HasPrismatic3Circuit";
    case rewrite_errc::not_coxeter: return "NotCoxeter";
    case rewrite_errc::too_few_faces: return "TooFewFaces";
  }
  return "?";
}

uniformized uniformize_labeling(const labeled_polyhedron& p) {
  if (!p.is_coxeter()) throw rewrite_error(rewrite_errc::not_coxeter, "labels are not all of the form pi/n");
  if (p.face_count() < 6)
    throw rewrite_error(rewrite_errc::too_few_faces, "needs at least 6 faces");
  if (!enumerate_prismatic_circuits(p, 3).empty())
    throw rewrite_error(rewrite_errc::has_prismatic_3_circuit, "polyhedron has a prismatic 3-circuit");
  std::vector<angle> labels;
  for (const auto& a : p.labels())
    labels.push_back(a.coxeter_order() == 2 ? angle::pi_over(2) : angle::pi_over(3));
  auto q = p.with_labels(std::move(labels));
  auto report = check_andreev(q);
  return {std::move(q), std::move(report)};
}

const char* to_string(quadrilateral_kind k) {
  return k == quadrilateral_kind::cylindrical ? "cylindrical" : "acylindrical";
}

quadrilateral_report classify_quadrilateral(const labeled_polyhedron& p, const circuit& t) {
  const int base = max_edge_id(p);
  auto s = split_along(p, t);
  quadrilateral_report r;
  const labeled_polyhedron* pieces[2] = {&s.exterior, &s.interior};
  for (int side = 0; side < 2; ++side) {
    const auto& q = *pieces[side];
    int cap = -1;
    for (int f = 0; f < q.face_count(); ++f) {
      if (q.origin().kind[f] != face_kind::cap4) continue;
      const auto& fc = q.faces()[f];
      bool fresh = true;
      for (std::size_t i = 0; i < fc.size(); ++i)
        fresh = fresh && q.origin().edge[q.edge_index(fc[i], fc[(i + 1) % fc.size()])] > base;
      if (fresh) cap = f;
    }
    if (cap < 0) continue;
    for (const auto& c : enumerate_prismatic_circuits(q, 4)) {
      if (std::find(c.faces.begin(), c.faces.end(), cap) == c.faces.end()) continue;
      int right = 0, on_cap = 0;
      for (int e : c.edges) {
        if (q.origin().edge[e] > base) ++on_cap;
        else if (q.label(e) == angle::pi_over(2)) ++right;
      }
      if (on_cap == 2 && right == 2) {
        r.kind = quadrilateral_kind::cylindrical;
        r.piece = side;
        for (int e : c.edges) r.witness_ids.push_back(q.origin().edge[e]);
        std::sort(r.witness_ids.begin(), r.witness_ids.end());
        return r;
      }
    }
  }
  return r;
}

}  // namespace polyvol
