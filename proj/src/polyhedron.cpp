#include "polyvol/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <queue>
#include <set>

namespace polyvol {

const char* to_string(polyhedron_errc c) {
  switch (c) {
    case polyhedron_errc::not_planar_complex: return "NotPlanarComplex";
    case polyhedron_errc::not_3_connected: return "Not3Connected";
    case polyhedron_errc::bad_degree: return "BadDegree";
    case polyhedron_errc::label_out_of_range: return "LabelOutOfRange";
    case polyhedron_errc::missing_label: return "MissingLabel";
    case polyhedron_errc::duplicate_label: return "DuplicateLabel";
    case polyhedron_errc::unknown_edge: return "UnknownEdge";
  }
  return "?";
}

const char* to_string(link_type t) {
  switch (t) {
    case link_type::spherical: return "spherical";
    case link_type::euclidean: return "euclidean";
    case link_type::hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

[[noreturn]] void complex_error(const std::string& msg) {
  throw polyhedron_error(polyhedron_errc::not_planar_complex, msg);
}

}  // namespace

plane_map plane_map::from_faces(int n, std::vector<std::vector<int>> faces) {
  if (n <= 0) complex_error("no vertices");
  if (faces.empty()) complex_error("no faces");
  const int nf = static_cast<int>(faces.size());
  for (int f = 0; f < nf; ++f) {
    const auto& fc = faces[f];
    if (fc.size() < 3) complex_error("face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> seen;
    for (int v : fc) {
      if (v < 0 || v >= n) complex_error("face " + std::to_string(f) + " has vertex out of range");
      if (!seen.insert(v).second)
        complex_error("face " + std::to_string(f) + " repeats vertex " + std::to_string(v));
    }
  }

  // every undirected edge must bound exactly two distinct faces
  std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> occ;  // face, forward(a<b)
  for (int f = 0; f < nf; ++f) {
    const auto& fc = faces[f];
    for (std::size_t i = 0; i < fc.size(); ++i) {
      int a = fc[i], b = fc[(i + 1) % fc.size()];
      occ[{std::min(a, b), std::max(a, b)}].push_back({f, a < b});
    }
  }
  for (const auto& [e, list] : occ) {
    if (list.size() != 2 || list[0].first == list[1].first)
      complex_error("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                    ") lies in " + std::to_string(list.size()) + " face slot(s), expected 2 faces");
  }

  // orient faces consistently by propagating across edges
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> fadj(nf);
  for (const auto& [e, list] : occ) {
    fadj[list[0].first].push_back({list[1].first, e});
    fadj[list[1].first].push_back({list[0].first, e});
  }
  std::vector<int> flip(nf, -1);
  auto forward_in = [&](int f, std::pair<int, int> e) {
    for (const auto& [g, fw] : occ[e])
      if (g == f) return fw != (flip[f] == 1);
    return false;
  };
  int components = 0;
  for (int s = 0; s < nf; ++s) {
    if (flip[s] != -1) continue;
    ++components;
    flip[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (const auto& [g, e] : fadj[f]) {
        bool ff = forward_in(f, e);
        if (flip[g] == -1) {
          flip[g] = 0;
          if (forward_in(g, e) == ff) flip[g] = 1;
          q.push(g);
        } else if (forward_in(g, e) == ff) {
          complex_error("faces cannot be oriented consistently");
        }
      }
    }
  }
  if (components != 1) complex_error("face complex is disconnected");
  for (int f = 0; f < nf; ++f)
    if (flip[f] == 1) std::reverse(faces[f].begin(), faces[f].end());

  plane_map m;
  m.n_ = n;
  m.faces_ = std::move(faces);
  for (const auto& [e, list] : occ) {
    m.edge_index_[key(e.first, e.second)] = static_cast<int>(m.edges_.size());
    m.edges_.push_back({e.first, e.second});
  }
  for (int f = 0; f < nf; ++f) {
    const auto& fc = m.faces_[f];
    for (std::size_t i = 0; i < fc.size(); ++i)
      m.dir_face_[key(fc[i], fc[(i + 1) % fc.size()])] = f;
  }
  m.edge_faces_.resize(m.edges_.size());
  for (std::size_t e = 0; e < m.edges_.size(); ++e) {
    auto [u, v] = m.edges_[e];
    m.edge_faces_[e] = {m.dir_face_.at(key(u, v)), m.dir_face_.at(key(v, u))};
  }

  // rotation at each vertex: in the face with u->v->w, w follows u
  std::vector<std::map<int, int>> next(n);
  std::vector<std::map<int, int>> face_at(n);
  for (int f = 0; f < nf; ++f) {
    const auto& fc = m.faces_[f];
    const std::size_t k = fc.size();
    for (std::size_t i = 0; i < k; ++i) {
      int u = fc[(i + k - 1) % k], v = fc[i], w = fc[(i + 1) % k];
      next[v][u] = w;
      face_at[v][u] = f;
    }
  }
  m.rotation_.resize(n);
  m.vertex_faces_.resize(n);
  for (int v = 0; v < n; ++v) {
    if (next[v].empty()) complex_error("vertex " + std::to_string(v) + " lies on no face");
    int start = next[v].begin()->first;
    int u = start;
    do {
      m.rotation_[v].push_back(u);
      m.vertex_faces_[v].push_back(face_at[v].at(u));
      u = next[v].at(u);
    } while (u != start && m.rotation_[v].size() <= next[v].size());
    if (m.rotation_[v].size() != next[v].size())
      complex_error("vertex " + std::to_string(v) + " is not a manifold point");
  }

  const int ne = m.edge_count();
  if (n - ne + nf != 2)
    complex_error("Euler characteristic " + std::to_string(n - ne + nf) + " != 2");
  return m;
}

int plane_map::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

int plane_map::face_left_of(int a, int b) const {
  auto it = dir_face_.find(key(a, b));
  return it == dir_face_.end() ? -1 : it->second;
}

plane_map plane_map::dual() const {
  std::vector<std::vector<int>> f(vertex_faces_.begin(), vertex_faces_.end());
  return from_faces(face_count(), std::move(f));
}

bool plane_map::is_connected_without(int a, int b) const {
  std::vector<char> seen(n_, 0);
  seen[a] = seen[b] = 1;
  int start = -1;
  for (int v = 0; v < n_; ++v)
    if (!seen[v]) { start = v; break; }
  if (start < 0) return true;
  int reached = 1;
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : rotation_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_ - (a == b ? 1 : 2);
}

bool plane_map::is_3_connected() const {
  if (n_ < 4) return false;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!is_connected_without(a, b)) return false;
  return true;
}

bool labeled_polyhedron::is_coxeter() const {
  return std::all_of(labels_.begin(), labels_.end(), [](const angle& a) { return a.is_coxeter(); });
}

bool labeled_polyhedron::is_trivalent() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) != 3) return false;
  return true;
}

namespace {

void check_label(const angle& a, int u, int v) {
  double r = a.radians();
  bool ok = a.is_exact() ? (a.pi_multiple() > 0 && a.pi_multiple() <= rational(1, 2))
                         : (r > 0 && r <= std::numbers::pi / 2 + angle_tolerance);
  if (!ok)
    throw polyhedron_error(polyhedron_errc::label_out_of_range,
                           "label " + a.to_string() + " on edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") outside (0, pi/2]");
}

}  // namespace

labeled_polyhedron labeled_polyhedron::with_labels(std::vector<angle> labels) const {
  if (labels.size() != labels_.size())
    throw polyhedron_error(polyhedron_errc::missing_label, "label count mismatch");
  for (int e = 0; e < edge_count(); ++e) check_label(labels[e], edges()[e].u, edges()[e].v);
  labeled_polyhedron out = *this;
  out.labels_ = std::move(labels);
  return out;
}

labeled_polyhedron build_polyhedron(int n, std::vector<std::vector<int>> faces,
                                    const std::function<angle(int, int)>& label_of,
                                    build_options opts, const source_tags* tags) {
  labeled_polyhedron p;
  p.map_ = plane_map::from_faces(n, std::move(faces));
  const auto& m = p.map_;
  if (opts.require_3_connected && !m.is_3_connected())
    throw polyhedron_error(polyhedron_errc::not_3_connected, "1-skeleton is not 3-connected");
  for (int v = 0; v < n; ++v) {
    int d = m.degree(v);
    if (d != 3 && !(d == 4 && opts.allow_degree4))
      throw polyhedron_error(polyhedron_errc::bad_degree,
                             "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  }
  p.labels_.reserve(m.edge_count());
  for (const auto& e : m.edges()) {
    angle a = label_of(e.u, e.v);
    check_label(a, e.u, e.v);
    p.labels_.push_back(a);
  }

  auto& o = p.origin_;
  if (tags) {
    o.vertex = tags->vertex;
    o.face = tags->face;
    o.kind = tags->kind;
    for (const auto& e : m.edges()) o.edge.push_back(tags->edge ? tags->edge(e.u, e.v) : -1);
  }
  if (static_cast<int>(o.vertex.size()) != n) {
    o.vertex.resize(n);
    for (int v = 0; v < n; ++v) o.vertex[v] = v;
  }
  if (static_cast<int>(o.face.size()) != m.face_count()) {
    o.face.resize(m.face_count());
    for (int f = 0; f < m.face_count(); ++f) o.face[f] = f;
  }
  if (static_cast<int>(o.kind.size()) != m.face_count())
    o.kind.assign(m.face_count(), face_kind::original);
  if (static_cast<int>(o.edge.size()) != m.edge_count()) {
    o.edge.resize(m.edge_count());
    for (int e = 0; e < m.edge_count(); ++e) o.edge[e] = e;
  }
  return p;
}

labeled_polyhedron build_polyhedron(int n, std::vector<std::vector<int>> faces,
                                    const std::vector<edge_label>& labels, build_options opts) {
  std::map<std::pair<int, int>, angle> given;
  for (const auto& l : labels) {
    auto k = std::make_pair(std::min(l.u, l.v), std::max(l.u, l.v));
    if (!given.emplace(k, l.value).second)
      throw polyhedron_error(polyhedron_errc::duplicate_label,
                             "edge (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                                 ") labeled twice");
  }
  std::size_t used = 0;
  auto lookup = [&](int u, int v) {
    auto it = given.find({u, v});
    if (it == given.end())
      throw polyhedron_error(polyhedron_errc::missing_label,
                             "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has no label");
    ++used;
    return it->second;
  };
  auto p = build_polyhedron(n, std::move(faces), lookup, opts, nullptr);
  if (used != given.size()) {
    for (const auto& [k, a] : given)
      if (p.edge_index(k.first, k.second) < 0)
        throw polyhedron_error(polyhedron_errc::unknown_edge,
                               "label given for non-edge (" + std::to_string(k.first) + "," +
                                   std::to_string(k.second) + ")");
  }
  return p;
}

link_classification classify_vertex_link(const labeled_polyhedron& p, int v) {
  std::vector<angle> parts;
  for (int w : p.map().rotation(v)) parts.push_back(p.label(p.edge_index(v, w)));
  // degree 3 against pi, degree 4 against 2pi
  rational target = parts.size() == 4 ? rational(2) : rational(1);
  auto c = compare_sum(parts, target);
  link_classification out;
  out.near_tie = c.near_tie;
  out.type = c.sign > 0 ? link_type::spherical
                        : (c.sign == 0 ? link_type::euclidean : link_type::hyperbolic);
  return out;
}

int dual_graph::edge_between(int f, int g) const {
  for (int e : incident[f])
    if ((edges[e][0] == f && edges[e][1] == g) || (edges[e][0] == g && edges[e][1] == f)) return e;
  return -1;
}

dual_graph make_dual_graph(const labeled_polyhedron& p) {
  const auto& m = p.map();
  dual_graph d;
  d.vertex_count = m.face_count();
  for (int e = 0; e < m.edge_count(); ++e) d.edges.push_back(m.edge_faces(e));
  d.labels = p.labels();
  d.incident.resize(m.face_count());
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& fc = m.faces()[f];
    for (std::size_t i = 0; i < fc.size(); ++i)
      d.incident[f].push_back(m.edge_index(fc[i], fc[(i + 1) % fc.size()]));
    d.face_of_dual_vertex.push_back(f);
  }
  for (int v = 0; v < m.vertex_count(); ++v) d.faces.push_back(m.vertex_faces(v));
  return d;
}

}  // namespace polyvol
