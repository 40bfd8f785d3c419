#include "polyvol/circuits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyvol {

const char* to_string(circuit_geometry g) {
  switch (g) {
    case circuit_geometry::spherical: return "spherical";
    case circuit_geometry::euclidean: return "euclidean";
    case circuit_geometry::hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::vector<int> circuit::crossed_sorted() const {
  std::vector<int> e = edges;
  std::sort(e.begin(), e.end());
  return e;
}

bool crossed_edges_disjoint(const labeled_polyhedron& p, const std::vector<int>& edges) {
  std::set<int> used;
  for (int e : edges) {
    const auto& ed = p.edges()[e];
    if (!used.insert(ed.u).second || !used.insert(ed.v).second) return false;
  }
  return true;
}

circuit_sides sides_of(const labeled_polyhedron& p, const circuit& c) {
  const auto& m = p.map();
  std::set<int> cut(c.edges.begin(), c.edges.end());
  circuit_sides s;
  s.vertex_side.assign(m.vertex_count(), -1);
  int side = 0;
  for (int start = 0; start < m.vertex_count(); ++start) {
    if (s.vertex_side[start] != -1) continue;
    if (side > 1) throw std::logic_error("circuit does not separate into two sides");
    std::vector<int> stack{start};
    s.vertex_side[start] = side;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : m.rotation(v)) {
        if (s.vertex_side[w] != -1 || cut.count(m.edge_index(v, w))) continue;
        s.vertex_side[w] = side;
        stack.push_back(w);
      }
    }
    ++side;
  }
  if (side != 2) throw std::logic_error("circuit does not separate into two sides");
  std::set<int> on(c.faces.begin(), c.faces.end());
  s.face_side.assign(m.face_count(), -1);
  for (int f = 0; f < m.face_count(); ++f) {
    if (on.count(f)) continue;
    int sd = s.vertex_side[m.faces()[f][0]];
    s.face_side[f] = sd;
    ++s.inner_faces[sd];
  }
  return s;
}

sum_comparison circuit_sum(const labeled_polyhedron& p, const std::vector<int>& edges) {
  std::vector<angle> parts;
  for (int e : edges) parts.push_back(p.label(e));
  return compare_sum(parts, edges.size() == 4 ? rational(2) : rational(1));
}

circuit make_circuit(const labeled_polyhedron& p, const std::vector<int>& cyc) {
  const auto& m = p.map();
  circuit c;
  c.length = static_cast<int>(cyc.size());
  c.faces = cyc;
  for (int i = 0; i < c.length; ++i) {
    int f = cyc[i], g = cyc[(i + 1) % c.length];
    int found = -1;
    const auto& fc = m.faces()[f];
    for (std::size_t j = 0; j < fc.size(); ++j) {
      int a = fc[j], b = fc[(j + 1) % fc.size()];
      if (m.face_left_of(b, a) == g) {
        found = m.edge_index(a, b);
        break;
      }
    }
    if (found < 0) throw std::invalid_argument("faces in circuit are not adjacent");
    c.edges.push_back(found);
  }
  auto cmp = circuit_sum(p, c.edges);
  c.near_tie = cmp.near_tie;
  c.geometry = cmp.sign > 0 ? circuit_geometry::spherical
                            : (cmp.sign == 0 ? circuit_geometry::euclidean
                                             : circuit_geometry::hyperbolic);
  if (crossed_edges_disjoint(p, c.edges)) {
    auto s = sides_of(p, c);
    c.trivial = s.inner_faces[0] == 1 || s.inner_faces[1] == 1;
  }
  return c;
}

std::vector<circuit> enumerate_prismatic_circuits(const labeled_polyhedron& p, int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("circuit length must be 3 or 4");
  const auto& m = p.map();
  const int nf = m.face_count();
  std::vector<std::set<int>> adj(nf);
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [f, g] = m.edge_faces(e);
    adj[f].insert(g);
    adj[g].insert(f);
  }
  std::vector<std::vector<int>> cycles;
  for (int a = 0; a < nf; ++a) {
    for (int b : adj[a]) {
      if (b <= a) continue;
      if (k == 3) {
        for (int c : adj[b])
          if (c > b && adj[a].count(c)) cycles.push_back({a, b, c});
      } else {
        for (int d : adj[a]) {
          if (d <= b) continue;
          for (int c : adj[b])
            if (c > a && c != d && adj[d].count(c)) cycles.push_back({a, b, c, d});
        }
      }
    }
  }
  std::vector<circuit> out;
  for (const auto& cyc : cycles) {
    // crossed edges must be pairwise disjoint before the circuit is worth building
    std::vector<int> es;
    for (int i = 0; i < k; ++i) {
      int f = cyc[i], g = cyc[(i + 1) % k];
      const auto& fc = m.faces()[f];
      for (std::size_t j = 0; j < fc.size(); ++j) {
        int x = fc[j], y = fc[(j + 1) % fc.size()];
        if (m.face_left_of(y, x) == g) {
          es.push_back(m.edge_index(x, y));
          break;
        }
      }
    }
    if (!crossed_edges_disjoint(p, es)) continue;
    out.push_back(make_circuit(p, cyc));
  }
  std::sort(out.begin(), out.end(), [](const circuit& x, const circuit& y) {
    return x.crossed_sorted() < y.crossed_sorted();
  });
  return out;
}

}  // namespace polyvol
