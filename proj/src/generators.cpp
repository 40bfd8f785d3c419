#include "polyvol/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polyvol {

labeled_polyhedron make_prism(int n, const prism_labels& l) {
  if (n < 3) throw std::invalid_argument("prism needs n >= 3");
  if (static_cast<int>(l.a.size()) != n || static_cast<int>(l.b.size()) != n ||
      static_cast<int>(l.c.size()) != n)
    throw std::invalid_argument("prism label arrays must have length n");
  std::vector<std::vector<int>> faces;
  std::vector<int> top, bottom;
  for (int i = 0; i < n; ++i) top.push_back(i);
  for (int i = n - 1; i >= 0; --i) bottom.push_back(n + i);
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    faces.push_back({j, i, n + i, n + j});
  }
  std::map<std::pair<int, int>, angle> lab;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    lab[{std::min(i, j), std::max(i, j)}] = l.a[i];
    lab[{n + std::min(i, j), n + std::max(i, j)}] = l.b[i];
    lab[{j, n + j}] = l.c[i];
  }
  return build_polyhedron(2 * n, faces, [&](int u, int v) { return lab.at({u, v}); });
}

prism_labels prism_labels_from_pattern(const std::string& pattern, angle c) {
  prism_labels l;
  const angle half = angle::pi_over(2), third = angle::pi_over(3);
  for (char ch : pattern) {
    switch (ch) {
      case 'R': l.a.push_back(half); l.b.push_back(half); break;
      case 'T': l.a.push_back(third); l.b.push_back(half); break;
      case 'B': l.a.push_back(half); l.b.push_back(third); break;
      default: throw std::invalid_argument(std::string("bad prism pattern letter ") + ch);
    }
    l.c.push_back(c);
  }
  return l;
}

prism_labels right_horizontal_labels(int n, angle c) {
  return prism_labels_from_pattern(std::string(n, 'R'), c);
}

prism_labels basic_prism_labels(int n, int r, int s) {
  if (n < 4 || r < 0 || s < 0 || r + s != n - 3)
    throw std::invalid_argument("basic prism needs r, s >= 0 and r + s = n - 3");
  std::string pat = "RR";
  char side = 'T';
  pat += side;
  for (int j = 0; j < n - 3; ++j) {
    if (j < r) side = side == 'T' ? 'B' : 'T';
    pat += side;
  }
  return prism_labels_from_pattern(pat, angle::pi_over(2));
}

prism_labels alternating_labels(int n) { return basic_prism_labels(n, n - 3, 0); }

labeled_polyhedron make_tetrahedron(angle all) {
  return build_polyhedron(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}},
                          [&](int, int) { return all; });
}

labeled_polyhedron make_dodecahedron(angle all) {
  // rings A (0-4), B (5-9), C (10-14), D (15-19); B and C form a zigzag
  auto A = [](int i) { return (i + 5) % 5; };
  auto B = [](int i) { return 5 + (i + 5) % 5; };
  auto C = [](int i) { return 10 + (i + 5) % 5; };
  auto D = [](int i) { return 15 + (i + 5) % 5; };
  std::vector<std::vector<int>> f;
  f.push_back({A(0), A(1), A(2), A(3), A(4)});
  for (int i = 0; i < 5; ++i) f.push_back({A(i), B(i), C(i), B(i + 1), A(i + 1)});
  for (int i = 0; i < 5; ++i) f.push_back({C(i), D(i), D(i + 1), C(i + 1), B(i + 1)});
  f.push_back({D(4), D(3), D(2), D(1), D(0)});
  return build_polyhedron(20, f, [&](int, int) { return all; });
}

std::optional<prism_structure> as_prism(const labeled_polyhedron& p) {
  const auto& m = p.map();
  const int V = m.vertex_count(), F = m.face_count();
  if (V % 2 || V < 6 || F != V / 2 + 2 || !p.is_trivalent()) return std::nullopt;
  const int n = V / 2;
  for (int t = 0; t < F; ++t) {
    if (static_cast<int>(m.faces()[t].size()) != n) continue;
    for (int bt = t + 1; bt < F; ++bt) {
      if (static_cast<int>(m.faces()[bt].size()) != n) continue;
      std::set<int> tv(m.faces()[t].begin(), m.faces()[t].end());
      bool disjoint = std::none_of(m.faces()[bt].begin(), m.faces()[bt].end(),
                                   [&](int v) { return tv.count(v); });
      if (!disjoint) continue;
      bool rest_quads = true;
      for (int f = 0; f < F; ++f)
        if (f != t && f != bt && m.faces()[f].size() != 4) rest_quads = false;
      if (!rest_quads) continue;

      prism_structure s;
      s.n = n;
      s.top = t;
      s.bottom = bt;
      const auto& top = m.faces()[t];
      auto below = [&](int v) {
        for (int w : m.rotation(v))
          if (!tv.count(w)) return w;
        return -1;
      };
      for (int i = 0; i < n; ++i) {
        int x = top[i], y = top[(i + 1) % n];
        s.lateral.push_back(m.face_left_of(y, x));
        s.a.push_back(m.edge_index(x, y));
        s.b.push_back(m.edge_index(below(x), below(y)));
        s.c.push_back(m.edge_index(y, below(y)));
      }
      if (std::find(s.b.begin(), s.b.end(), -1) != s.b.end()) continue;
      return s;
    }
  }
  return std::nullopt;
}

labeled_polyhedron glue_along_faces(const labeled_polyhedron& p, int fp,
                                    const labeled_polyhedron& q, int fq, int offset,
                                    angle seam) {
  const auto& mp = p.map();
  const auto& mq = q.map();
  const auto& X = mp.faces()[fp];
  const auto& Y = mq.faces()[fq];
  const int k = static_cast<int>(X.size());
  if (static_cast<int>(Y.size()) != k) throw std::invalid_argument("glued faces differ in size");

  auto outer = [](const plane_map& m, const std::vector<int>& face, int v) {
    std::set<int> fs(face.begin(), face.end());
    if (m.degree(v) != 3) throw std::invalid_argument("glued face has a vertex of degree != 3");
    for (int w : m.rotation(v))
      if (!fs.count(w)) return w;
    throw std::invalid_argument("glued face vertex has no outer edge");
  };

  // new numbering: P's kept vertices, then Q's
  const int np = mp.vertex_count(), nq = mq.vertex_count();
  std::vector<int> idp(np, -1), idq(nq, -1);
  std::set<int> xs(X.begin(), X.end()), ys(Y.begin(), Y.end());
  int next = 0;
  for (int v = 0; v < np; ++v)
    if (!xs.count(v)) idp[v] = next++;
  for (int v = 0; v < nq; ++v)
    if (!ys.count(v)) idq[v] = next++;

  std::vector<int> a(k), b(k);
  for (int i = 0; i < k; ++i) {
    a[i] = outer(mp, X, X[i]);
    b[i] = outer(mq, Y, Y[i]);
    if (xs.count(a[i]) || ys.count(b[i])) throw std::invalid_argument("glued face is not isolated");
  }
  auto sigma = [&](int i) { return ((offset - i) % k + k) % k; };

  std::map<std::pair<int, int>, angle> lab;
  auto put = [&](int u, int v, angle x) { lab[{std::min(u, v), std::max(u, v)}] = x; };
  for (int e = 0; e < mp.edge_count(); ++e) {
    auto [u, v] = mp.edges()[e];
    if (idp[u] >= 0 && idp[v] >= 0) put(idp[u], idp[v], p.label(e));
  }
  for (int e = 0; e < mq.edge_count(); ++e) {
    auto [u, v] = mq.edges()[e];
    if (idq[u] >= 0 && idq[v] >= 0) put(idq[u], idq[v], q.label(e));
  }
  for (int i = 0; i < k; ++i) put(idp[a[i]], idq[b[sigma(i)]], seam);

  // faces away from the glued faces carry over; the k faces around each glued
  // face merge pairwise
  std::vector<std::vector<int>> faces;
  auto strip = [](const std::vector<int>& face, const std::set<int>& drop, const std::vector<int>& id) {
    // rotate so the cycle starts right after the dropped run
    const int s = static_cast<int>(face.size());
    int start = 0;
    for (int i = 0; i < s; ++i)
      if (drop.count(face[(i + s - 1) % s]) && !drop.count(face[i])) start = i;
    std::vector<int> out;
    for (int i = 0; i < s; ++i) {
      int v = face[(start + i) % s];
      if (!drop.count(v)) out.push_back(id[v]);
    }
    return out;
  };
  for (int f = 0; f < mp.face_count(); ++f) {
    if (f == fp) continue;
    const auto& fc = mp.faces()[f];
    if (std::none_of(fc.begin(), fc.end(), [&](int v) { return xs.count(v); })) {
      std::vector<int> g;
      for (int v : fc) g.push_back(idp[v]);
      faces.push_back(g);
    }
  }
  for (int f = 0; f < mq.face_count(); ++f) {
    if (f == fq) continue;
    const auto& fc = mq.faces()[f];
    if (std::none_of(fc.begin(), fc.end(), [&](int v) { return ys.count(v); })) {
      std::vector<int> g;
      for (int v : fc) g.push_back(idq[v]);
      faces.push_back(g);
    }
  }
  for (int i = 0; i < k; ++i) {
    // P side face across X[i]X[i+1]: path a_i .. a_{i+1}
    int gp = mp.face_left_of(X[(i + 1) % k], X[i]);
    int j = sigma(i + 1);  // Q side face across Y[j]Y[j+1], path b_j .. b_{j+1}
    int gq = mq.face_left_of(Y[(j + 1) % k], Y[j]);
    auto pa = strip(mp.faces()[gp], xs, idp);
    auto pb = strip(mq.faces()[gq], ys, idq);
    std::vector<int> merged = pa;
    merged.insert(merged.end(), pb.begin(), pb.end());
    faces.push_back(merged);
  }
  return build_polyhedron(next, faces, [&](int u, int v) {
    auto it = lab.find({u, v});
    if (it == lab.end()) throw std::logic_error("glue produced an unlabeled edge");
    return it->second;
  });
}

}  // namespace polyvol
