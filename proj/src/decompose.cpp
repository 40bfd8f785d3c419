#include "polyvol/decompose.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace polyvol {

namespace {

std::string ids_text(const std::vector<int>& ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << '}';
  return os.str();
}

std::vector<int> crossed_ids(const labeled_polyhedron& p, const circuit& c) {
  std::vector<int> ids;
  for (int e : c.edges) ids.push_back(p.origin().edge[e]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// per-polyhedron data reused across neighborhood queries
struct analysis {
  const labeled_polyhedron* p;
  std::vector<circuit> euclid4;
  std::vector<std::set<int>> face_adj;
  std::map<std::vector<int>, circuit_sides> sides_cache;

  explicit analysis(const labeled_polyhedron& poly) : p(&poly) {
    for (auto& c : enumerate_prismatic_circuits(poly, 4))
      if (c.geometry == circuit_geometry::euclidean) euclid4.push_back(std::move(c));
    const auto& m = poly.map();
    face_adj.resize(m.face_count());
    for (int e = 0; e < m.edge_count(); ++e) {
      auto [f, g] = m.edge_faces(e);
      face_adj[f].insert(g);
      face_adj[g].insert(f);
    }
  }

  const circuit_sides& sides(const circuit& c) {
    auto key = c.crossed_sorted();
    auto it = sides_cache.find(key);
    if (it == sides_cache.end()) it = sides_cache.emplace(key, sides_of(*p, c)).first;
    return it->second;
  }

  bool on_boundary(const circuit& d, const std::set<int>& support) {
    const auto& s = sides(d);
    std::set<int> dfaces(d.faces.begin(), d.faces.end());
    for (int side = 0; side < 2; ++side) {
      std::vector<int> inside;
      for (int f : support)
        if (!dfaces.count(f) && s.face_side[f] == side) inside.push_back(f);
      if (inside.empty()) return true;
      if (inside.size() == 1) {
        int w = inside[0];
        bool touches_all = std::all_of(d.faces.begin(), d.faces.end(),
                                       [&](int f) { return face_adj[w].count(f) > 0; });
        // triangles of the dual strictly inside = primal vertices on this side
        int triangles = static_cast<int>(std::count(s.vertex_side.begin(), s.vertex_side.end(), side));
        if (touches_all && triangles >= 5) return true;
      }
    }
    return false;
  }

  std::pair<neighborhood, neighborhood> neighborhoods_of(const circuit& g) {
    std::pair<neighborhood, neighborhood> out;
    for (int i = 0; i < 2; ++i) {
      neighborhood& n = i == 0 ? out.first : out.second;
      n.index = i + 1;
      n.base = g;
      int a = g.faces[i], b = g.faces[i + 2];
      for (const auto& d : euclid4) {
        auto pa = std::find(d.faces.begin(), d.faces.end(), a) - d.faces.begin();
        auto pb = std::find(d.faces.begin(), d.faces.end(), b) - d.faces.begin();
        if (pa == 4 || pb == 4 || (pa - pb + 4) % 4 != 2) continue;
        n.members.push_back(d);
        n.support_faces.insert(d.faces.begin(), d.faces.end());
        n.support_edges.insert(d.edges.begin(), d.edges.end());
      }
      for (const auto& d : n.members)
        if (on_boundary(d, n.support_faces)) n.boundary.push_back(d);
    }
    return out;
  }

  // circuits running through, or parallel to, a face introduced by an earlier
  // split are the split circuit's own copies and are left out of K
  bool touches_cap(const circuit& d) {
    const auto& kind = p->origin().kind;
    for (int f : d.faces)
      if (kind[f] != face_kind::original) return true;
    const auto& s = sides(d);
    for (int f = 0; f < p->face_count(); ++f)
      if (s.face_side[f] >= 0 && s.inner_faces[s.face_side[f]] == 1 && kind[f] != face_kind::original)
        return true;
    return false;
  }

  std::set<std::vector<int>> k_set() {
    std::set<std::vector<int>> k;
    for (const auto& g : euclid4) {
      auto [n1, n2] = neighborhoods_of(g);
      for (const auto* nb : {&n1, &n2})
        for (const auto& d : nb->boundary)
          if (!touches_cap(d)) k.insert(d.crossed_sorted());
    }
    return k;
  }

  bool admissible(const circuit& x, const circuit& y) {
    for (auto [u, w] : {std::pair{&x, &y}, std::pair{&y, &x}}) {
      const auto& s = sides(*w);
      std::set<int> wedges(w->edges.begin(), w->edges.end());
      bool seen[2] = {false, false};
      for (int e : u->edges) {
        if (wedges.count(e)) continue;
        seen[s.vertex_side[p->edges()[e].u]] = true;
      }
      if (seen[0] && seen[1]) return false;
    }
    return true;
  }
};

}  // namespace

split_result split_along(const labeled_polyhedron& p, const circuit& c) {
  if ((c.length != 3 && c.length != 4) || !crossed_edges_disjoint(p, c.edges))
    throw decompose_error(decompose_errc::not_prismatic, "circuit is not prismatic");
  const auto& m = p.map();
  const auto sides = sides_of(p, c);
  const int k = c.length;
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[c.edges[i]] = i;
  const int max_id = *std::max_element(p.origin().edge.begin(), p.origin().edge.end());

  auto build_side = [&](int s) {
    const int n = m.vertex_count();
    std::vector<int> id(n, -1);
    std::vector<int> back;  // new vertex -> old vertex, or -(i+1) for the point on crossed edge i
    source_tags tags;
    for (int v = 0; v < n; ++v)
      if (sides.vertex_side[v] == s) {
        id[v] = static_cast<int>(back.size());
        back.push_back(v);
        tags.vertex.push_back(p.origin().vertex[v]);
      }
    std::vector<int> xid(k);
    for (int i = 0; i < k; ++i) {
      xid[i] = static_cast<int>(back.size());
      back.push_back(-(i + 1));
      tags.vertex.push_back(-1);
    }
    std::vector<std::vector<int>> faces;
    for (int f = 0; f < m.face_count(); ++f) {
      const auto& fc = m.faces()[f];
      if (sides.face_side[f] == s) {
        std::vector<int> g;
        for (int v : fc) g.push_back(id[v]);
        faces.push_back(g);
      } else if (sides.face_side[f] == -1) {
        std::vector<int> g;
        for (std::size_t j = 0; j < fc.size(); ++j) {
          int v = fc[j], w = fc[(j + 1) % fc.size()];
          if (sides.vertex_side[v] == s) g.push_back(id[v]);
          auto it = pos.find(m.edge_index(v, w));
          if (it != pos.end()) g.push_back(xid[it->second]);
        }
        faces.push_back(g);
      } else {
        continue;
      }
      tags.face.push_back(p.origin().face[f]);
      tags.kind.push_back(p.origin().kind[f]);
    }
    std::vector<int> cap;
    for (int i = 0; i < k; ++i) cap.push_back(xid[i]);
    faces.push_back(cap);
    tags.face.push_back(-1);
    tags.kind.push_back(k == 3 ? face_kind::cap3 : face_kind::cap4);

    auto classify = [&](int a, int b, angle* lab) {
      int oa = back[a], ob = back[b];
      if (oa >= 0 && ob >= 0) {
        int e = m.edge_index(oa, ob);
        *lab = p.label(e);
        return p.origin().edge[e];
      }
      if (oa < 0 && ob < 0) {
        int i = -oa - 1, j = -ob - 1;
        if ((i + 1) % k != j) std::swap(i, j);
        *lab = angle::pi_over(2);
        return max_id + 1 + i;
      }
      int i = oa < 0 ? -oa - 1 : -ob - 1;
      *lab = p.label(c.edges[i]);
      return p.origin().edge[c.edges[i]];
    };
    tags.edge = [&](int a, int b) {
      angle l;
      return classify(a, b, &l);
    };
    return build_polyhedron(static_cast<int>(back.size()), faces,
                            [&](int a, int b) {
                              angle l;
                              classify(a, b, &l);
                              return l;
                            },
                            build_options{}, &tags);
  };

  split_result r{build_side(1), build_side(0), crossed_ids(p, c), k};
  return r;
}

std::optional<circuit> find_circuit_by_ids(const labeled_polyhedron& p, const std::vector<int>& ids) {
  const auto& m = p.map();
  std::vector<int> edges;
  for (int id : ids) {
    auto it = std::find(p.origin().edge.begin(), p.origin().edge.end(), id);
    if (it == p.origin().edge.end()) return std::nullopt;
    edges.push_back(static_cast<int>(it - p.origin().edge.begin()));
  }
  // the faces on either side of the crossed edges must form one cycle
  std::map<int, std::vector<int>> nb;
  for (int e : edges) {
    auto [f, g] = m.edge_faces(e);
    nb[f].push_back(g);
    nb[g].push_back(f);
  }
  if (nb.size() != edges.size()) return std::nullopt;
  for (const auto& [f, list] : nb)
    if (list.size() != 2) return std::nullopt;
  std::vector<int> cyc{nb.begin()->first};
  int prev = -1, cur = cyc[0];
  while (true) {
    int nxt = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    if (nxt == cyc[0]) break;
    cyc.push_back(nxt);
    prev = cur;
    cur = nxt;
    if (cyc.size() > edges.size()) return std::nullopt;
  }
  if (cyc.size() != edges.size() || !crossed_edges_disjoint(p, edges)) return std::nullopt;
  return make_circuit(p, cyc);
}

std::pair<neighborhood, neighborhood> neighborhoods(const labeled_polyhedron& p, const circuit& gamma,
                                                    const std::vector<circuit>* euclid4) {
  if (gamma.length != 4 || gamma.geometry != circuit_geometry::euclidean)
    throw decompose_error(decompose_errc::not_euclidean_4_circuit,
                          "neighborhoods need a Euclidean prismatic 4-circuit");
  analysis a(p);
  if (euclid4) a.euclid4 = *euclid4;
  return a.neighborhoods_of(gamma);
}

std::set<std::vector<int>> complexity_set(const labeled_polyhedron& p) {
  analysis a(p);
  return a.k_set();
}

int prismatic_complexity(const labeled_polyhedron& p) {
  return static_cast<int>(complexity_set(p).size());
}

int prismatic_complexity(const std::vector<labeled_polyhedron>& parts) {
  int c = 0;
  for (const auto& q : parts) c += prismatic_complexity(q);
  return c;
}

bool admissible_pair(const labeled_polyhedron& p, const circuit& x, const circuit& y) {
  analysis a(p);
  return a.admissible(x, y);
}

bool is_atoroidal(const labeled_polyhedron& p) {
  for (const auto& c : enumerate_prismatic_circuits(p, 4))
    if (c.geometry == circuit_geometry::euclidean && !c.trivial) return false;
  return true;
}

reduce_result spherical_reduce(const labeled_polyhedron& p, reduce_mode mode) {
  reduce_result out;
  auto wanted = [&](const circuit& c) {
    if (c.trivial) return 0;
    switch (mode) {
      case reduce_mode::orbifold: return c.geometry == circuit_geometry::spherical ? 2 : 0;
      case reduce_mode::orbifold_euclidean:
        return c.geometry == circuit_geometry::spherical ? 2
               : c.geometry == circuit_geometry::euclidean ? 1 : 0;
      case reduce_mode::hyperbolic: return 1;
    }
    return 0;
  };
  std::vector<labeled_polyhedron> work{p};
  while (!work.empty()) {
    labeled_polyhedron q = std::move(work.back());
    work.pop_back();
    const circuit* pick = nullptr;
    auto circuits = enumerate_prismatic_circuits(q, 3);
    for (const auto& c : circuits)
      if (wanted(c) && (!pick || wanted(c) > wanted(*pick))) pick = &c;
    if (!pick) {
      out.components.push_back(std::move(q));
      continue;
    }
    auto s = split_along(q, *pick);
    out.used.push_back(s.crossed);
    out.used_geometry.push_back(pick->geometry);
    work.push_back(std::move(s.interior));
    work.push_back(std::move(s.exterior));
  }
  return out;
}

decomposition_result decompose_components(std::vector<labeled_polyhedron> work,
                                          const decompose_options& opts) {
  decomposition_result res;
  std::optional<std::mt19937_64> rng;
  if (opts.seed) rng.emplace(*opts.seed);

  for (const auto& q : work)
    for (const auto& c : enumerate_prismatic_circuits(q, 3))
      if (!c.trivial && c.geometry != circuit_geometry::hyperbolic)
        throw decompose_error(decompose_errc::precondition_violated,
                              std::string("nontrivial ") + to_string(c.geometry) +
                                  " prismatic 3-circuit " + ids_text(crossed_ids(q, c)));

  auto total_c = [&]() { return prismatic_complexity(work); };
  int step = 0;
  // The loop runs until neither branch applies. c only measures progress: a
  // component whose leftover K members all sit against caps still has to be
  // checked for the Seifert-fibered pattern.
  while (true) {
    if (++step > opts.max_steps)
      throw decompose_error(decompose_errc::no_progress, "step budget exhausted");

    // components holding a nontrivial Euclidean prismatic 4-circuit
    std::vector<analysis> an;
    an.reserve(work.size());
    std::vector<int> active;
    for (std::size_t qi = 0; qi < work.size(); ++qi) {
      an.emplace_back(work[qi]);
      if (std::any_of(an.back().euclid4.begin(), an.back().euclid4.end(),
                      [](const circuit& g) { return !g.trivial; }))
        active.push_back(static_cast<int>(qi));
    }
    if (rng) std::shuffle(active.begin(), active.end(), *rng);

    bool progressed = false;
    for (int qi : active) {
      auto& a = an[qi];
      std::vector<circuit> gammas;
      for (const auto& g : a.euclid4)
        if (!g.trivial) gammas.push_back(g);
      if (rng) std::shuffle(gammas.begin(), gammas.end(), *rng);
      const int nf = work[qi].face_count();

      std::vector<std::pair<neighborhood, neighborhood>> nbs;
      const circuit* covering = nullptr;
      int covering_index = 0;
      for (const auto& g : gammas) {
        nbs.push_back(a.neighborhoods_of(g));
        const auto& [n1, n2] = nbs.back();
        if (!covering && (static_cast<int>(n1.support_faces.size()) == nf ||
                          static_cast<int>(n2.support_faces.size()) == nf)) {
          covering = &g;
          covering_index = static_cast<int>(n1.support_faces.size()) == nf ? 1 : 2;
        }
      }
      if (covering) {
        res.trace.push_back("step " + std::to_string(step) + ": component covered by N" +
                            std::to_string(covering_index) + " of nontrivial " +
                            ids_text(crossed_ids(work[qi], *covering)) + ", recorded as Seifert-fibered");
        res.seifert_fibered.push_back(work[qi]);
        work.erase(work.begin() + qi);
        progressed = true;
        break;
      }

      // Maximal admissible subset of the boundaries of every nontrivial gamma
      // in the component, trivial members included. Taking the union removes
      // the choice of gamma, which otherwise decides whether some trivial
      // circuits get split.
      std::vector<circuit> pool;
      std::set<std::vector<int>> seen;
      for (const auto& [n1, n2] : nbs)
        for (const auto* nb : {&n1, &n2})
          for (const auto& d : nb->boundary)
            if (seen.insert(d.crossed_sorted()).second) pool.push_back(d);
      if (rng)
        std::shuffle(pool.begin(), pool.end(), *rng);
      else
        std::sort(pool.begin(), pool.end(), [](const circuit& x, const circuit& y) {
          return x.crossed_sorted() < y.crossed_sorted();
        });
      std::vector<circuit> chosen;
      for (const auto& d : pool)
        if (std::all_of(chosen.begin(), chosen.end(), [&](const circuit& x) { return a.admissible(x, d); }))
          chosen.push_back(d);
      if (chosen.empty()) continue;

      std::vector<std::vector<int>> id_sets;
      for (const auto& d : chosen) id_sets.push_back(crossed_ids(work[qi], d));
      std::vector<std::string> gamma_ids;
      for (const auto& g : gammas) gamma_ids.push_back(ids_text(crossed_ids(work[qi], g)));
      std::sort(gamma_ids.begin(), gamma_ids.end());
      std::string gtext;
      for (const auto& t : gamma_ids) gtext += (gtext.empty() ? "" : " ") + t;
      res.trace.push_back("step " + std::to_string(step) + ": nontrivial " + gtext + ", splitting along " +
                          std::to_string(chosen.size()) + " admissible circuit(s)");
      std::vector<labeled_polyhedron> pieces{work[qi]};
      work.erase(work.begin() + qi);
      for (const auto& ids : id_sets) {
        std::size_t at = pieces.size();
        std::optional<circuit> found;
        for (std::size_t j = 0; j < pieces.size() && !found; ++j) {
          found = find_circuit_by_ids(pieces[j], ids);
          if (found) at = j;
        }
        if (!found) {
          res.flags.push_back("admissible circuit " + ids_text(ids) + " lost after earlier splits");
          continue;
        }
        split_record rec;
        rec.step = step;
        rec.crossed = ids;
        rec.nontrivial = !found->trivial;
        auto everything = [&]() { return prismatic_complexity(pieces) + total_c(); };
        rec.c_before = everything();
        auto s = split_along(pieces[at], *found);
        pieces.erase(pieces.begin() + at);
        pieces.push_back(std::move(s.interior));
        pieces.push_back(std::move(s.exterior));
        rec.c_after = everything();
        if (rec.nontrivial && rec.c_after >= rec.c_before)
          res.flags.push_back("complexity did not drop splitting along " + ids_text(ids));
        res.trace.push_back("  split along " + ids_text(ids) + (rec.nontrivial ? "" : " (trivial)") + " (c " +
                            std::to_string(rec.c_before) + " -> " + std::to_string(rec.c_after) + ")");
        res.splits.push_back(rec);
      }
      for (auto& piece : pieces) work.push_back(std::move(piece));
      progressed = true;
      break;
    }
    if (progressed) continue;
    if (!active.empty())
      throw decompose_error(decompose_errc::no_progress,
                            "no nontrivial Euclidean 4-circuit admits a split or recognition");
    // only trivial Euclidean 4-circuits remain
    std::vector<int> order(work.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    for (int qi : order) {
      auto& a = an[qi];
      const int nf = work[qi].face_count();
      for (const auto& g : a.euclid4) {
        auto [n1, n2] = a.neighborhoods_of(g);
        if (static_cast<int>(n1.support_faces.size()) == nf ||
            static_cast<int>(n2.support_faces.size()) == nf) {
          res.trace.push_back("step " + std::to_string(step) + ": component covered by a neighborhood of trivial " +
                              ids_text(crossed_ids(work[qi], g)) + ", recorded as Seifert-fibered");
          res.seifert_fibered.push_back(work[qi]);
          work.erase(work.begin() + qi);
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
    if (!progressed) break;
  }
  res.trace.push_back("done: " + std::to_string(res.seifert_fibered.size()) + " Seifert-fibered, " +
                      std::to_string(work.size()) + " atoroidal");
  res.atoroidal = std::move(work);
  return res;
}

decomposition_result decompose(const labeled_polyhedron& p, const decompose_options& opts) {
  std::vector<std::string> flags;
  for (int e = 0; e < p.edge_count(); ++e)
    if (!p.label(e).is_coxeter())
      throw decompose_error(decompose_errc::precondition_violated,
                            "edge (" + std::to_string(p.edges()[e].u) + "," + std::to_string(p.edges()[e].v) +
                                ") label " + p.label(e).to_string() + " is not pi/n");
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.degree(v) == 4) {
      flags.push_back("degree-4 vertex " + std::to_string(v));
      continue;
    }
    if (classify_vertex_link(p, v).type != link_type::spherical)
      throw decompose_error(decompose_errc::precondition_violated,
                            "labels at vertex " + std::to_string(v) + " do not sum above pi");
  }
  auto red = spherical_reduce(p, reduce_mode::orbifold_euclidean);
  auto res = decompose_components(std::move(red.components), opts);
  for (std::size_t i = 0; i < red.used.size(); ++i)
    (red.used_geometry[i] == circuit_geometry::spherical ? res.spherical_splits : res.euclidean3_splits)
        .push_back(red.used[i]);
  res.flags.insert(res.flags.begin(), flags.begin(), flags.end());
  return res;
}

}  // namespace polyvol
