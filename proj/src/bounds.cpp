#include "polyvol/bounds.hpp"

#include "polyvol/andreev.hpp"
#include "polyvol/circuits.hpp"
#include "polyvol/decompose.hpp"
#include "polyvol/generators.hpp"
#include "polyvol/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace polyvol {

namespace {

double to_double(rational r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

volume_expr of_v8(rational k) { return {k, 0, 0}; }
volume_expr of_v3(rational k) { return {0, k, 0}; }
volume_expr of_c1(rational k) { return {0, 0, k}; }

bound make(const volume_expr& e, const char* theorem) {
  bound b;
  b.expr = e;
  b.theorem = theorem;
  b.raw = e.value();
  b.clamped = b.raw < 0;
  b.value = std::max(b.raw, 0.0);
  return b;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(9);
  os << x;
  return os.str();
}

}  // namespace

double volume_expr::value() const {
  return to_double(v8) * polyvol::v8() + to_double(v3) * polyvol::v3() + to_double(c1) * c1_pi3_volume();
}

volume_expr& volume_expr::operator+=(const volume_expr& o) {
  v8 += o.v8;
  v3 += o.v3;
  c1 += o.c1;
  return *this;
}

volume_expr operator*(rational k, const volume_expr& e) { return {k * e.v8, k * e.v3, k * e.c1}; }
volume_expr operator+(volume_expr a, const volume_expr& b) { return a += b; }

std::string to_string(const volume_expr& e) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](rational k, const char* name) {
    if (k.numerator() == 0) return;
    if (!first) os << " + ";
    first = false;
    os << k.numerator();
    if (k.denominator() != 1) os << '/' << k.denominator();
    os << ' ' << name;
  };
  term(e.v8, "V8");
  term(e.v3, "V3");
  term(e.c1, "C1(pi/3)");
  if (first) os << '0';
  return os.str();
}

const char* to_string(bounds_errc c) {
  switch (c) {
    case bounds_errc::hypothesis_violated: return "HypothesisViolated";
    case bounds_errc::odd_vertex_count: return "OddVertexCount";
    case bounds_errc::not_realizable: return "NotRealizable";
  }
  return "?";
}

bound lower_no_prismatic4(int n4, int n3) {
  return make(of_v8(rational(4 * n4 + n3 - 8, 32)), "weak-lower");
}

bound lower_with_m3(int n4, int n3, int m3) {
  return make(of_v8(rational(4 * n4 + n3 + m3 - 8, 32)), "weak-lower-m3");
}

bound right_angled_lower(int n_ideal, int n_finite) {
  return make(of_v8(rational(4 * n_ideal + n_finite - 8, 32)), "right-angled-lower");
}

bound pi3_lower(int n, int m) {
  if (n < 8) throw bounds_error(bounds_errc::hypothesis_violated, "pi3 bound needs N >= 8");
  return make(of_v3(rational(3 * (n + 2 * m), 8)), "pi3-lower");
}

bound prism_lower(int n) {
  if (n < 4) throw bounds_error(bounds_errc::hypothesis_violated, "prism bounds need n >= 4");
  return make(of_c1(rational(n - 3)), "prism-lower");
}

bound prism_upper(int n) {
  if (n < 4) throw bounds_error(bounds_errc::hypothesis_violated, "prism bounds need n >= 4");
  return make(of_v8(rational(3 * n - 4, 2)), "prism-upper");
}

region_bound prism_region_lower(int v, bool exceptional, std::optional<double> lambda_known) {
  if (v % 2 != 0)
    throw bounds_error(bounds_errc::odd_vertex_count, "prism region with " + std::to_string(v) + " vertices");
  if (v < 2) throw bounds_error(bounds_errc::hypothesis_violated, "prism region needs V >= 2");
  region_bound r;
  if (exceptional) {
    r.b = make({}, "prism-region");
    r.flags.push_back("exceptional prism region: no lower bound, contributes unquantified volume");
    return r;
  }
  if (v >= 10) {
    r.b = make(of_c1(rational(v / 2 - 3)), "prism-region");
    return r;
  }
  if (lambda_known) {
    // V = 8 gives (8/2 - 3) = 1 copy, V = 2, 4, 6 one copy as well
    r.b = make({}, "prism-region");
    r.b.raw = r.b.value = c1_volume(*lambda_known);
    return r;
  }
  r.b = make({}, "prism-region");
  r.flags.push_back("positive-but-unquantified: prism region with " + std::to_string(v) +
                    " vertices contributes vol C_1(lambda) for an unknown lambda");
  return r;
}

bound general_upper(int n4, int e33, int e34, int n2) {
  return make(of_v8(rational(n4 + e33 - 1, 2)) + of_v3(rational(5 * (e34 + n2), 8)), "general-upper");
}

bound ideal_upper(int n_ideal) { return make(of_v8(rational(n_ideal - 4, 2)), "ideal-upper"); }

bound weak_upper(int n4, int n3) {
  return make(of_v8(rational(2 * n4 + 3 * n3 - 2, 4)) + of_v3(rational(15 * n3 + 20 * n4, 16)), "weak-upper");
}

std::pair<bound, bound> corollary_bounds(int n) {
  return {make(of_v8(rational(n - 8, 32)), "vertex-count"),
          make(of_v8(rational(3 * n, 4) - rational(1, 2)) + of_v3(rational(5 * n, 4)), "vertex-count")};
}

assembled_bound assemble_lower(const std::vector<component_data>& parts) {
  assembled_bound out;
  for (const auto& c : parts) {
    contribution t;
    t.component = c.name;
    switch (c.k) {
      case component_data::kind::coxeter_prism: {
        auto b = prism_lower(c.order);
        t.theorem = b.theorem;
        t.expr = b.expr;
        t.value = b.value;
        break;
      }
      case component_data::kind::right_angled: {
        auto b = right_angled_lower(c.n_ideal, c.n_finite);
        t.theorem = b.theorem;
        t.expr = b.expr;
        t.value = b.value;
        if (b.clamped) out.flags.push_back(c.name + ": negative formula value clamped to 0");
        break;
      }
      case component_data::kind::prism_region: {
        auto r = prism_region_lower(c.region_vertices, c.exceptional);
        t.theorem = r.b.theorem;
        t.expr = r.b.expr;
        t.value = r.b.value;
        for (auto& f : r.flags) out.flags.push_back(c.name + ": " + f);
        break;
      }
      case component_data::kind::injected:
        t.theorem = "injected";
        t.expr = c.injected;
        t.value = c.injected.value();
        // injected over a right-angled piece with known counts: compare with the formula
        if (c.n_ideal + c.n_finite > 0) {
          auto b = right_angled_lower(c.n_ideal, c.n_finite);
          if (std::abs(b.value - t.value) > 1e-9)
            out.flags.push_back(c.name + ": injected " + to_string(c.injected) + " differs from formula " +
                                to_string(b.expr) + " for " + std::to_string(c.n_ideal) + " ideal, " +
                                std::to_string(c.n_finite) + " finite vertices");
        }
        break;
    }
    out.lower += t.value;
    out.breakdown.push_back(std::move(t));
  }
  return out;
}

namespace {

bool all_at_most_pi3(const labeled_polyhedron& p) {
  for (const auto& a : p.labels()) {
    if (a.is_exact() ? a.pi_multiple() > rational(1, 3) : a.radians() > M_PI / 3 + angle_tolerance)
      return false;
  }
  return true;
}

bool in_open_pi3_pi2(const angle& a) {
  if (a.is_exact()) return a.pi_multiple() > rational(1, 3) && a.pi_multiple() < rational(1, 2);
  return a.radians() > M_PI / 3 + angle_tolerance && a.radians() < M_PI / 2 - angle_tolerance;
}

// prism lower bound on q (an n-prism); uniformizes Coxeter labels when the
// angle hypothesis fails
std::optional<bound> prism_candidate(const labeled_polyhedron& q, int n, std::vector<std::string>& flags,
                                     const std::string& who) {
  if (n < 4) return std::nullopt;
  bool hyp = std::none_of(q.labels().begin(), q.labels().end(), in_open_pi3_pi2);
  if (!hyp) {
    if (!q.is_coxeter()) {
      flags.push_back(who + ": labels in (pi/3, pi/2) on a non-Coxeter prism; prism lower bound skipped");
      return std::nullopt;
    }
    flags.push_back(who + ": labels uniformized to pi/2, pi/3 before the prism bound");
  }
  return prism_lower(n);
}

std::map<int, angle> labels_by_id(const labeled_polyhedron& p) {
  std::map<int, angle> out;
  for (int e = 0; e < p.edge_count(); ++e) out[p.origin().edge[e]] = p.label(e);
  return out;
}

// labels of a piece taken back from the component it came from; introduced edges pi/2
labeled_polyhedron relabel(const labeled_polyhedron& piece, const std::map<int, angle>& source) {
  std::vector<angle> labels;
  for (int e = 0; e < piece.edge_count(); ++e) {
    auto it = source.find(piece.origin().edge[e]);
    labels.push_back(it == source.end() ? angle::pi_over(2) : it->second);
  }
  return piece.with_labels(std::move(labels));
}

// faces that degenerate when the piece is deformed to right angles
struct degeneration {
  int n_ideal = 0, n_finite = 0;
  bool overlapping = false;
  bool hypothesis_ok = true;  // pi/2 on the edges of degenerating faces
};

degeneration count_right_angled(const labeled_polyhedron& r) {
  const auto& m = r.map();
  std::vector<int> collapse_tri = parallel_triangles(r);
  std::set<int> collapse(collapse_tri.begin(), collapse_tri.end());
  std::set<int> quads;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto kind = r.origin().kind[f];
    if (kind == face_kind::cap3) collapse.insert(f);
    if (kind == face_kind::cap4) {
      collapse.insert(f);
      quads.insert(f);
    }
  }
  degeneration d;
  std::vector<int> hits(m.vertex_count(), 0);
  for (int f : collapse) {
    const auto& fc = m.faces()[f];
    for (std::size_t i = 0; i < fc.size(); ++i) {
      ++hits[fc[i]];
      if (!(r.label(m.edge_index(fc[i], fc[(i + 1) % fc.size()])) == angle::pi_over(2)))
        d.hypothesis_ok = false;
    }
    if (quads.count(f)) ++d.n_ideal;
    else ++d.n_finite;
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (hits[v] > 1) d.overlapping = true;
    if (hits[v]) continue;
    if (m.degree(v) == 4) ++d.n_ideal;
    else ++d.n_finite;
  }
  return d;
}

bool is_exceptional_region(const labeled_polyhedron& r) {
  auto ps = as_prism(r);
  if (!ps) return false;
  for (int i = 0; i < ps->n; ++i) {
    int a = ps->a[i], b = ps->b[i];
    bool original = r.origin().kind[ps->lateral[i]] == face_kind::original;
    if (original && !(r.label(a) == angle::pi_over(2) && r.label(b) == angle::pi_over(2))) return false;
  }
  for (int f = 0; f < r.face_count(); ++f) {
    if (r.origin().kind[f] != face_kind::cap4) continue;
    // the circuit around the introduced quadrilateral
    std::vector<int> ring;
    const auto& fc = r.faces()[f];
    for (std::size_t i = 0; i < fc.size(); ++i) {
      int e = r.edge_index(fc[i], fc[(i + 1) % fc.size()]);
      auto [x, y] = r.map().edge_faces(e);
      ring.push_back(x == f ? y : x);
    }
    auto c = make_circuit(r, ring);
    if (!crossed_edges_disjoint(r, c.edges)) continue;
    if (classify_quadrilateral(r, c).kind == quadrilateral_kind::acylindrical) return false;
  }
  return true;
}

int original_vertices(const labeled_polyhedron& q) {
  return static_cast<int>(std::count_if(q.origin().vertex.begin(), q.origin().vertex.end(),
                                        [](int v) { return v >= 0; }));
}

contribution from_bound(const std::string& component, const bound& b) {
  contribution c;
  c.component = component;
  c.theorem = b.theorem;
  c.value = b.value;
  c.expr = b.expr;
  return c;
}

struct candidate {
  std::string route;
  std::vector<contribution> terms;
  double total() const {
    double s = 0;
    for (const auto& t : terms) s += t.value;
    return s;
  }
};

// lower bound through turnover reduction and the quadrilateral decomposition
candidate decomposition_route(const labeled_polyhedron& p, bound_report& rep) {
  candidate cand{"decomposition", {}};
  auto reduced = spherical_reduce(p, reduce_mode::hyperbolic);
  const bool coxeter = p.is_coxeter();
  for (std::size_t k = 0; k < reduced.components.size(); ++k) {
    const auto& piece = reduced.components[k];
    const std::string tid = "T" + std::to_string(k);

    // capping the turnovers: collapse introduced triangles
    auto capped = piece;
    for (bool again = true; again;) {
      again = false;
      for (int f : parallel_triangles(capped)) {
        if (capped.origin().kind[f] != face_kind::cap3) continue;
        try {
          capped = collapse_triangle(capped, f);
          again = true;
          break;
        } catch (const polyhedron_error&) {
        }
      }
    }
    if (auto ps = as_prism(capped); ps && ps->n >= 4) {
      if (auto b = prism_candidate(capped, ps->n, rep.flags, tid)) {
        rep.components.push_back({tid, "turnover piece (prism)", 0, 0, 0});
        cand.terms.push_back(from_bound(tid, *b));
        continue;
      }
    }

    std::vector<angle> right(piece.edge_count(), angle::pi_over(2));
    auto shadow = piece.with_labels(std::move(right));
    decomposition_result d;
    try {
      d = decompose(shadow);
    } catch (const std::exception& e) {
      rep.flags.push_back(tid + ": decomposition failed (" + e.what() + "); contributes 0");
      continue;
    }
    for (const auto& f : d.flags) rep.flags.push_back(tid + ": " + f);
    const auto source = labels_by_id(piece);

    for (std::size_t i = 0; i < d.atoroidal.size(); ++i) {
      const std::string id = tid + ".AT" + std::to_string(i);
      auto r = relabel(d.atoroidal[i], source);
      bool realizable = false;
      try {
        realizable = check_andreev(r).realizable;
      } catch (const std::exception& e) {
        rep.flags.push_back(id + ": " + e.what());
      }
      auto deg = count_right_angled(r);
      if (!realizable) {
        rep.flags.push_back(id + ": relabeled component fails Andreev's conditions; contributes 0");
        rep.components.push_back({id, "atoroidal", deg.n_ideal, deg.n_finite, 0});
        cand.terms.push_back(from_bound(id, make({}, "right-angled-lower")));
        continue;
      }
      if (deg.overlapping) rep.flags.push_back(id + ": degenerating faces share vertices; counts approximate");
      if (!deg.hypothesis_ok)
        rep.flags.push_back(id + ": a degenerating face has an edge label below pi/2; right-angled deformation not justified");
      auto b = right_angled_lower(deg.n_ideal, deg.n_finite);
      if (b.clamped) rep.flags.push_back(id + ": negative formula value clamped to 0");
      rep.components.push_back({id, "atoroidal", deg.n_ideal, deg.n_finite, 0});
      cand.terms.push_back(from_bound(id, b));
    }
    for (std::size_t i = 0; i < d.seifert_fibered.size(); ++i) {
      const std::string id = tid + ".SF" + std::to_string(i);
      auto r = relabel(d.seifert_fibered[i], source);
      int v = original_vertices(r);
      rep.components.push_back({id, "prism region", 0, 0, v});
      if (!coxeter) {
        rep.flags.push_back(id + ": prism-region bound needs Coxeter labels; contributes 0");
        cand.terms.push_back(from_bound(id, make({}, "prism-region")));
        continue;
      }
      try {
        auto rb = prism_region_lower(v, is_exceptional_region(r));
        for (auto& f : rb.flags) rep.flags.push_back(id + ": " + f);
        cand.terms.push_back(from_bound(id, rb.b));
      } catch (const bounds_error& e) {
        rep.flags.push_back(id + ": " + e.what() + "; contributes 0");
        cand.terms.push_back(from_bound(id, make({}, "prism-region")));
      }
    }
  }
  return cand;
}

}  // namespace

bound_report estimate(const labeled_polyhedron& input) {
  bound_report rep;

  realizability_report chk;
  try {
    chk = check_andreev(input);
  } catch (const andreev_error& e) {
    throw bounds_error(bounds_errc::not_realizable, e.what());
  }
  labeled_polyhedron work = input;
  if (!chk.realizable) {
    realizability_report gen;
    try {
      gen = check_generalized(input);
    } catch (const andreev_error& e) {
      throw bounds_error(bounds_errc::not_realizable, e.what());
    }
    if (!gen.realizable) {
      std::string why;
      for (const auto& v : chk.violated) why += (why.empty() ? "" : ", ") + v.condition;
      throw bounds_error(bounds_errc::not_realizable, "violates " + why);
    }
    // bound the truncated polyhedron; restart provenance so its vertices count
    auto t = truncate_hyperideal(input);
    std::map<std::pair<int, int>, angle> lab;
    for (int e = 0; e < t.edge_count(); ++e) lab[{t.edges()[e].u, t.edges()[e].v}] = t.label(e);
    work = build_polyhedron(t.vertex_count(), t.faces(),
                            [&](int a, int b) { return lab.at({std::min(a, b), std::max(a, b)}); });
    rep.flags.push_back("hyperideal vertices truncated; bounds refer to the truncated polyhedron");
    if (!check_andreev(work).realizable) rep.flags.push_back("truncated polyhedron fails Andreev's conditions");
  }

  auto& c = rep.counts;
  c.n = work.vertex_count();
  for (int v = 0; v < c.n; ++v) (work.degree(v) == 4 ? c.n4 : c.n3)++;
  c.m3 = static_cast<int>(enumerate_prismatic_circuits(work, 3).size());
  c.trunc = truncation_counts_of(work);
  const bool no_p4 = enumerate_prismatic_circuits(work, 4).empty();

  std::vector<candidate> cands;
  if (all_at_most_pi3(work) && c.n >= 8) cands.push_back({"pi3", {from_bound("P", pi3_lower(c.n, c.m3))}});
  if (no_p4) {
    auto b = lower_with_m3(c.n4, c.n3, c.m3);
    if (b.clamped) rep.flags.push_back("weak lower bound formula negative; clamped to 0");
    cands.push_back({"no-prismatic-4", {from_bound("P", b)}});
  }
  auto ps = as_prism(work);
  if (ps) {
    if (ps->n >= 4)
      if (auto b = prism_candidate(work, ps->n, rep.flags, "P")) cands.push_back({"prism", {from_bound("P", *b)}});
  } else {
    cands.push_back(decomposition_route(work, rep));
  }

  const candidate* best = nullptr;
  for (const auto& k : cands) {
    contribution sum;
    sum.component = "P";
    sum.theorem = k.route;
    for (const auto& t : k.terms) {
      sum.value += t.value;
      sum.expr += t.expr;
    }
    rep.candidates.push_back(sum);
    if (!best || k.total() > best->total()) best = &k;
  }
  if (best) {
    rep.lower = best->total();
    rep.lower_route = best->route;
    rep.breakdown = best->terms;
  } else {
    rep.lower_route = "none";
    rep.flags.push_back("no lower bound route applies");
  }
  if (std::any_of(rep.flags.begin(), rep.flags.end(),
                  [](const std::string& f) { return f.find("unquantified") != std::string::npos; }))
    rep.flags.push_back("lower bound is not tight; some regions contribute unquantified positive volume");

  // upper bounds
  const auto& t = c.trunc;
  std::vector<bound> ups{general_upper(t.n4, t.e33, t.e34, t.n2), weak_upper(c.n4, c.n3)};
  if (t.finite() == 0) ups.push_back(ideal_upper(t.ideal()));
  if (ps && ps->n >= 4) ups.push_back(prism_upper(ps->n));
  rep.upper = ups.front().value;
  for (const auto& b : ups) {
    rep.upper_breakdown.push_back(from_bound("P", b));
    rep.upper = std::min(rep.upper, b.value);
  }
  if (rep.lower > rep.upper) rep.flags.push_back("lower bound exceeds upper bound: " + fmt(rep.lower) + " > " + fmt(rep.upper));
  return rep;
}

}  // namespace polyvol
