#include "polyvol/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace polyvol {

namespace {

std::pair<std::int64_t, std::int64_t> label_key(const angle& a) {
  if (a.is_exact()) return {a.pi_multiple().numerator(), a.pi_multiple().denominator()};
  return {-1, std::llround(a.radians() * 1e9)};
}

std::vector<std::int64_t> code_from(const plane_map& m, const std::vector<angle>* labels,
                                    int u, int v, bool reversed) {
  const int n = m.vertex_count();
  std::vector<int> number(n, -1), ref(n, -1), order;
  order.reserve(n);
  number[u] = 0;
  ref[u] = v;
  order.push_back(u);
  std::vector<std::int64_t> code;
  code.reserve(4 * m.edge_count() + n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    const auto& rot = m.rotation(x);
    const int d = static_cast<int>(rot.size());
    int at = static_cast<int>(std::find(rot.begin(), rot.end(), ref[x]) - rot.begin());
    for (int j = 0; j < d; ++j) {
      int y = rot[((reversed ? at - j : at + j) % d + d) % d];
      if (number[y] < 0) {
        number[y] = static_cast<int>(order.size());
        ref[y] = x;
        order.push_back(y);
      }
      code.push_back(number[y]);
      if (labels) {
        auto [a, b] = label_key((*labels)[m.edge_index(x, y)]);
        code.push_back(a);
        code.push_back(b);
      }
    }
    code.push_back(-1);
  }
  return code;
}

}  // namespace

std::vector<std::int64_t> canonical_code(const plane_map& m, const std::vector<angle>* labels) {
  std::vector<std::int64_t> best;
  for (const auto& e : m.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      for (bool rev : {false, true}) {
        auto c = code_from(m, labels, a, b, rev);
        if (best.empty() || c < best) best = std::move(c);
      }
    }
  }
  best.insert(best.begin(), {m.vertex_count(), m.edge_count()});
  return best;
}

std::vector<std::int64_t> canonical_code(const labeled_polyhedron& p) {
  return canonical_code(p.map(), &p.labels());
}

}  // namespace polyvol
