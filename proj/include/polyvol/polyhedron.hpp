#pragma once

#include "polyvol/angle.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polyvol {

enum class polyhedron_errc {
  not_planar_complex,
  not_3_connected,
  bad_degree,
  label_out_of_range,
  missing_label,
  duplicate_label,
  unknown_edge,
};

const char* to_string(polyhedron_errc c);

class polyhedron_error : public std::runtime_error {
 public:
  polyhedron_error(polyhedron_errc c, const std::string& what)
      : std::runtime_error(what), code_(c) {}
  polyhedron_errc code() const { return code_; }

 private:
  polyhedron_errc code_;
};

struct edge {
  int u = 0, v = 0;  // u < v
};

// Oriented cell decomposition of the sphere given by its face cycles.
// Faces come back consistently oriented; edges are sorted by (u, v).
class plane_map {
 public:
  static plane_map from_faces(int vertex_count, std::vector<std::vector<int>> faces);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<edge>& edges() const { return edges_; }
  const edge& edge_at(int e) const { return edges_[e]; }
  int edge_index(int u, int v) const;  // -1 when absent

  // faces on either side of e: [0] contains u->v, [1] contains v->u
  std::array<int, 2> edge_faces(int e) const { return edge_faces_[e]; }
  // the face containing the directed edge a->b
  int face_left_of(int a, int b) const;

  // neighbours of v in cyclic order; vertex_faces(v)[i] lies between
  // rotation(v)[i] and rotation(v)[i+1]
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  // vertex f of the dual is face f; dual face v is the cycle of faces around v
  plane_map dual() const;

  bool is_3_connected() const;
  bool is_connected_without(int a, int b) const;

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  int n_ = 0;
  std::vector<std::vector<int>> faces_;
  std::vector<edge> edges_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> vertex_faces_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::unordered_map<std::uint64_t, int> dir_face_;
};

enum class face_kind { original, cap3, cap4, truncation };

// Where the pieces of a derived polyhedron came from. Edge ids are stable
// labels: both halves of a split edge keep the id of the edge they came from.
struct provenance {
  std::vector<int> vertex;   // source vertex id, -1 when introduced
  std::vector<int> edge;     // indexed by edge index
  std::vector<int> face;     // source face id, -1 when introduced
  std::vector<face_kind> kind;
};

struct source_tags {
  std::vector<int> vertex;
  std::function<int(int, int)> edge;
  std::vector<int> face;
  std::vector<face_kind> kind;
};

struct edge_label {
  int u = 0, v = 0;
  angle value;
};

struct build_options {
  bool allow_degree4 = true;
  bool require_3_connected = true;
};

class labeled_polyhedron;

labeled_polyhedron build_polyhedron(int vertex_count, std::vector<std::vector<int>> faces,
                                    const std::function<angle(int, int)>& label_of,
                                    build_options opts = {},
                                    const source_tags* tags = nullptr);

class labeled_polyhedron {
 public:
  const plane_map& map() const { return map_; }
  int vertex_count() const { return map_.vertex_count(); }
  int edge_count() const { return map_.edge_count(); }
  int face_count() const { return map_.face_count(); }
  const std::vector<std::vector<int>>& faces() const { return map_.faces(); }
  const std::vector<edge>& edges() const { return map_.edges(); }
  int degree(int v) const { return map_.degree(v); }
  int edge_index(int u, int v) const { return map_.edge_index(u, v); }

  const angle& label(int e) const { return labels_[e]; }
  const std::vector<angle>& labels() const { return labels_; }
  const provenance& origin() const { return origin_; }

  bool is_simplex() const { return vertex_count() == 4; }
  bool is_coxeter() const;
  bool is_trivalent() const;

  // same complex, new labels (validated)
  labeled_polyhedron with_labels(std::vector<angle> labels) const;

  friend labeled_polyhedron build_polyhedron(int, std::vector<std::vector<int>>,
                                             const std::function<angle(int, int)>&,
                                             build_options, const source_tags*);

 private:
  plane_map map_;
  std::vector<angle> labels_;
  provenance origin_;
};

labeled_polyhedron build_polyhedron(int vertex_count, std::vector<std::vector<int>> faces,
                                    const std::vector<edge_label>& labels,
                                    build_options opts = {});


enum class link_type { spherical, euclidean, hyperbolic };
const char* to_string(link_type t);

struct link_classification {
  link_type type = link_type::spherical;
  bool near_tie = false;
};

link_classification classify_vertex_link(const labeled_polyhedron& p, int v);

struct dual_graph {
  int vertex_count = 0;                    // one per face of P
  std::vector<std::array<int, 2>> edges;   // indexed by primal edge id
  std::vector<angle> labels;               // indexed by primal edge id
  std::vector<std::vector<int>> incident;  // dual vertex -> primal edge ids, boundary order
  std::vector<std::vector<int>> faces;     // dual face (primal vertex) -> dual vertex cycle
  std::vector<int> face_of_dual_vertex;    // identity, kept for clarity of callers
  int edge_between(int f, int g) const;    // primal edge id or -1
};

dual_graph make_dual_graph(const labeled_polyhedron& p);

}  // namespace polyvol
