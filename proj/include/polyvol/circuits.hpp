#pragma once

#include "polyvol/polyhedron.hpp"

#include <array>
#include <vector>

namespace polyvol {

enum class circuit_geometry { spherical, euclidean, hyperbolic };
const char* to_string(circuit_geometry g);

// A cycle in the dual graph. faces[i] and faces[i+1] are joined across edges[i].
struct circuit {
  int length = 0;
  std::vector<int> faces;
  std::vector<int> edges;  // crossed primal edges (indices into P)
  circuit_geometry geometry = circuit_geometry::hyperbolic;
  bool trivial = false;
  bool near_tie = false;

  std::vector<int> crossed_sorted() const;
};

// Which side of a circuit things lie on. Side 0 is the one holding vertex 0.
struct circuit_sides {
  std::vector<int> vertex_side;       // per primal vertex
  std::vector<int> face_side;         // per face, -1 for faces on the circuit
  std::array<int, 2> inner_faces{};   // faces strictly on each side
};

bool crossed_edges_disjoint(const labeled_polyhedron& p, const std::vector<int>& edges);

circuit_sides sides_of(const labeled_polyhedron& p, const circuit& c);

// Builds a circuit from a dual cycle, filling geometry and triviality.
circuit make_circuit(const labeled_polyhedron& p, const std::vector<int>& face_cycle);

// All prismatic k-circuits (k = 3 or 4), sorted by crossed edge set.
std::vector<circuit> enumerate_prismatic_circuits(const labeled_polyhedron& p, int k);

// Label-sum classification against pi (k = 3) or 2 pi (k = 4).
sum_comparison circuit_sum(const labeled_polyhedron& p, const std::vector<int>& edges);

}  // namespace polyvol
