#pragma once

#include "polyvol/circuits.hpp"
#include "polyvol/polyhedron.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyvol {

enum class decompose_errc {
  not_prismatic,
  not_euclidean_4_circuit,
  precondition_violated,
  has_prismatic_3_circuit,
  not_coxeter,
  no_progress,
};

class decompose_error : public std::runtime_error {
 public:
  decompose_error(decompose_errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  decompose_errc code() const { return code_; }

 private:
  decompose_errc code_;
};

// Cutting P along a prismatic circuit. Each part keeps the faces on its side,
// the cut faces, and one new face (triangle or quadrilateral) whose edges are
// labeled pi/2. The exterior part is the side holding vertex 0.
struct split_result {
  labeled_polyhedron interior, exterior;
  std::vector<int> crossed;  // edge ids (provenance) of the crossed edges
  int length = 0;
};

split_result split_along(const labeled_polyhedron& p, const circuit& c);

// Locates a circuit by the provenance ids of its crossed edges.
std::optional<circuit> find_circuit_by_ids(const labeled_polyhedron& p,
                                           const std::vector<int>& edge_ids);

struct neighborhood {
  int index = 1;  // N_1 shares faces[0], faces[2] of the base; N_2 shares faces[1], faces[3]
  circuit base;
  std::vector<circuit> members;
  std::set<int> support_faces;
  std::set<int> support_edges;
  std::vector<circuit> boundary;
};

// euclid4 may pass the precomputed Euclidean prismatic 4-circuits of p
std::pair<neighborhood, neighborhood> neighborhoods(const labeled_polyhedron& p, const circuit& gamma,
                                                    const std::vector<circuit>* euclid4 = nullptr);

// circuits lying in some boundary of a neighborhood, keyed by sorted crossed edges
std::set<std::vector<int>> complexity_set(const labeled_polyhedron& p);
int prismatic_complexity(const labeled_polyhedron& p);
int prismatic_complexity(const std::vector<labeled_polyhedron>& parts);

// the pair condition used for admissible sets
bool admissible_pair(const labeled_polyhedron& p, const circuit& x, const circuit& y);

enum class reduce_mode {
  orbifold,            // spherical prismatic 3-circuits
  orbifold_euclidean,  // spherical and Euclidean
  hyperbolic,          // every prismatic 3-circuit
};

struct reduce_result {
  std::vector<labeled_polyhedron> components;
  std::vector<std::vector<int>> used;  // crossed edge ids of each circuit split along
  std::vector<circuit_geometry> used_geometry;
};

reduce_result spherical_reduce(const labeled_polyhedron& p, reduce_mode mode);

struct decompose_options {
  std::optional<std::uint64_t> seed;  // randomize choice orders when set
  int max_steps = 10000;
};

struct split_record {
  int step = 0;
  std::vector<int> crossed;  // edge ids
  bool nontrivial = false;
  int c_before = 0, c_after = 0;
};

struct decomposition_result {
  std::vector<labeled_polyhedron> seifert_fibered;
  std::vector<labeled_polyhedron> atoroidal;
  std::vector<std::vector<int>> spherical_splits;
  std::vector<std::vector<int>> euclidean3_splits;
  std::vector<split_record> splits;
  std::vector<std::string> trace;
  std::vector<std::string> flags;
};

// Pre-splits nontrivial spherical and Euclidean 3-circuits, then runs the
// decomposition loop on the pieces.
decomposition_result decompose(const labeled_polyhedron& p, const decompose_options& opts = {});

// Runs the loop on pieces that already satisfy the preconditions.
decomposition_result decompose_components(std::vector<labeled_polyhedron> parts,
                                          const decompose_options& opts = {});

// every Euclidean prismatic 4-circuit trivial
bool is_atoroidal(const labeled_polyhedron& p);

}  // namespace polyvol
