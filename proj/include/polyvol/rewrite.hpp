#pragma once

#include "polyvol/andreev.hpp"
#include "polyvol/circuits.hpp"
#include "polyvol/polyhedron.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvol {

struct truncation_counts {
  int n2 = 0, n3 = 0, n4 = 0;
  int e33 = 0, e34 = 0;
  // vertices of the full truncation
  int ideal() const { return n4 + e33; }
  int finite() const { return e34 + n2; }
};

truncation_counts truncation_counts_of(const labeled_polyhedron& p);

struct full_truncation_result {
  labeled_polyhedron polyhedron;  // all labels pi/2
  truncation_counts counts;
};

// Replaces each N_3 vertex by the triangle on the midpoints of its edges;
// E_33 edges collapse to a single (ideal) vertex.
full_truncation_result full_truncation(const labeled_polyhedron& p);

// Cuts off every vertex whose link is hyperbolic. New edges are pi/2, the
// rest keep their labels. Returns p unchanged when there is nothing to cut.
labeled_polyhedron truncate_hyperideal(const labeled_polyhedron& p);

// Triangular faces with trivalent corners whose three neighbouring faces form
// a prismatic 3-circuit ("parallel" triangles).
std::vector<int> parallel_triangles(const labeled_polyhedron& p);

// Replaces triangular face f by a vertex. Throws polyhedron_error when the
// result is not a polyhedron.
labeled_polyhedron collapse_triangle(const labeled_polyhedron& p, int f);

// Collapses parallel triangles to vertices, one at a time, skipping any whose
// collapse would not leave a polyhedron. Surviving edges keep their labels.
struct extension_result {
  labeled_polyhedron polyhedron;
  int collapsed = 0;
  int skipped = 0;
};
extension_result extend(const labeled_polyhedron& p);

enum class rewrite_errc { has_prismatic_3_circuit, not_coxeter, too_few_faces };
const char* to_string(rewrite_errc c);

class rewrite_error : public std::runtime_error {
 public:
  rewrite_error(rewrite_errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  rewrite_errc code() const { return code_; }

 private:
  rewrite_errc code_;
};

struct uniformized {
  labeled_polyhedron polyhedron;  // pi/n -> pi/2 for n = 2, pi/3 otherwise
  realizability_report check;
};
uniformized uniformize_labeling(const labeled_polyhedron& p);

enum class quadrilateral_kind { cylindrical, acylindrical };
const char* to_string(quadrilateral_kind k);

struct quadrilateral_report {
  quadrilateral_kind kind = quadrilateral_kind::acylindrical;
  int piece = -1;                // 0 exterior, 1 interior; where the witness sits
  std::vector<int> witness_ids;  // crossed edge ids of the witness circuit
};

// T is a prismatic 4-circuit. Cylindrical when, after splitting along T, some
// prismatic 4-circuit crosses two edges of the copy of T and two pi/2 edges.
quadrilateral_report classify_quadrilateral(const labeled_polyhedron& p, const circuit& t);

}  // namespace polyvol
