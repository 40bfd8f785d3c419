#pragma once

#include "polyvol/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyvol {

// Prism conventions (0-based): top vertices t_i = i, bottom b_i = n + i.
// Lateral face F_i holds a_i = (t_i, t_{i+1}) and b_i = (b_i, b_{i+1});
// c_i = (t_{i+1}, b_{i+1}) is shared by F_i and F_{i+1}.
struct prism_labels {
  std::vector<angle> a, b, c;
};

labeled_polyhedron make_prism(int n, const prism_labels& labels);

// One letter per lateral face: R = (pi/2, pi/2), T = (pi/3, pi/2), B = (pi/2, pi/3)
// for (a_i, b_i). Vertical edges all get `c`.
prism_labels prism_labels_from_pattern(const std::string& pattern, angle c);

prism_labels right_horizontal_labels(int n, angle c);
// basic prism with r alternations and s repeats in the pi/3 positions, r + s = n - 3
prism_labels basic_prism_labels(int n, int r, int s);
prism_labels alternating_labels(int n);

labeled_polyhedron make_tetrahedron(angle all);
labeled_polyhedron make_dodecahedron(angle all);

struct prism_structure {
  int n = 0;
  int top = -1, bottom = -1;
  std::vector<int> lateral;   // F_i
  std::vector<int> a, b, c;   // edge indices
};

// Recognizes the combinatorial n-prism (n >= 3). For the cube the first
// disjoint pair of faces is taken as top and bottom.
std::optional<prism_structure> as_prism(const labeled_polyhedron& p);

// Inverse of splitting: glue P along face fp to Q along face fq. Both faces must
// be k-gons of degree-3 vertices. The outer edge at the i-th vertex of fp is fused
// with the outer edge at the (offset - i)-th vertex of fq into one edge labeled
// `seam`.
labeled_polyhedron glue_along_faces(const labeled_polyhedron& p, int fp,
                                    const labeled_polyhedron& q, int fq, int offset,
                                    angle seam);

}  // namespace polyvol
