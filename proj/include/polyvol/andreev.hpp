#pragma once

#include "polyvol/polyhedron.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polyvol {

enum class vertex_kind { finite, ideal, hyperideal };
const char* to_string(vertex_kind k);

struct violation {
  std::string condition;  // A1..A7, G1..G3
  std::string witness;
  std::vector<int> vertices, edges, faces;
};

struct realizability_report {
  bool realizable = false;
  bool finite_volume = false;
  std::vector<violation> violated;
  std::vector<vertex_kind> vertex_types;
  std::vector<std::string> flags;  // near ties and similar notes

  bool violates(const std::string& condition) const;
};

enum class andreev_errc { too_few_vertices, obtuse_label, is_triangular_prism };

class andreev_error : public std::runtime_error {
 public:
  andreev_error(andreev_errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  andreev_errc code() const { return code_; }

 private:
  andreev_errc code_;
};

realizability_report check_andreev(const labeled_polyhedron& p);
realizability_report check_generalized(const labeled_polyhedron& p);

}  // namespace polyvol
