#pragma once

#include "polyvol/polyhedron.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyvol {

// Isomorphism invariant for embedded graphs (up to reflection). Two 3-connected
// planar graphs get the same code iff they are isomorphic; with labels, the
// isomorphism must also carry labels.
std::vector<std::int64_t> canonical_code(const plane_map& m,
                                         const std::vector<angle>* labels = nullptr);

std::vector<std::int64_t> canonical_code(const labeled_polyhedron& p);

}  // namespace polyvol
