#pragma once

#include "polyvol/andreev.hpp"
#include "polyvol/bounds.hpp"
#include "polyvol/decompose.hpp"
#include "polyvol/polyhedron.hpp"

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace polyvol {

// malformed documents (missing fields, wrong types, bad fractions)
class format_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"vertices": n, "faces": [[...]], "labels": [{"edge": [u, v], "pi_over": k}, ...]}
// A label may instead carry "radians": x or "pi_fraction": "p/q".
// Throws format_error or polyhedron_error.
labeled_polyhedron polyhedron_from_json(const nlohmann::json& doc);
labeled_polyhedron read_polyhedron(std::istream& in);

nlohmann::json to_json(const labeled_polyhedron& p);
nlohmann::json to_json(const realizability_report& r);
nlohmann::json to_json(const decomposition_result& r);
nlohmann::json to_json(const bound_report& r);

// 9 significant digits, so dumps are stable
double sig9(double x);

}  // namespace polyvol
