#pragma once

#include "polyvol/angle.hpp"
#include "polyvol/polyhedron.hpp"
#include "polyvol/rewrite.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyvol {

// a V_8 + b V_3 + c vol(C_1(pi/3)), coefficients kept exact
struct volume_expr {
  rational v8{0}, v3{0}, c1{0};
  double value() const;
  volume_expr& operator+=(const volume_expr& o);
};
volume_expr operator*(rational k, const volume_expr& e);
volume_expr operator+(volume_expr a, const volume_expr& b);
std::string to_string(const volume_expr& e);

// A formula value. Negative formula values clamp to zero.
struct bound {
  volume_expr expr;
  std::string theorem;
  double raw = 0;    // the formula itself
  double value = 0;  // max(raw, 0)
  bool clamped = false;
};

enum class bounds_errc { hypothesis_violated, odd_vertex_count, not_realizable };
const char* to_string(bounds_errc c);

class bounds_error : public std::runtime_error {
 public:
  bounds_error(bounds_errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  bounds_errc code() const { return code_; }

 private:
  bounds_errc code_;
};

// lower bounds
bound lower_no_prismatic4(int n4, int n3);
bound lower_with_m3(int n4, int n3, int m3);
bound right_angled_lower(int n_ideal, int n_finite);
bound pi3_lower(int n, int m);  // n >= 8
bound prism_lower(int n);       // n >= 4

struct region_bound {
  bound b;
  std::vector<std::string> flags;
};
// lambda_known is the determining angle of C_1 when the caller knows it
region_bound prism_region_lower(int v, bool exceptional, std::optional<double> lambda_known = {});

// upper bounds
bound prism_upper(int n);  // n >= 4
bound general_upper(int n4, int e33, int e34, int n2);
bound ideal_upper(int n_ideal);  // all vertices of the truncation ideal
bound weak_upper(int n4, int n3);
std::pair<bound, bound> corollary_bounds(int n);

// one piece of an assembled lower bound
struct contribution {
  std::string component;
  std::string theorem;
  double value = 0;
  volume_expr expr;
  bool exact_expr = true;  // false when value is not a combination of the constants
};

// Per-component data for assembling a lower bound without the polyhedron.
struct component_data {
  enum class kind { coxeter_prism, right_angled, prism_region, injected };
  kind k = kind::right_angled;
  std::string name;
  int order = 0;                  // coxeter_prism
  int n_ideal = 0, n_finite = 0;  // right_angled; on injected, compared with the formula
  int region_vertices = 0;        // prism_region
  bool exceptional = false;
  volume_expr injected;           // injected
};

struct assembled_bound {
  double lower = 0;
  std::vector<contribution> breakdown;
  std::vector<std::string> flags;
};
assembled_bound assemble_lower(const std::vector<component_data>& parts);

struct input_counts {
  int n = 0, n3 = 0, n4 = 0, m3 = 0;
  truncation_counts trunc;
};

struct component_report {
  std::string id;
  std::string role;  // turnover piece, atoroidal, prism region
  int n_ideal = 0, n_finite = 0, region_vertices = 0;
};

struct bound_report {
  double lower = 0;
  double upper = 0;
  std::string lower_route;
  std::vector<contribution> breakdown;        // terms of the chosen lower bound
  std::vector<contribution> upper_breakdown;  // every upper bound computed
  std::vector<contribution> candidates;       // every lower route tried
  std::vector<component_report> components;
  input_counts counts;
  std::vector<std::string> flags;
};

bound_report estimate(const labeled_polyhedron& p);

}  // namespace polyvol
