#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <span>
#include <string>

namespace polyvol {

using rational = boost::rational<std::int64_t>;

// A dihedral angle. Exact angles are stored as a rational multiple of pi,
// anything else as plain radians.
class angle {
 public:
  angle() = default;

  static angle pi_fraction(std::int64_t p, std::int64_t q);
  static angle pi_over(std::int64_t n) { return pi_fraction(1, n); }
  static angle from_radians(double r);

  bool is_exact() const { return exact_; }
  rational pi_multiple() const;  // throws if !is_exact()
  double radians() const;

  // "1/2" style text for exact angles, decimal radians otherwise
  std::string to_string() const;

  // pi/n with integer n >= 2
  bool is_coxeter() const;
  std::int64_t coxeter_order() const;  // n for pi/n, 0 otherwise

  friend bool operator==(const angle& a, const angle& b);

 private:
  bool exact_ = true;
  rational frac_{1, 2};
  double rad_ = 0.0;
};

constexpr double angle_tolerance = 1e-9;

struct sum_comparison {
  int sign = 0;            // sign of (sum - target)
  bool exact = true;       // decided with rational arithmetic
  bool near_tie = false;   // float comparison landed within angle_tolerance
};

// Compares the sum of `parts` with target_pi_multiple * pi.
sum_comparison compare_sum(std::span<const angle> parts, rational target_pi_multiple);

// Parses "p/q" or "p" as a rational multiple of pi.
angle parse_pi_fraction(const std::string& text);

}  // namespace polyvol
