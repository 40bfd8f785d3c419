#include "polyvol/angle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace polyvol {

angle angle::pi_fraction(std::int64_t p, std::int64_t q) {
  if (q == 0) throw std::invalid_argument("angle: zero denominator");
  angle a;
  a.exact_ = true;
  a.frac_ = rational(p, q);
  a.rad_ = std::numbers::pi * static_cast<double>(a.frac_.numerator()) /
           static_cast<double>(a.frac_.denominator());
  return a;
}

angle angle::from_radians(double r) {
  angle a;
  a.exact_ = false;
  a.frac_ = rational(0);
  a.rad_ = r;
  return a;
}

rational angle::pi_multiple() const {
  if (!exact_) throw std::logic_error("angle is not an exact multiple of pi");
  return frac_;
}

double angle::radians() const { return rad_; }

std::string angle::to_string() const {
  std::ostringstream os;
  if (exact_) {
    os << frac_.numerator();
    if (frac_.denominator() != 1) os << '/' << frac_.denominator();
    os << " pi";
  } else {
    os.precision(12);
    os << rad_ << " rad";
  }
  return os.str();
}

bool angle::is_coxeter() const { return coxeter_order() != 0; }

std::int64_t angle::coxeter_order() const {
  if (!exact_) return 0;
  if (frac_.numerator() != 1 || frac_.denominator() < 2) return 0;
  return frac_.denominator();
}

bool operator==(const angle& a, const angle& b) {
  if (a.exact_ && b.exact_) return a.frac_ == b.frac_;
  return std::abs(a.rad_ - b.rad_) <= angle_tolerance;
}

sum_comparison compare_sum(std::span<const angle> parts, rational target) {
  sum_comparison out;
  bool all_exact = true;
  for (const auto& p : parts) all_exact = all_exact && p.is_exact();
  if (all_exact) {
    rational s(0);
    for (const auto& p : parts) s += p.pi_multiple();
    out.sign = (s > target) - (s < target);
    return out;
  }
  double s = 0;
  for (const auto& p : parts) s += p.radians();
  double t = std::numbers::pi * static_cast<double>(target.numerator()) /
             static_cast<double>(target.denominator());
  double d = s - t;
  out.exact = false;
  if (std::abs(d) <= angle_tolerance) {
    out.near_tie = true;
    out.sign = 0;
  } else {
    out.sign = d > 0 ? 1 : -1;
  }
  return out;
}

angle parse_pi_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return angle::pi_fraction(p, 1);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    long long p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    long long q = std::stoll(b, &used);
    if (used != b.size() || q <= 0) throw std::invalid_argument(text);
    return angle::pi_fraction(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad angle '" + text + "', expected p/q");
  }
}

}  // namespace polyvol
