#include "polyvol/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polyvol {

namespace {

constexpr double pi = std::numbers::pi;

// Lambda on (0, pi/2]: split off the log singularity of log(2 sin t) at 0
double lobachevsky_core(double x) {
  if (x == 0) return 0;
  auto smooth = [](double t) { return t == 0 ? 0.0 : std::log(std::sin(t) / t); };
  double rem = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(smooth, 0.0, x, 15, 1e-15);
  return x - x * std::log(2 * x) - rem;
}

void check_mu(double mu) {
  if (!(mu >= 0 && mu < pi / 2))
    throw std::domain_error("determining angle " + std::to_string(mu) + " outside [0, pi/2)");
}

}  // namespace

double lobachevsky(double theta) {
  double x = std::fmod(theta, pi);
  if (x < 0) x += pi;  // now in [0, pi)
  if (x > pi / 2) return -lobachevsky_core(pi - x);
  return lobachevsky_core(x);
}

double v3() {
  static const double v = 3 * lobachevsky(pi / 3);
  return v;
}

double v8() {
  static const double v = 8 * lobachevsky(pi / 4);
  return v;
}

const char* to_string(cube_family f) { return f == cube_family::c1 ? "c1" : "c2"; }

double cosh_rho(cube_family f, double mu) {
  check_mu(mu);
  double c = std::cos(mu);
  if (f == cube_family::c1) {
    double c2 = c * c;
    return std::sqrt((1 + 24 * c2 + std::sqrt(1 + 48 * c2)) / (32 * c2));
  }
  return std::sqrt((3 * c + 1) / (4 * c));
}

double rho(cube_family f, double mu) {
  double ch = cosh_rho(f, mu);
  return ch <= 1 ? 0.0 : std::acosh(ch);
}

double lambert_volume(double alpha, double beta, double gamma, std::optional<double> edge_length) {
  for (double a : {alpha, beta, gamma})
    if (!(a >= 0 && a <= pi / 2 + 1e-15))
      throw std::domain_error("essential angle outside [0, pi/2]");
  bool standard = std::abs(alpha - pi / 3) < 1e-15 && std::abs(beta - pi / 3) < 1e-15;
  double theta;
  if (gamma >= pi / 2) {
    theta = pi / 2;  // the c_1 edge runs off to infinity
  } else {
    double ch;
    if (edge_length) {
      ch = std::cosh(*edge_length);
    } else if (standard) {
      ch = cosh_rho(cube_family::c1, gamma);
    } else {
      throw std::domain_error("lambert_volume needs the c_1 edge length for non-standard angles");
    }
    double sa = std::sin(alpha), sb = std::sin(beta);
    double num = ch * ch - sa * sa * sb * sb;
    if (num < 0) throw std::domain_error("principal parameter undefined");
    theta = std::atan2(std::sqrt(num), std::cos(alpha) * std::cos(beta));
  }
  auto L = lobachevsky;
  return 0.25 * (L(alpha + theta) - L(alpha - theta) + L(beta + theta) - L(beta - theta) +
                 L(gamma + theta) - L(gamma - theta) - L(2 * theta) + 2 * L(pi / 2 - theta));
}

double lambert_volume_gamma0(double alpha, double beta) {
  double sa = std::sin(alpha), sb = std::sin(beta);
  double theta = std::atan2(std::sqrt(1 - sa * sa * sb * sb), std::cos(alpha) * std::cos(beta));
  auto L = lobachevsky;
  return 0.25 * (L(alpha + theta) - L(alpha - theta) + L(beta + theta) - L(beta - theta) +
                 4 * L(pi / 2 - theta));
}

double c1_volume(double mu) {
  check_mu(mu);
  return lambert_volume(pi / 3, pi / 3, mu);
}

double v2_at_zero() { return 0.50192050167059907; }

double c2_volume(double mu) {
  check_mu(mu);
  if (mu == 0) return v2_at_zero();
  auto r2 = [](double t) { return rho(cube_family::c2, t); };
  boost::math::quadrature::tanh_sinh<double> ts;
  double integral = ts.integrate(r2, 0.0, mu, 1e-12);
  return v2_at_zero() - 0.5 * integral;
}

double c1_pi3_volume() {
  static const double v = c1_volume(pi / 3);
  return v;
}

double alternating_prism_volume(int n) {
  if (n < 5) throw std::domain_error("alternating prism needs n >= 5");
  return (n - 3) * c1_volume(pi / (2.0 * (n - 3)));
}

basic_prism_angles solve_basic_prism(int r, int s) {
  if (r < 0 || s < 0 || r + s < 1) throw std::domain_error("basic prism needs r, s >= 0, r + s >= 1");
  basic_prism_angles out;
  if (s == 0) {
    out.mu = pi / (2.0 * r);
    return out;
  }
  if (r == 0) {
    out.nu = pi / (2.0 * s);
    return out;
  }
  const double edge = 1e-13;
  auto nu_of = [&](double mu) { return (pi / 2 - r * mu) / s; };
  auto f = [&](double mu) {
    return rho(cube_family::c1, mu) - rho(cube_family::c2, std::max(0.0, nu_of(mu)));
  };
  // mu range where both angles stay in [0, pi/2)
  double lo = std::max(0.0, (pi / 2 - s * (pi / 2 - edge)) / r);
  double hi = std::min(pi / (2.0 * r), pi / 2 - edge);
  double flo = f(lo), fhi = f(hi);
  if (!(flo < 0 && fhi > 0))
    throw std::runtime_error("NoSolution: residual does not change sign for r=" + std::to_string(r) +
                             ", s=" + std::to_string(s));
  boost::uintmax_t iters = 200;
  auto res = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, [](double a, double b) { return std::abs(b - a) < 1e-13; }, iters);
  double mu = 0.5 * (res.first + res.second);
  out.mu = mu;
  out.nu = nu_of(mu);
  return out;
}

double basic_prism_volume(int r, int s) {
  auto a = solve_basic_prism(r, s);
  double v = 0;
  if (a.mu) v += r * c1_volume(*a.mu);
  if (a.nu) v += s * c2_volume(*a.nu);
  return v;
}

}  // namespace polyvol
