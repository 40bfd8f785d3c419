#pragma once

#include <optional>

namespace polyvol {

// Lobachevsky function, -int_0^theta log|2 sin t| dt, for any real theta.
double lobachevsky(double theta);

// regular ideal tetrahedron and right-angled ideal octahedron
double v3();
double v8();

enum class cube_family { c1, c2 };
const char* to_string(cube_family f);

// edge length rho_i(mu) of the cube families; mu in [0, pi/2)
double cosh_rho(cube_family f, double mu);
double rho(cube_family f, double mu);

// Lambert cube volume from its essential angles. With alpha = beta = pi/3 the
// edge length comes from rho(c1, gamma); otherwise pass it in.
double lambert_volume(double alpha, double beta, double gamma,
                      std::optional<double> edge_length = std::nullopt);

// the gamma = 0 closed form with the 4 Lambda(pi/2 - theta) term
double lambert_volume_gamma0(double alpha, double beta);

double c1_volume(double mu);  // V_1(mu)
double c2_volume(double mu);  // V_2(mu)
double v2_at_zero();          // V_2(0), pinned
double c1_pi3_volume();       // vol C_1(pi/3)

double alternating_prism_volume(int n);

struct basic_prism_angles {
  std::optional<double> mu;  // C_1 determining angle, absent when r = 0
  std::optional<double> nu;  // C_2 determining angle, absent when s = 0
};

basic_prism_angles solve_basic_prism(int r, int s);
double basic_prism_volume(int r, int s);

}  // namespace polyvol
