#include "oracles.hpp"

#include "polyvol/numerics.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>

using namespace polyvol;
using oracle::pi;

namespace {

std::vector<double> mu_grid() {
  std::vector<double> g;
  for (int i = 0; i < 50; ++i) g.push_back(1.4 * i / 49);
  return g;
}

// Gram matrix of C_1(mu) with the library's x_1 and the other two distances
// from the second and third minor equations
Eigen::Matrix<double, 6, 6> gram(double mu) {
  double m = -std::cos(mu);
  double x1 = -cosh_rho(cube_family::c1, mu);
  double X = x1 * x1;
  double x2 = -std::sqrt((X - 9.0 / 16) / (X - 0.75));
  double x3 = -std::sqrt((1 - m * m) * (X - 0.75) / (X - 1));
  Eigen::Matrix<double, 6, 6> g;
  g << 1, x1, 0, -0.5, 0, 0,
       x1, 1, 0, 0, -0.5, 0,
       0, 0, 1, 0, x2, m,
       -0.5, 0, 0, 1, 0, x3,
       0, -0.5, x2, 0, 1, 0,
       0, 0, m, x3, 0, 1;
  return g;
}

double minor_without(const Eigen::Matrix<double, 6, 6>& g, int k) {
  Eigen::Matrix<double, 5, 5> s;
  for (int i = 0, r = 0; i < 6; ++i) {
    if (i == k) continue;
    for (int j = 0, c = 0; j < 6; ++j) {
      if (j == k) continue;
      s(r, c++) = g(i, j);
    }
    ++r;
  }
  return s.determinant();
}

}  // namespace

TEST(Lobachevsky, ConstantsAgainstSeries) {
  EXPECT_NEAR(2 * lobachevsky(pi / 6), 1.01494, 5e-5);
  EXPECT_NEAR(8 * lobachevsky(pi / 4), 3.66386, 5e-5);
  EXPECT_NEAR(v3(), 2 * oracle::lobachevsky(pi / 6), 1e-12);
  EXPECT_NEAR(v8(), 8 * oracle::lobachevsky(pi / 4), 1e-12);
}

TEST(Lobachevsky, MatchesClausenSeries) {
  for (int i = -40; i <= 40; ++i) {
    double t = 0.0917 * i;
    EXPECT_NEAR(lobachevsky(t), oracle::lobachevsky(t), 1e-12) << t;
  }
}

TEST(Lobachevsky, OddAndPiPeriodic) {
  for (double t : {0.1, 0.4, 0.77, 1.3, 2.9}) {
    EXPECT_NEAR(lobachevsky(-t), -lobachevsky(t), 1e-14);
    EXPECT_NEAR(lobachevsky(t + pi), lobachevsky(t), 1e-12);
    EXPECT_NEAR(lobachevsky(t - 3 * pi), lobachevsky(t), 1e-12);
  }
  EXPECT_NEAR(lobachevsky(0), 0, 1e-15);
  EXPECT_NEAR(lobachevsky(pi / 2), 0, 1e-14);
  // Lambda(2x) = 2 Lambda(x) + 2 Lambda(x + pi/2)
  for (double x : {0.2, 0.5, 1.1})
    EXPECT_NEAR(lobachevsky(2 * x), 2 * lobachevsky(x) + 2 * lobachevsky(x + pi / 2), 1e-12);
}

TEST(Rho, ClosedFormsAtKnownPoints) {
  EXPECT_NEAR(cosh_rho(cube_family::c1, 0), 1, 1e-15);
  EXPECT_NEAR(rho(cube_family::c1, 0), 0, 1e-7);
  EXPECT_NEAR(cosh_rho(cube_family::c2, 0), 1, 1e-15);
  EXPECT_NEAR(cosh_rho(cube_family::c2, pi / 3), 1.1180, 5e-5);
  EXPECT_NEAR(rho(cube_family::c2, pi / 3), 0.4812, 5e-5);
  EXPECT_NEAR(rho(cube_family::c1, 1.0), 0.500231861, 1e-8);
}

TEST(Rho, AgreesWithGramSystemRoot) {
  for (double mu : mu_grid()) {
    if (mu == 0) continue;
    auto s = oracle::gram_solve(mu);
    EXPECT_NEAR(-s.x1, cosh_rho(cube_family::c1, mu), 1e-9) << mu;
  }
}

TEST(Gram, MinorsVanish) {
  for (double mu : mu_grid()) {
    if (mu == 0) continue;  // x_2, x_3 degenerate at the ideal end
    auto g = gram(mu);
    for (int k : {1, 4, 5}) EXPECT_LT(std::abs(minor_without(g, k)), 1e-10) << mu << " minor " << k;
    double x1 = g(0, 1), x2 = g(2, 4), x3 = g(3, 5), m = g(2, 5);
    double e1 = x2 * x2 * x3 * x3 - x2 * x2 - 0.75 * x3 * x3 + 0.75 * (1 - m * m);
    double e2 = x1 * x1 * x3 * x3 + (m * m - 1) * x1 * x1 - x3 * x3 + 0.75 * (1 - m * m);
    double e3 = x1 * x1 * x2 * x2 - x1 * x1 - 0.75 * x2 * x2 + 9.0 / 16;
    EXPECT_LT(std::abs(e1), 1e-10) << mu;
    EXPECT_LT(std::abs(e2), 1e-10) << mu;
    EXPECT_LT(std::abs(e3), 1e-10) << mu;
    EXPECT_LT(x2, 0);
    EXPECT_LT(x3, 0);
    // signature (3, 1) at most: rank 4
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(g);
    int small = 0;
    for (int i = 0; i < 6; ++i) small += std::abs(es.eigenvalues()(i)) < 1e-9;
    EXPECT_GE(small, 2) << mu;
  }
}

TEST(Cubes, DegenerateValues) {
  EXPECT_NEAR(lambert_volume(pi / 3, pi / 3, 0), 0.44446, 5e-5);
  EXPECT_NEAR(lambert_volume(pi / 3, pi / 3, 0), oracle::v1_zero(), 1e-12);
  EXPECT_NEAR(lambert_volume_gamma0(pi / 3, pi / 3), oracle::v1_zero(), 1e-12);
  EXPECT_NEAR(c2_volume(0), 0.50192, 5e-5);
  EXPECT_NEAR(v2_at_zero(), oracle::v2_zero_quadrature(), 1e-3);
  EXPECT_NEAR(lambert_volume(pi / 3, pi / 3, pi / 3), 0.324423, 1e-4);
  EXPECT_NEAR(c1_pi3_volume(), 0.324423, 1e-4);
  EXPECT_NEAR(lambert_volume(pi / 3, pi / 3, pi / 2), 0, 1e-12);
}

TEST(Cubes, GammaZeroFormulasAgree) {
  for (double a : {0.5, 0.8, pi / 3, 1.2})
    for (double b : {0.6, pi / 3, 1.0})
      EXPECT_NEAR(lambert_volume_gamma0(a, b), lambert_volume(a, b, 0, 0.0), 1e-10) << a << " " << b;
}

TEST(Cubes, KellerhalsAgreesWithSchlafli) {
  double worst = 0;
  for (double mu : mu_grid()) worst = std::max(worst, std::abs(lambert_volume(pi / 3, pi / 3, mu) - oracle::v1_schlafli(mu)));
  EXPECT_LT(worst, 1e-6);
}

TEST(Cubes, InequalitiesOnGrid) {
  auto g = mu_grid();
  for (double mu : g) {
    EXPECT_GE(rho(cube_family::c1, mu), rho(cube_family::c2, mu) - 1e-12) << mu;
    EXPECT_LT(c1_volume(mu), c2_volume(mu)) << mu;
  }
  // rho_1 increasing in mu; V_1' = -rho_1 / 2, so V_1 bends down
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(rho(cube_family::c1, g[i]), rho(cube_family::c1, g[i - 1]));
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    EXPECT_LT(c1_volume(g[i + 1]) - 2 * c1_volume(g[i]) + c1_volume(g[i - 1]), 0) << g[i];
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(c1_volume(g[i]), c1_volume(g[i - 1]));
}

TEST(Prisms, AlternatingVolumes) {
  for (int n = 5; n <= 12; ++n) {
    double cube = lambert_volume(pi / 3, pi / 3, pi / (2 * (n - 3)));
    EXPECT_NEAR(alternating_prism_volume(n), (n - 3) * cube, 1e-10) << n;
    EXPECT_GT(alternating_prism_volume(n) / (n - 3), 0.324423) << n;
  }
}

TEST(Prisms, BasicPrismDegenerateCases) {
  for (int r = 1; r <= 5; ++r) {
    auto s = solve_basic_prism(r, 0);
    ASSERT_TRUE(s.mu);
    EXPECT_NEAR(*s.mu, pi / (2 * r), 1e-12);
    EXPECT_FALSE(s.nu);
    auto t = solve_basic_prism(0, r);
    ASSERT_TRUE(t.nu);
    EXPECT_NEAR(*t.nu, pi / (2 * r), 1e-12);
  }
}

TEST(Prisms, BasicPrismAgainstBisection) {
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {3, 2}}) {
    // mu from r mu + s nu = pi/2 and rho_1(mu) = rho_2(nu), by bisection
    auto f = [r = r, s = s](double mu) {
      double nu = (pi / 2 - r * mu) / s;
      double c2 = std::sqrt((3 * std::cos(nu) + 1) / (4 * std::cos(nu)));
      return std::acosh(c2) - oracle::rho1(mu);
    };
    double lo = 1e-12, hi = pi / (2 * r) - 1e-12;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      ((f(lo) > 0) == (f(mid) > 0) ? lo : hi) = mid;
    }
    auto sol = solve_basic_prism(r, s);
    ASSERT_TRUE(sol.mu && sol.nu);
    EXPECT_NEAR(*sol.mu, 0.5 * (lo + hi), 1e-9) << r << "," << s;
    EXPECT_NEAR(r * *sol.mu + s * *sol.nu, pi / 2, 1e-12);
  }
  auto one = solve_basic_prism(1, 1);
  EXPECT_NEAR(*one.mu, 0.758547037, 1e-8);
  EXPECT_NEAR(basic_prism_volume(1, 1), 0.825685363, 1e-8);
}

TEST(Numerics, DomainErrors) {
  EXPECT_THROW(cosh_rho(cube_family::c1, pi / 2), std::domain_error);
  EXPECT_THROW(alternating_prism_volume(4), std::domain_error);
}
