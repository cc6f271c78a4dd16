#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qg/fixtures.hpp"
#include "qg/solitons.hpp"

using namespace qg;

TEST_CASE("phase increments") {
  CHECK(kink_mu(1.0, 0.3) == doctest::Approx(0.5 * std::log(1.3 / 0.7)).epsilon(1e-15));
  // tanh of the increment telescopes to k/step
  CHECK(std::tanh(kink_mu(1.0, 0.3)) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(std::tanh(kink_mu(2.0, 0.3)) == doctest::Approx(0.15).epsilon(1e-14));
  bool threw = false;
  try {
    kink_mu(0.2, 0.3);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code == Err::RealityViolation);
  }
  CHECK(threw);
}

TEST_CASE("single kink reference values") {
  StraightKink s;  // a=1 b=2 k=0.3, everything else zero
  CHECK(kink_v(s, 0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(kink_v(s, 1, 0) == doctest::Approx(0.91).epsilon(1e-13));
  CHECK(kink_v(s, 0, 1) == doctest::Approx(1.955).epsilon(1e-13));
  CHECK(kink_v(s, 1, 1) == doctest::Approx(3.0 - 0.3 * (0.45 / 1.045)).epsilon(1e-13));
}

TEST_CASE("single kink solves the lattice equation") {
  StraightKink s;
  CHECK(kink_residual_max(s, -10, 10, -10, 10) < 1e-12);
  StraightKink off = fig9_kink();  // shifted front
  CHECK(kink_residual_max(off, 0, 50, 0, 50) < 1e-10);
}

TEST_CASE("analytic x-derivative") {
  StraightKink s;
  double h = 1e-5;
  StraightKink up = s, dn = s;
  up.x += h;
  dn.x -= h;
  double fd = (kink_v(up, 3, 2) - kink_v(dn, 3, 2)) / (2 * h);
  CHECK(std::abs(fd - kink_dvdx(s, 3, 2)) < 1e-9);
  CHECK(kink_u(s, 3, 2) == doctest::Approx(-2 * kink_dvdx(s, 3, 2)).epsilon(1e-14));
}

TEST_CASE("u-field equation") {
  StraightKink s;
  s.p = 0.7;  // the u-equation couples through the wave number
  CHECK(u_equation_residual_max(s, -10, 10, -10, 10) < 1e-8);
}

TEST_CASE("two interacting kinks") {
  TwoKink t = two_kink_demo();
  CHECK(two_kink_residual_max(t, -5, 6, -5, 6) < 1e-9);

  TwoKink swapped = t;
  std::swap(swapped.k1, swapped.k2);
  bool threw = false;
  try {
    two_kink_v(swapped, 0, 0);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code == Err::SingularDenominator);
  }
  CHECK(threw);

  TwoKink edge = t;
  edge.phi2 = 0;  // fast phase sits exactly on the front at the origin
  CHECK(std::isfinite(two_kink_v(edge, 0, 0)));
}

TEST_CASE("bended kink on variable steps") {
  MultiKink s = figbend_kink(30, 30);
  CHECK(multikink_lattice_residual_max(s, 0, 30, 0, 30) < 1e-9);
}

TEST_CASE("kinks on plane sections") {
  ZdSection rational = fig16_section(3);
  CHECK(!rational.g.empty());
  CHECK(multikink_graph_residual_max(fig16_kink(3), rational.g) < 1e-9);

  ZdSection irr = fig17_section(3);
  CHECK(irr.perturbed);  // the origin sits on the plane, so the offset is nudged
  CHECK(multikink_graph_residual_max(fig16_kink(3), irr.g) < 1e-9);
}

TEST_CASE("kinks on quadrant sheets") {
  Quadgraph q3 = gen_zd_quadrants3(3);
  CHECK(multikink_graph_residual_max(quadrants_kink(3, -3), q3) < 1e-9);
  Quadgraph q6 = gen_zd_quadrants6(3);
  CHECK(multikink_graph_residual_max(quadrants_kink(3, 0), q6) < 1e-9);
}
