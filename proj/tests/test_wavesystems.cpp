#include <cmath>

#include "doctest.h"
#include "gkmn/errors.hpp"
#include "gkmn/verify.hpp"
#include "gkmn/wavesystems.hpp"

using namespace gkmn;
namespace ws = gkmn::wavesystems;

TEST_CASE("type 1 wave speed and coefficient derivation") {
  const ws::EquationParams eq{2.0, -0.5};
  const ws::Type1WaveParams w{3.0, 0.7, -0.2, 1.1, 0.0};
  CHECK(ws::wave_speed1(eq, w) == doctest::Approx(2.0 * (3.0 * 0.7 - 0.2)).epsilon(1e-15));

  // p'' = A p - 2 B p^3 with A = (a kappa omega - r)/(a m), B = kappa b/(a m):
  // substitute the ansatz into the equation and match the cubic terms.
  const auto s = ws::derive_system1(eq, w);
  CHECK(s.A == doctest::Approx((2.0 * 0.7 * (-0.2) - 1.1) / (2.0 * 3.0)).epsilon(1e-15));
  CHECK(s.B == doctest::Approx(0.7 * (-0.5) / (2.0 * 3.0)).epsilon(1e-15));
}

TEST_CASE("type 1 field matches the energy gradient") {
  const ws::SystemCoefficients s{-4.0, -0.5};
  const auto field = ws::field1(s);
  const ws::State st{1.3, -0.7};
  const auto f = field(st);
  CHECK(f[0] == -0.7);
  CHECK(f[1] == doctest::Approx(s.A * 1.3 - 2.0 * s.B * 1.3 * 1.3 * 1.3).epsilon(1e-15));

  // H is a first integral: dH/dxi = y*y' - (A p - 2 B p^3) p' = 0 identically.
  const double h0 = ws::energy1(s, 1.3, -0.7);
  const auto tr = verify::rk_integrate(field, st, 0.0, 12.0, 1e-12);
  REQUIRE(tr.complete);
  double drift = 0.0;
  for (std::size_t i = 0; i < tr.y.size(); ++i)
    drift = std::max(drift, std::fabs(ws::energy1(s, tr.y[i][0], tr.y[i][1]) - h0));
  CHECK(drift <= 1e-9);
}

TEST_CASE("type 2 coefficient derivation at the unit embedding") {
  const ws::EquationParams eq{1.0, 2.0};
  const ws::Type2WaveParams w{1.0, 1.0, -0.7, 0.3};
  const auto al = ws::derive_alpha(eq, w);
  // alpha1 = -b c / (a m) ... the catalog's own printed combination; at the
  // unit embedding alpha2 = -mu/(a m) - (c^2 + 8 b e)/4.
  CHECK(al.alpha2 ==
        doctest::Approx(0.7 - (1.0 + 8.0 * 2.0 * 0.3) / 4.0).epsilon(1e-15));
  CHECK(al.alpha3 == doctest::Approx(0.3 * 0.3).epsilon(1e-15));  // alpha3 = e^2
  CHECK(al.alpha1 == doctest::Approx(-2.0).epsilon(1e-15));       // alpha1 = -b c/(a m)
}

TEST_CASE("type 2 energy conserved along the singular flow") {
  const ws::AlphaCoefficients al{1.0, -4.0, 0.1};
  const auto field = ws::field2_singular(al);
  const ws::State st{1.8, 0.0};
  const double h0 = ws::energy2(al, 1.8, 0.0);
  const auto tr = verify::rk_integrate(field, st, 0.0, 8.0, 1e-12);
  REQUIRE(tr.complete);
  double drift = 0.0;
  for (std::size_t i = 0; i < tr.y.size(); ++i)
    drift = std::max(drift, std::fabs(ws::energy2(al, tr.y[i][0], tr.y[i][1]) - h0));
  CHECK(drift <= 1e-9);
}

TEST_CASE("regularized chart traces the same orbit set") {
  // The phi^3-rescaled field must vanish exactly where the singular one does
  // and preserve the same first integral along its own trajectories.
  const ws::AlphaCoefficients al{1.0, -4.0, 0.1};
  const auto reg = ws::field2_regular(al);
  const ws::State st{0.3, 0.5};
  const double h0 = ws::energy2(al, st[0], st[1]);
  const auto tr = verify::rk_integrate(reg, st, 0.0, 3.0, 1e-12);
  double drift = 0.0;
  for (std::size_t i = 0; i < tr.y.size(); ++i)
    drift = std::max(drift, std::fabs(ws::energy2(al, tr.y[i][0], tr.y[i][1]) - h0));
  CHECK(drift <= 1e-8);

  // Direction consistency at a sample state: regular = phi^3 * singular.
  const ws::State probe{0.9, -0.4};
  const auto fs = ws::field2_singular(al)(probe);
  const auto fr = reg(probe);
  const double cube = probe[0] * probe[0] * probe[0];
  CHECK(fr[0] == doctest::Approx(cube * fs[0]).epsilon(1e-13));
  CHECK(fr[1] == doctest::Approx(cube * fs[1]).epsilon(1e-13));
}

TEST_CASE("singular field refuses the phase-space singularity") {
  const ws::AlphaCoefficients al{1.0, -4.0, 0.1};
  const auto field = ws::field2_singular(al);
  CHECK_THROWS_AS(field({0.0, 1.0}), SingularityError);
  CHECK_THROWS_AS(field({1e-13, 1.0}), SingularityError);
}

TEST_CASE("phase slope formula") {
  const ws::EquationParams eq{1.0, 2.0};
  const ws::Type2WaveParams w{1.0, 1.0, -0.7, 0.3};
  for (double phi : {0.4, 1.0, 2.5}) {
    const double expect = 0.3 / (phi * phi) + 0.5;
    CHECK(ws::phase_rate(eq, w, phi) == doctest::Approx(expect).epsilon(1e-15));
  }
}
