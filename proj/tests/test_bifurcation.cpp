#include <cmath>
#include <functional>
#include <string>

#include "doctest.h"
#include "gkmn/bifurcation.hpp"
#include "gkmn/errors.hpp"

using namespace gkmn;
namespace bf = gkmn::bifurcation;
using wavesystems::AlphaCoefficients;
using wavesystems::SystemCoefficients;

namespace {
// Sign-change bisection, used as an independent check on the root machinery.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("type 1 regime classification covers all four quadrants") {
  CHECK(bf::classify_type1({-4.0, -0.5}) == bf::RegimeType1::Case1);
  CHECK(bf::classify_type1({4.0, 0.5}) == bf::RegimeType1::Case2);
  CHECK(bf::classify_type1({4.0, -2.0}) == bf::RegimeType1::Case3Unbounded);
  CHECK(bf::classify_type1({-4.0, 2.0}) == bf::RegimeType1::Case3Bounded);
  CHECK(bf::classify_type1({0.0, -0.5}) == bf::RegimeType1::Case3Unbounded);
  CHECK(bf::classify_type1({0.0, 0.5}) == bf::RegimeType1::Case3Bounded);
  CHECK_THROWS_AS(bf::classify_type1({1.0, 0.0}), OutOfScopeError);
}

TEST_CASE("type 2 regime classification and the cusp threshold") {
  CHECK(bf::classify_type2({1.0, -4.0, 0.1}) == bf::RegimeType2::CaseI);
  CHECK(bf::classify_type2({1.0, -4.0, 256.0 / 27.0}) == bf::RegimeType2::CaseII);
  CHECK(bf::classify_type2({1.0, 0.0, 0.1}) == bf::RegimeType2::CaseIII);
  CHECK(bf::classify_type2({1.0, -4.0, 12.0}) == bf::RegimeType2::CaseIII);
  CHECK(bf::classify_type2({-1.0, 0.0, 0.1}) == bf::RegimeType2::CaseIV);

  // The threshold alpha3 = -4 alpha2^3 / (27 alpha1^2) is detected with a
  // relative snap window of 1e-12: floating-point-exact inputs (and anything
  // within the window) read CaseII, anything beyond it falls to either side.
  const double thr = 256.0 / 27.0;
  CHECK(bf::classify_type2({1.0, -4.0, thr - 1e-13}) == bf::RegimeType2::CaseII);
  CHECK(bf::classify_type2({1.0, -4.0, thr + 1e-13}) == bf::RegimeType2::CaseII);
  CHECK(bf::classify_type2({1.0, -4.0, thr * (1.0 - 1e-9)}) == bf::RegimeType2::CaseI);
  CHECK(bf::classify_type2({1.0, -4.0, thr * (1.0 + 1e-9)}) == bf::RegimeType2::CaseIII);

  CHECK_THROWS_AS(bf::classify_type2({0.0, -4.0, 0.1}), OutOfScopeError);
  CHECK_THROWS_AS(bf::classify_type2({1.0, -4.0, -0.1}), OutOfScopeError);
}

TEST_CASE("type 1 equilibria, kinds, and energies") {
  // Center at the origin flanked by two saddles at +/- sqrt(A/B).
  const auto e1 = bf::equilibria_type1({-4.0, -0.5});
  REQUIRE(e1.size() == 3);
  CHECK(std::fabs(e1[0].u + 2.0) <= 1e-12);
  CHECK(std::fabs(e1[2].u - 2.0) <= 1e-12);
  CHECK(e1[1].u == 0.0);
  CHECK(e1[0].kind == bf::EquilibriumKind::Saddle);
  CHECK(e1[1].kind == bf::EquilibriumKind::Center);
  CHECK(e1[2].kind == bf::EquilibriumKind::Saddle);
  CHECK(std::fabs(e1[0].energy - 4.0) <= 1e-12);
  CHECK(std::fabs(e1[2].energy - 4.0) <= 1e-12);
  // The saddle pair energies come out bit-identical by symmetry.
  CHECK(e1[0].energy == e1[2].energy);

  // Mirror regime: saddle at the origin, centers at +/-2 with energy -4.
  const auto e2 = bf::equilibria_type1({4.0, 0.5});
  REQUIRE(e2.size() == 3);
  CHECK(e2[1].kind == bf::EquilibriumKind::Saddle);
  CHECK(e2[0].kind == bf::EquilibriumKind::Center);
  CHECK(std::fabs(e2[0].energy + 4.0) <= 1e-12);

  // Single equilibrium regimes.
  CHECK(bf::equilibria_type1({4.0, -2.0}).size() == 1);
  CHECK(bf::equilibria_type1({4.0, -2.0})[0].kind == bf::EquilibriumKind::Saddle);
  CHECK(bf::equilibria_type1({-4.0, 2.0})[0].kind == bf::EquilibriumKind::Center);

  // Degenerate regimes: the linearization vanishes at the origin.
  CHECK(bf::equilibria_type1({0.0, -0.5})[0].kind == bf::EquilibriumKind::DegenerateSaddle);
  CHECK(bf::equilibria_type1({0.0, 0.5})[0].kind == bf::EquilibriumKind::DegenerateCenter);
}

TEST_CASE("type 2 equilibria against an independent bisection") {
  const AlphaCoefficients al{1.0, -4.0, 0.1};
  const auto eqs = bf::equilibria_type2(al);
  REQUIRE(eqs.size() == 4);  // +/- pairs: inner centers, outer saddles

  // Equilibrium condition: alpha1 phi^6 + alpha2 phi^4 + alpha3 = 0.
  auto g = [&](double phi) {
    const double s = phi * phi;
    return al.alpha1 * s * s * s + al.alpha2 * s * s + al.alpha3;
  };
  const double inner = bisect(g, 0.1, 1.0);   // center branch
  const double outer = bisect(g, 1.0, 2.5);   // saddle branch
  int matched = 0;
  for (const auto& e : eqs) {
    if (e.u > 0 && e.kind == bf::EquilibriumKind::Center) {
      CHECK(std::fabs(e.u - inner) <= 1e-10);
      ++matched;
    }
    if (e.u > 0 && e.kind == bf::EquilibriumKind::Saddle) {
      CHECK(std::fabs(e.u - outer) <= 1e-10);
      ++matched;
    }
  }
  CHECK(matched == 2);
  // Mirror symmetry of the pairs, energies bit-identical.
  CHECK(eqs[0].u == -eqs[3].u);
  CHECK(eqs[0].energy == eqs[3].energy);
}

TEST_CASE("type 2 cusp pair at the threshold") {
  const AlphaCoefficients al{1.0, -4.0, 256.0 / 27.0};
  const auto eqs = bf::equilibria_type2(al);
  REQUIRE(eqs.size() == 2);
  const double phic = std::sqrt(8.0 / 3.0);
  CHECK(eqs[0].kind == bf::EquilibriumKind::Cusp);
  CHECK(eqs[1].kind == bf::EquilibriumKind::Cusp);
  CHECK(std::fabs(eqs[1].u - phic) <= 1e-12);
  CHECK(std::fabs(eqs[0].u + phic) <= 1e-12);

  // CaseIII: no equilibria at all.
  CHECK(bf::equilibria_type2({1.0, 0.0, 0.1}).empty());
  // CaseIV: exactly one center pair.
  const auto e4 = bf::equilibria_type2({-1.0, 0.0, 0.1});
  REQUIRE(e4.size() == 2);
  CHECK(e4[0].kind == bf::EquilibriumKind::Center);
}

TEST_CASE("polynomial real roots with multiplicities") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  const auto r = bf::real_roots({2.0, -3.0, 0.0, 1.0});
  REQUIRE(r.size() == 2);
  CHECK(std::fabs(r[0].x + 2.0) <= 1e-10);
  CHECK(r[0].multiplicity == 1);
  CHECK(std::fabs(r[1].x - 1.0) <= 1e-8);
  CHECK(r[1].multiplicity == 2);

  // x^2 + 1: no real roots.
  CHECK(bf::real_roots({1.0, 0.0, 1.0}).empty());
}

TEST_CASE("level roots agree with bisection") {
  const SystemCoefficients s{-4.0, -0.5};
  const double h = 2.0;
  auto Q = [&](double p) {
    const double p2 = p * p;
    return 2.0 * h + s.A * p2 - s.B * p2 * p2;
  };
  const auto roots = bf::level_roots_type1(s, h);
  REQUIRE(roots.size() == 4);
  const double r1 = bisect(Q, 0.5, 2.0);   // sqrt(4 - 2 sqrt 2)
  const double r2 = bisect(Q, 2.0, 3.0);   // sqrt(4 + 2 sqrt 2)
  CHECK(std::fabs(roots[2].x - r1) <= 1e-10);
  CHECK(std::fabs(roots[3].x - r2) <= 1e-10);
  CHECK(std::fabs(roots[2].x - std::sqrt(4.0 - 2.0 * std::sqrt(2.0))) <= 1e-10);
  CHECK(std::fabs(roots[3].x - std::sqrt(4.0 + 2.0 * std::sqrt(2.0))) <= 1e-10);
}

TEST_CASE("orbit inventories match the phase-portrait topology") {
  using C = bf::OrbitClass;
  auto count = [](const std::vector<bf::OrbitSpec>& v, C c) {
    int n = 0;
    for (const auto& o : v)
      if (o.cls == c) ++n;
    return n;
  };

  // Center-with-saddle-pair regime at the saddle level: two heteroclinic
  // connections plus four unbounded arms.
  const SystemCoefficients case1{-4.0, -0.5};
  const auto inv_a = bf::orbit_inventory_type1(case1, 4.0);
  CHECK(count(inv_a, C::Heteroclinic) == 2);
  CHECK(count(inv_a, C::Unbounded) == 4);
  // Below the saddle level: one periodic orbit, two unbounded rays.
  const auto inv_b = bf::orbit_inventory_type1(case1, 2.0);
  CHECK(count(inv_b, C::Periodic) == 1);
  CHECK(count(inv_b, C::Unbounded) == 2);

  // Saddle-with-center-pair regime at the saddle level: two homoclinic loops.
  const SystemCoefficients case2{4.0, 0.5};
  const auto inv_c = bf::orbit_inventory_type1(case2, 0.0);
  CHECK(count(inv_c, C::Homoclinic) == 2);
  // Below: two periodic orbits (one around each center). Above: one superorbit.
  CHECK(count(bf::orbit_inventory_type1(case2, -2.0), C::Periodic) == 2);
  CHECK(count(bf::orbit_inventory_type1(case2, 1.0), C::Periodic) == 1);

  // Single-saddle regime at its level: four unbounded arms.
  CHECK(count(bf::orbit_inventory_type1({4.0, -2.0}, 0.0), C::Unbounded) == 4);
  // Single-center regime: one periodic orbit above the center energy.
  CHECK(count(bf::orbit_inventory_type1({-4.0, 2.0}, 1.0), C::Periodic) == 1);
  // Degenerate saddle at its level: four arms again.
  CHECK(count(bf::orbit_inventory_type1({0.0, -0.5}, 0.0), C::Unbounded) == 4);
  // Degenerate center: one periodic orbit at positive levels.
  CHECK(count(bf::orbit_inventory_type1({0.0, 0.5}, 0.25), C::Periodic) == 1);

  // Two-well regime between the center and saddle energies: two periodic
  // orbits and two unbounded branches (phi and mirror).
  const AlphaCoefficients caseI{1.0, -4.0, 0.1};
  const auto eqs = bf::equilibria_type2(caseI);
  double hc = 0.0, hs = 0.0;
  for (const auto& e : eqs)
    if (e.u > 0) (e.kind == bf::EquilibriumKind::Center ? hc : hs) = e.energy;
  const auto inv_d = bf::orbit_inventory_type2(caseI, 0.5 * (hc + hs));
  CHECK(count(inv_d, C::Periodic) == 2);
  CHECK(count(inv_d, C::Unbounded) == 2);

  // Cusp threshold at the cusp level: the unbounded branches pass through
  // the cusp points and are flagged as such.
  const AlphaCoefficients caseII{1.0, -4.0, 256.0 / 27.0};
  const auto cusps = bf::equilibria_type2(caseII);
  const auto inv_e = bf::orbit_inventory_type2(caseII, cusps[0].energy);
  CHECK(count(inv_e, C::Unbounded) == 4);
  int through = 0;
  for (const auto& o : inv_e)
    if (o.through_cusp) ++through;
  CHECK(through == 4);

  // No equilibria: two unbounded branches at any admissible level.
  CHECK(count(bf::orbit_inventory_type2({1.0, 0.0, 0.1}, 1.0), C::Unbounded) == 2);
  // Center pair: two periodic orbits above the center energy.
  const auto e4 = bf::equilibria_type2({-1.0, 0.0, 0.1});
  CHECK(count(bf::orbit_inventory_type2({-1.0, 0.0, 0.1}, e4[0].energy + 0.3), C::Periodic) ==
        2);
}

TEST_CASE("kind and regime names are stable vocabulary") {
  CHECK(std::string(bf::kind_name(bf::EquilibriumKind::Saddle)) == "saddle");
  CHECK(std::string(bf::kind_name(bf::EquilibriumKind::Center)) == "center");
  CHECK(std::string(bf::kind_name(bf::EquilibriumKind::Cusp)) == "cusp");
  CHECK(std::string(bf::regime_name(bf::RegimeType1::Case1)) == "Case1");
  CHECK(std::string(bf::regime_name(bf::RegimeType2::CaseII)) == "CaseII");
  CHECK(std::string(bf::orbit_name(bf::OrbitClass::Homoclinic)) == "homoclinic");
}
