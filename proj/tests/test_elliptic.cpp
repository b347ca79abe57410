#include <cmath>
#include <random>

#include "doctest.h"
#include "gkmn/elliptic.hpp"
#include "gkmn/errors.hpp"
#include "gkmn/verify.hpp"

using namespace gkmn;
namespace el = gkmn::elliptic;

namespace {
void check_near(double got, double want, double rtol) {
  CHECK(std::fabs(got - want) <= rtol * (1.0 + std::fabs(want)));
}
}  // namespace

TEST_CASE("arithmetic-geometric mean") {
  check_near(el::agm(1.0, 0.5), 0.7283955155234534345932, 1e-14);
  check_near(el::agm(1.0, 1.0), 1.0, 1e-15);
  check_near(el::agm(3.0, 12.0), el::agm(12.0, 3.0), 1e-15);  // symmetric
}

TEST_CASE("complete integrals against reference values") {
  check_near(el::complete_K(0.0), 1.570796326794896619231, 1e-14);
  check_near(el::complete_E(0.0), 1.570796326794896619231, 1e-14);
  check_near(el::complete_K(0.25), 1.685750354812596042871, 1e-14);
  check_near(el::complete_E(0.25), 1.46746220933942715546, 1e-14);
  check_near(el::complete_K(0.5), 1.854074677301371918434, 1e-14);
  check_near(el::complete_E(0.5), 1.35064388104767550252, 1e-14);
  check_near(el::complete_K(0.81), 2.280549138422770204614, 1e-14);
  check_near(el::complete_E(0.81), 1.171697052781614141186, 1e-14);
  check_near(el::complete_K(0.9999), 5.991589340506996402354, 1e-13);
  check_near(el::complete_E(0.9999), 1.000274582430662965187, 1e-13);
  check_near(el::complete_Pi(0.5, 0.25), 2.413671504201194640667, 1e-13);
  // Pi(0; k) degenerates to K.
  check_near(el::complete_Pi(0.0, 0.3), el::complete_K(0.3), 1e-14);
}

TEST_CASE("incomplete integrals against reference values") {
  check_near(el::incomplete_F(0.3, 0.1), 0.3004437242516261302744, 1e-14);
  check_near(el::incomplete_E(0.3, 0.1), 0.2995574470852099227518, 1e-14);
  check_near(el::incomplete_F(1.2, 0.64), 1.399520505737465516572, 1e-14);
  check_near(el::incomplete_E(1.2, 0.64), 1.045342663270536936416, 1e-14);
  check_near(el::incomplete_F(2.0, 0.3), 2.220590552128474246984, 1e-14);
  check_near(el::incomplete_E(2.0, 0.3), 1.808964725363331210484, 1e-14);
  check_near(el::incomplete_F(4.0, 0.9), 6.126351578834841040222, 1e-13);
  check_near(el::incomplete_E(4.0, 0.9), 2.977755245475777600858, 1e-13);
  check_near(el::incomplete_Pi(1.1, -0.5, 0.36), 1.019305591715229431278, 1e-13);
  check_near(el::incomplete_Pi(0.7, 0.3, 0.81), 0.7884000135586060889999, 1e-13);
  check_near(el::incomplete_Pi(2.6, 0.9, 0.2), 10.20661586076647830786, 1e-13);
}

TEST_CASE("jacobi functions against reference values") {
  auto j1 = el::jacobi(0.4, 0.3);
  check_near(j1.sn, 0.3865679212384838821672, 1e-14);
  check_near(j1.cn, 0.9222609404443827588008, 1e-14);
  check_near(j1.dn, 0.9773277713647592837291, 1e-14);
  check_near(j1.am, 0.3969073022515188102763, 1e-14);

  auto j2 = el::jacobi(-1.3, 0.5);
  check_near(j2.sn, -0.9204464742100178114268, 1e-14);
  check_near(j2.cn, 0.3908686328094734899201, 1e-14);
  check_near(j2.dn, 0.7592029663121539121302, 1e-14);
  check_near(j2.am, -1.169221214854258585406, 1e-14);

  auto j3 = el::jacobi(2.7, 0.82);
  check_near(j3.sn, 0.9854056628335647549872, 1e-14);
  check_near(j3.cn, -0.1702224416918723936358, 1e-13);
  check_near(j3.dn, 0.4513978924602386482093, 1e-14);
  check_near(j3.am, 1.741851727686384302941, 1e-14);

  // u past the first quasi-period: the reduction must stay accurate.
  auto j4 = el::jacobi(6.1, 0.15);
  check_near(j4.sn, -0.4250044528054611791023, 1e-13);
  check_near(j4.cn, 0.9051912588483886377569, 1e-13);
  check_near(j4.dn, 0.9863598137922740707632, 1e-14);
  check_near(j4.am, 5.844218502388077782349, 1e-13);
}

TEST_CASE("jacobi epsilon and inverses against reference values") {
  check_near(el::jacobi_epsilon(0.7, 0.3), 0.6696417305805881191594, 1e-14);
  check_near(el::jacobi_epsilon(3.1, 0.8), 1.381558031408816869114, 1e-13);
  check_near(el::inverse_sn(0.2, 0.5), 0.2020389248028815475214, 1e-14);
  check_near(el::inverse_sn(0.95, 0.9), 1.683244671797971656119, 1e-13);
}

TEST_CASE("pythagorean and amplitude identities on random draws") {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> du(-10.0, 10.0);
  std::uniform_real_distribution<double> dm(0.0, 0.999);
  for (int i = 0; i < 2000; ++i) {
    const double u = du(rng);
    const double m = dm(rng);
    const auto j = el::jacobi(u, m);
    CHECK(std::fabs(j.sn * j.sn + j.cn * j.cn - 1.0) <= 1e-12);
    CHECK(std::fabs(j.dn * j.dn + m * j.sn * j.sn - 1.0) <= 1e-12);
    CHECK(std::fabs(j.sn - std::sin(j.am)) <= 1e-12);
    CHECK(std::fabs(j.cn - std::cos(j.am)) <= 1e-12);
  }
}

TEST_CASE("quasi-periodicity") {
  const double m = 0.62;
  const double K = el::complete_K(m);
  for (double u : {-2.7, -0.4, 0.9, 3.3}) {
    const auto j0 = el::jacobi(u, m);
    const auto j4 = el::jacobi(u + 4.0 * K, m);
    CHECK(std::fabs(j0.sn - j4.sn) <= 1e-11);
    CHECK(std::fabs(j0.cn - j4.cn) <= 1e-11);
    const auto j2 = el::jacobi(u + 2.0 * K, m);
    CHECK(std::fabs(j0.dn - j2.dn) <= 1e-11);
    // am gains exactly pi per half period.
    CHECK(std::fabs(j2.am - j0.am - 3.14159265358979323846) <= 1e-11);
  }
}

TEST_CASE("degenerate moduli reduce to trig and hyperbolic functions") {
  for (double u : {-1.7, 0.3, 2.2}) {
    const auto j0 = el::jacobi(u, 0.0);
    CHECK(std::fabs(j0.sn - std::sin(u)) <= 1e-14);
    CHECK(std::fabs(j0.cn - std::cos(u)) <= 1e-14);
    CHECK(j0.dn == 1.0);
    const auto j1 = el::jacobi(u, 1.0);
    CHECK(std::fabs(j1.sn - std::tanh(u)) <= 1e-14);
    CHECK(std::fabs(j1.cn - 1.0 / std::cosh(u)) <= 1e-14);
    CHECK(std::fabs(j1.dn - 1.0 / std::cosh(u)) <= 1e-14);
  }
}

TEST_CASE("incomplete_F inverts the amplitude") {
  for (double u : {-1.1, 0.25, 0.8}) {
    for (double m : {0.2, 0.7}) {
      const auto j = el::jacobi(u, m);
      CHECK(std::fabs(el::incomplete_F(j.am, m) - u) <= 1e-12);
    }
  }
  // inverse_sn / inverse_cn round trips on the principal branch.
  for (double x : {-0.9, -0.3, 0.0, 0.5, 0.99}) {
    const double u = el::inverse_sn(x, 0.4);
    CHECK(std::fabs(el::jacobi(u, 0.4).sn - x) <= 1e-12);
  }
  for (double x : {-0.8, 0.1, 0.95}) {
    const double u = el::inverse_cn(x, 0.6);
    CHECK(std::fabs(el::jacobi(u, 0.6).cn - x) <= 1e-12);
  }
}

TEST_CASE("quadrature oracles agree with the closed implementations") {
  std::mt19937 rng(77031u);
  std::uniform_real_distribution<double> dphi(-1.5, 1.5);
  std::uniform_real_distribution<double> dm(0.0, 0.95);
  for (int i = 0; i < 50; ++i) {
    const double phi = dphi(rng);
    const double m = dm(rng);
    CHECK(std::fabs(el::incomplete_F(phi, m) - verify::oracle_F(phi, m)) <= 1e-11);
    CHECK(std::fabs(el::incomplete_E(phi, m) - verify::oracle_E(phi, m)) <= 1e-11);
  }
  CHECK(std::fabs(el::complete_K(0.5) - verify::oracle_K(0.5)) <= 1e-12);
  CHECK(std::fabs(el::incomplete_Pi(0.7, 0.3, 0.81) - verify::oracle_Pi(0.7, 0.3, 0.81)) <=
        1e-11);
  CHECK(std::fabs(el::jacobi_epsilon(0.7, 0.3) - verify::oracle_epsilon(0.7, 0.3)) <= 1e-11);
}

TEST_CASE("carlson forms satisfy their normalizations") {
  // RF(x,x,x) = x^{-1/2}, RD(x,x,x) = x^{-3/2}, RC(x,x) = x^{-1/2}.
  check_near(el::carlson_RF(4.0, 4.0, 4.0), 0.5, 1e-14);
  check_near(el::carlson_RD(4.0, 4.0, 4.0), 0.125, 1e-14);
  check_near(el::carlson_RC(9.0, 9.0), 1.0 / 3.0, 1e-14);
  check_near(el::carlson_RJ(2.0, 2.0, 2.0, 2.0), std::pow(2.0, -1.5), 1e-13);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(el::complete_K(1.0), DomainError);
  CHECK_THROWS_AS(el::complete_K(-0.1), DomainError);
  CHECK_THROWS_AS(el::complete_K(1.2), DomainError);
  CHECK_THROWS_AS(el::complete_E(1.5), DomainError);
  CHECK_THROWS_AS(el::complete_Pi(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(el::jacobi(0.5, -0.2), DomainError);
  CHECK_THROWS_AS(el::jacobi(0.5, 1.3), DomainError);
  CHECK_THROWS_AS(el::inverse_sn(1.4, 0.5), DomainError);
  CHECK_THROWS_AS(el::agm(-1.0, 2.0), DomainError);
}
