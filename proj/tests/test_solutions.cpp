#include <cmath>
#include <complex>
#include <set>
#include <string>

#include "doctest.h"
#include "gkmn/errors.hpp"
#include "gkmn/solutions.hpp"
#include "gkmn/verify.hpp"

using namespace gkmn;
namespace sol = gkmn::solutions;
using sol::Family;

namespace {
sol::SweepEntry entry_of(const std::string& tag) {
  return sol::default_sweep_entry(*sol::parse_family_tag(tag));
}
}  // namespace

TEST_CASE("the catalog enumerates 40 families with round-tripping tags") {
  const auto fams = sol::all_families();
  CHECK(fams.size() == sol::kFamilyCount);
  std::set<std::string> tags;
  for (Family f : fams) {
    const std::string tag = sol::family_tag(f);
    CHECK(tags.insert(tag).second);  // unique
    const auto back = sol::parse_family_tag(tag);
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  // Primed families also parse in apostrophe spelling.
  CHECK(sol::parse_family_tag("p_b2'") == Family::Pb2p);
  CHECK(sol::parse_family_tag("p_u4'") == Family::Pu4p);
  CHECK(sol::parse_family_tag("phi_u9") == std::nullopt);
  CHECK(sol::parse_family_tag("") == std::nullopt);
}

TEST_CASE("default sweep instantiates every family") {
  const auto sweep = sol::default_sweep();
  REQUIRE(sweep.size() == sol::kFamilyCount);
  std::set<std::string> seen;
  for (const auto& e : sweep) {
    seen.insert(sol::family_tag(e.family));
    // Every profile revalidates cleanly.
    CHECK_NOTHROW(sol::validate_profile(e.spec));
    // Synthetic embeddings stay at the unit point where the reduction is exact.
    CHECK(e.eq.a == 1.0);
  }
  CHECK(seen.size() == sol::kFamilyCount);
}

TEST_CASE("kink profile equals its elementary form") {
  // On its native coefficients the front family is exactly 2 tanh(sqrt(2) xi).
  const auto e = entry_of("p_b2");
  for (double xi : {-3.0, -0.4, 0.0, 0.7, 5.0}) {
    CHECK(std::fabs(sol::eval_amplitude(e.spec, xi) -
                    2.0 * std::tanh(std::sqrt(2.0) * xi)) <= 1e-14);
  }
  // And the primed partner is its negation.
  const auto ep = entry_of("p_b2p");
  for (double xi : {-1.1, 0.3, 2.2}) {
    CHECK(sol::eval_amplitude(ep.spec, xi) == -sol::eval_amplitude(e.spec, xi));
  }
}

TEST_CASE("pulse profile hits its extremum exactly") {
  const auto e = entry_of("p_b4");
  // At xi = 0 the printed form reduces to -p11 with no rounding at all.
  CHECK(sol::eval_amplitude(e.spec, 0.0) == -e.spec.roots[0]);
  const auto ep = entry_of("p_b4p");
  CHECK(sol::eval_amplitude(ep.spec, 0.0) == e.spec.roots[0]);
  // Decay to the background state far out.
  CHECK(std::fabs(sol::eval_amplitude(e.spec, 10.0)) <= 1e-5);
  CHECK(std::fabs(sol::eval_amplitude(e.spec, -10.0)) <= 1e-5);
}

TEST_CASE("kink limits approach the saddle pair") {
  const auto e = entry_of("p_b2");
  CHECK(std::fabs(sol::eval_amplitude(e.spec, 10.0) - 2.0) <= 1e-6);
  CHECK(std::fabs(sol::eval_amplitude(e.spec, -10.0) + 2.0) <= 1e-6);
}

TEST_CASE("every profile evaluates finite on its sampling window") {
  for (const auto& e : sol::default_sweep()) {
    const auto [lo, hi] = verify::sample_window(e.spec);
    for (int i = 0; i < 50; ++i) {
      const double xi = lo + (hi - lo) * (i + 0.5) / 50.0;
      double v = 0.0;
      try {
        v = sol::eval_amplitude(e.spec, xi);
      } catch (const SingularityError&) {
        continue;  // interior pole: legitimate for the reciprocal families
      }
      CHECK(std::isfinite(v));
      CHECK(std::fabs(v) <= sol::kAmplitudeClip);
    }
  }
}

TEST_CASE("primed families are sign mirrors where the catalog prints them so") {
  for (const char* base : {"p_b2", "p_b4", "p_u1", "p_u2", "p_u3", "p_u4", "p_u6", "p_u7",
                           "p_u8", "p_u9"}) {
    const auto e = entry_of(base);
    const auto ep = entry_of(std::string(base) + "p");
    const auto [lo, hi] = verify::sample_window(e.spec);
    for (double t : {0.21, 0.52, 0.83}) {
      const double xi = lo + (hi - lo) * t;
      double a, b;
      try {
        a = sol::eval_amplitude(e.spec, xi);
        b = sol::eval_amplitude(ep.spec, xi);
      } catch (const SingularityError&) {
        continue;
      }
      CHECK(a == -b);
    }
  }
}

TEST_CASE("profile construction validates regime and level") {
  const wavesystems::SystemCoefficients case1{-4.0, -0.5};
  const wavesystems::SystemCoefficients case2{4.0, 0.5};
  // Family/regime mismatch.
  CHECK_THROWS_AS(sol::make_profile1(Family::Pb1, case2, 2.0), ValidationError);
  // Level outside the family's band: the four-root family needs 0 < h < 4.
  CHECK_THROWS_AS(sol::make_profile1(Family::Pb1, case1, 6.0), ValidationError);
  CHECK_THROWS_AS(sol::make_profile1(Family::Pb1, case1, -1.0), ValidationError);
  // Type mismatch between the two constructors.
  CHECK_THROWS_AS(sol::make_profile1(Family::PhiB1, case1, 2.0), ValidationError);
  CHECK_THROWS_AS(sol::make_profile2(Family::Pb1, {1.0, -4.0, 0.1}, 2.0), ValidationError);
  // Valid construction round-trips through validate_profile.
  const auto spec = sol::make_profile1(Family::Pb1, case1, 2.0);
  CHECK_NOTHROW(sol::validate_profile(spec));
  CHECK(spec.period > 0.0);
}

TEST_CASE("closed phases: the exact pair matches quadrature, a misprinted one does not") {
  // S4 and S7 are the two printed phase integrals that reproduce the
  // quadrature phase; S8 is one of the six that do not.
  for (const char* tag : {"phi_u1", "phi_u4"}) {
    const auto e = entry_of(tag);
    CHECK(sol::has_closed_phase(e.family));
    CHECK(sol::closed_phase_is_exact(e.family));
    const double base = sol::default_phase_base(e.spec);
    const double c0 = sol::closed_phase(e.spec, e.eq, e.wave2, base);
    double worst = 0.0;
    for (double d : {0.15, 0.45, 0.8}) {
      const double xi = base + d;
      const double closed = sol::closed_phase(e.spec, e.eq, e.wave2, xi) - c0;
      const double quad = sol::quadrature_phase(e.spec, e.eq, e.wave2, xi, base);
      worst = std::max(worst, std::fabs(closed - quad));
    }
    CHECK(worst <= 1e-8);
  }
  {
    const auto e = entry_of("phi_u6");
    CHECK(sol::closed_phase_index(e.family) == 8);
    CHECK_FALSE(sol::closed_phase_is_exact(e.family));
    const double base = sol::default_phase_base(e.spec);
    const double c0 = sol::closed_phase(e.spec, e.eq, e.wave2, base);
    const double xi = base + 0.8;
    const double closed = sol::closed_phase(e.spec, e.eq, e.wave2, xi) - c0;
    const double quad = sol::quadrature_phase(e.spec, e.eq, e.wave2, xi, base);
    CHECK(std::fabs(closed - quad) > 1e-8);
  }
  // A family without a printed phase refuses to evaluate one.
  const auto eb = entry_of("phi_u5");
  CHECK_FALSE(sol::has_closed_phase(eb.family));
  CHECK(sol::closed_phase_index(eb.family) == 0);
  CHECK_THROWS_AS(sol::closed_phase(eb.spec, eb.eq, eb.wave2, 1.0), DomainError);
}

TEST_CASE("wave assembly carries the amplitude as modulus") {
  {
    const auto e = entry_of("p_b2");
    const double x = 0.4, y = -0.3, t = 0.2;
    const double c = wavesystems::wave_speed1(e.eq, e.wave1);
    const double xi = x + e.wave1.m * y - c * t;
    const std::complex<double> q = sol::assemble_type1(e.spec, e.eq, e.wave1, x, y, t);
    CHECK(std::fabs(std::abs(q) - std::fabs(sol::eval_amplitude(e.spec, xi))) <= 1e-12);
  }
  {
    const auto e = entry_of("phi_b1");
    const double base = sol::default_phase_base(e.spec);
    const std::complex<double> q =
        sol::assemble_type2(e.spec, e.eq, e.wave2, base + 0.3, 0.0, 0.1);
    CHECK(std::isfinite(q.real()));
    CHECK(std::isfinite(q.imag()));
    const double xi = (base + 0.3) + e.wave2.m * 0.0 - e.wave2.c * 0.1;
    CHECK(std::fabs(std::abs(q) - std::fabs(sol::eval_amplitude(e.spec, xi))) <= 1e-12);
  }
}

TEST_CASE("arch domains start at a profile zero and carry the right period") {
  // The sqrt(sn^2) arch families live on one arch between consecutive zeros.
  for (const char* tag : {"p_b5", "p_b6", "p_b7"}) {
    const auto e = entry_of(tag);
    CHECK(e.spec.xi_min == 0.0);
    CHECK(e.spec.period == e.spec.xi_max);
    // Maximum at the arch midpoint equals the stored turning value.
    const double mid = 0.5 * e.spec.xi_max;
    CHECK(std::fabs(sol::eval_amplitude(e.spec, mid) - e.spec.roots[0]) <= 1e-12);
    // Near-zero at the (open) endpoints.
    CHECK(std::fabs(sol::eval_amplitude(e.spec, 1e-6)) <= 1e-3);
  }
}
