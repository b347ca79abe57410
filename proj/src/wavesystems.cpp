#include "gkmn/wavesystems.hpp"

#include <cmath>

#include "gkmn/errors.hpp"

namespace gkmn::wavesystems {

double wave_speed1(const EquationParams& eq, const Type1WaveParams& wave) {
  return eq.a * (wave.m * wave.kappa + wave.omega);
}

SystemCoefficients derive_system1(const EquationParams& eq, const Type1WaveParams& wave) {
  const double am = eq.a * wave.m;
  if (am == 0.0) throw OutOfScopeError("derive_system1 requires a*m != 0");
  return {(eq.a * wave.kappa * wave.omega - wave.r) / am, wave.kappa * eq.b / am};
}

Field field1(const SystemCoefficients& s) {
  return [s](const State& x) -> State {
    return {x[1], s.A * x[0] - 2.0 * s.B * x[0] * x[0] * x[0]};
  };
}

double energy1(const SystemCoefficients& s, double p, double y) {
  const double p2 = p * p;
  return 0.5 * y * y - 0.5 * s.A * p2 + 0.5 * s.B * p2 * p2;
}

AlphaCoefficients derive_alpha(const EquationParams& eq, const Type2WaveParams& wave) {
  const double am = eq.a * wave.m;
  if (am == 0.0) throw OutOfScopeError("derive_alpha requires a*m != 0");
  const double alpha1 = -wave.c * eq.b / (am * am);
  const double alpha2 = -wave.mu / am - (wave.c * wave.c + 8.0 * eq.b * wave.e) / 4.0;
  const double alpha3 = wave.e * wave.e / (am * am);
  return {alpha1, alpha2, alpha3};
}

Field field2_singular(const AlphaCoefficients& al, double phi_floor) {
  return [al, phi_floor](const State& x) -> State {
    const double phi = x[0];
    if (std::abs(phi) < phi_floor)
      throw SingularityError("field2_singular evaluated at |phi| < floor", phi);
    const double p3 = phi * phi * phi;
    return {x[1], al.alpha1 * p3 + al.alpha2 * phi + al.alpha3 / p3};
  };
}

Field field2_regular(const AlphaCoefficients& al) {
  return [al](const State& x) -> State {
    const double phi = x[0];
    const double p2 = phi * phi;
    const double p3 = p2 * phi;
    const double p4 = p2 * p2;
    return {p3 * x[1], al.alpha1 * p4 * p2 + al.alpha2 * p4 + al.alpha3};
  };
}

double energy2(const AlphaCoefficients& al, double phi, double y) {
  const double p2 = phi * phi;
  if (p2 == 0.0) throw SingularityError("energy2 undefined at phi = 0", 0.0);
  return 0.5 * y * y - 0.25 * al.alpha1 * p2 * p2 - 0.5 * al.alpha2 * p2 +
         0.5 * al.alpha3 / p2;
}

double phase_rate(const EquationParams& eq, const Type2WaveParams& wave, double phi) {
  const double am = eq.a * wave.m;
  if (am == 0.0) throw OutOfScopeError("phase_rate requires a*m != 0");
  const double p2 = phi * phi;
  // As amplitude blows up the slope tends to the drift term c/(2am).
  if (!std::isfinite(p2) || p2 == 0.0) {
    if (p2 == 0.0) throw SingularityError("phase_rate undefined at phi = 0", 0.0);
    return wave.c / (2.0 * am);
  }
  return wave.e / (am * p2) + wave.c / (2.0 * am);
}

}  // namespace gkmn::wavesystems
