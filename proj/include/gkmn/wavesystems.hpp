#pragma once

// Traveling-wave reductions of the (2+1)-dimensional
// Kundu-Mukherjee-Naskar equation
//    i q_t + a q_xy + i b q (q q*_x - q* q_x) = 0.
//
// Two ansatz types are supported:
//  * Type 1: q = p(xi) exp(i(kappa x + omega y - r t + theta)),
//    xi = x + m y - c t, giving p'' = A p - 2 B p^3.
//  * Type 2: q = phi(xi) exp(i(varphi(xi) - mu t)), giving the singular
//    system phi'' = alpha1 phi^3 + alpha2 phi + alpha3 / phi^3 together
//    with the phase slope varphi' = e/(a m phi^2) + c/(2 a m).
//
// alpha2 is computed exactly as the source catalog states it,
//    alpha2 = -mu/(a m) - (c^2 + 8 b e)/4,
// which matches the reduction only when a = m = 1; all full-PDE checks in
// this project therefore run at a = m = 1.

#include <array>
#include <functional>

namespace gkmn::wavesystems {

using State = std::array<double, 2>;             // (p, y) or (phi, y)
using Field = std::function<State(const State&)>;  // autonomous planar field

struct EquationParams {
  double a;  // dispersion coefficient
  double b;  // self-phase-modulation coefficient
};

struct Type1WaveParams {
  double m;      // transverse slope of xi = x + m y - c t
  double kappa;  // phase wavenumber in x
  double omega;  // phase wavenumber in y
  double r;      // phase frequency
  double theta;  // constant phase offset
};

struct Type2WaveParams {
  double m;   // transverse slope
  double c;   // wave speed
  double mu;  // frequency
  double e;   // phase integration constant (angular momentum analogue)
};

struct SystemCoefficients {
  double A;
  double B;
};

struct AlphaCoefficients {
  double alpha1;
  double alpha2;
  double alpha3;
};

// Type 1 wave speed forced by the ansatz: c = a (m kappa + omega).
double wave_speed1(const EquationParams& eq, const Type1WaveParams& wave);

// Coefficients of p'' = A p - 2 B p^3.
SystemCoefficients derive_system1(const EquationParams& eq, const Type1WaveParams& wave);

// Planar field (p, y) -> (y, A p - 2 B p^3).
Field field1(const SystemCoefficients& s);

// First integral H = y^2/2 - (A/2) p^2 + (B/2) p^4.
double energy1(const SystemCoefficients& s, double p, double y);

// Coefficients of phi'' = alpha1 phi^3 + alpha2 phi + alpha3 / phi^3.
AlphaCoefficients derive_alpha(const EquationParams& eq, const Type2WaveParams& wave);

// Singular chart: (phi, y) -> (y, alpha1 phi^3 + alpha2 phi + alpha3/phi^3).
// Throws SingularityError when |phi| < phi_floor.
Field field2_singular(const AlphaCoefficients& al, double phi_floor = 1e-12);

// Regularized chart (time rescaled by phi^3):
// (phi, y) -> (phi^3 y, alpha1 phi^6 + alpha2 phi^4 + alpha3).
Field field2_regular(const AlphaCoefficients& al);

// First integral H2 = y^2/2 - (alpha1/4) phi^4 - (alpha2/2) phi^2 + (alpha3/2)/phi^2.
double energy2(const AlphaCoefficients& al, double phi, double y);

// Type 2 phase slope varphi'(xi) at amplitude phi.
double phase_rate(const EquationParams& eq, const Type2WaveParams& wave, double phi);

}  // namespace gkmn::wavesystems
