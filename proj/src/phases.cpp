// Printed closed phase integrals S1..S8, the independent quadrature phase,
// and full q(x,y,t) assembly for both ansatz types.

#include <cmath>

#include "gkmn/elliptic.hpp"
#include "gkmn/errors.hpp"
#include "gkmn/quadrature.hpp"
#include "gkmn/solutions.hpp"

namespace gkmn::solutions {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Branch-continuous atan(coef * tn(u) nd(u)): the argument has period 2K with
// poles at odd multiples of K; unwrap by +pi per period.
double atan_tn_nd_cont(double coef, double u, double m) {
  const double K = elliptic::complete_K(m);
  const double n = std::floor((u + K) / (2.0 * K));
  const double ur = u - 2.0 * K * n;
  const elliptic::JacobiTriple j = elliptic::jacobi(ur, m);
  const double arg = coef * j.sn / (j.cn * j.dn);
  return std::atan(arg) + n * kPi;
}

// Branch-continuous atan(coef * tan(u)): unwrap by +pi per pi-period.
double atan_tan_cont(double coef, double u) {
  const double n = std::floor(u / kPi + 0.5);
  return std::atan(coef * std::tan(u - n * kPi)) + n * kPi;
}

}  // namespace

bool has_closed_phase(Family f) { return closed_phase_index(f) != 0; }

int closed_phase_index(Family f) {
  switch (f) {
    case Family::PhiB1: return 1;
    case Family::PhiB2: return 2;
    case Family::PhiB3: return 3;
    case Family::PhiU1: return 4;
    case Family::PhiU2: return 5;
    case Family::PhiU3: return 6;
    case Family::PhiU4: return 7;
    case Family::PhiU6: return 8;
    default: return 0;
  }
}

bool closed_phase_is_exact(Family f) {
  // Only S4 (phi_u1 path) and S7 (phi_u4 path) reproduce the quadrature
  // phase; the other printed phase integrals carry misprints.
  return f == Family::PhiU1 || f == Family::PhiU4;
}

double closed_phase(const ProfileSpec& spec, const wavesystems::EquationParams& eq,
                    const wavesystems::Type2WaveParams& wave, double xi,
                    const PhaseConstants& cst) {
  const int idx = closed_phase_index(spec.family);
  if (idx == 0)
    throw DomainError("closed_phase: " + family_tag(spec.family) +
                      " has no printed closed phase");
  const double am = eq.a * wave.m;
  const double e = wave.e;
  const double c = wave.c;
  const wavesystems::AlphaCoefficients& al = spec.alpha;
  const double a1 = al.alpha1, a2 = al.alpha2;
  const double C = cst.C[idx - 1];

  switch (idx) {
    case 1: {  // phi_b1
      const double r1 = spec.roots[0], r2 = spec.roots[1], r3 = spec.roots[2];
      const double s = std::sqrt(a1 * (r3 - r1) / 2.0);
      const double m = (r2 - r1) / (r3 - r1);
      const elliptic::JacobiTriple j = elliptic::jacobi(s * xi, m);
      const double lin = (e + c * r1) / (2.0 * am * r1);
      const double coef = (r1 / (2.0 * r2)) * std::sqrt(2.0 / (a1 * (r3 - r1)));
      return lin * xi + coef * std::atan((r2 / r1) * j.sn / (j.cn * j.dn)) + C;
    }
    case 2: {  // phi_b2
      const double r4 = spec.roots[0], r5 = spec.roots[1];
      const double g = std::sqrt(2.0 * a1 * (r5 - r4));
      const double w = std::sqrt(r4 * (r5 - r4));
      const double lin = (2.0 * e * g + c * r5) / (2.0 * am * r5);
      const double coef = (r5 - r4) * e / (8.0 * am * r5 * w);
      const double arg = ((r5 - r4) / (2.0 * w)) * std::exp(g * xi) + (r5 - r4) / (2.0 * w) -
                         r5 / (2.0 * r4);
      return lin * xi + coef * std::atan(arg) + C;
    }
    case 3: {  // phi_b3
      const double r6 = spec.roots[0], r7 = spec.roots[1];
      const double G1 = 3.0 * a1 * r6 + a1 * r7 + 2.0 * a2;
      const double G2 = 2.0 * a1 * r7 + a1 * r6 + 2.0 * a2;
      const double G3 = 2.0 * a1 * r6 + a1 * r7 + 2.0 * a2;
      const double s = std::sqrt(-G2 / 2.0);
      const double m = a1 * (r7 - r6) / G2;
      const double lin = e * a1 / (am * G1) * std::sqrt(-2.0 / G2) + c / (2.0 * am);
      const double coef = e * (G1 - a1) * std::sqrt(-2.0 * G2) / (am * G1 * G3);
      const double eps = elliptic::jacobi_epsilon(s * xi, m);
      const elliptic::JacobiTriple j = elliptic::jacobi(s * xi, m);
      return lin * xi + coef * (eps + std::sqrt(a1 * (r7 - r6) / G2) * j.cn / j.dn) + C;
    }
    case 4: {  // phi_u1 (verified exact along the printed amplitude)
      const double r = spec.roots[0];
      const double h = spec.h;
      const double Qv = (2.0 * a1 * r * r + (a1 + 2.0 * a2) * r + 4.0 * h) / a1;
      const double A4 = std::pow(Qv, 0.25);
      const double W = std::sqrt(2.0 * a1) * A4;
      const double num = std::sqrt(8.0 * a1 * a1 * r * r + 4.0 * a1 * (a1 + 2.0 * a2) * r +
                                   16.0 * a1 * h) -
                         (2.0 * a2 + 3.0 * a1 * r);
      const double den = std::sqrt(32.0 * a1 * a1 * r * r + 16.0 * a1 * (a1 + a2) * r +
                                   64.0 * a1 * h);
      const double k2 = num / den;
      const double n = -(A4 - r) * (A4 - r) / (4.0 * A4 * r);
      const elliptic::JacobiTriple j = elliptic::jacobi(W * xi, k2);
      const double lin = e / (am * (r - A4)) + c / (2.0 * am);
      const double t2 = e * (A4 + r) / (2.0 * am * r * W * (A4 - r)) *
                        elliptic::incomplete_Pi(j.am, n, k2);
      const double t3 =
          -e / (am * r * W) *
          std::sqrt(A4 * r / (4.0 * r * k2 * A4 + (A4 - r) * (A4 - r))) *
          std::atan(std::sqrt(k2 + (A4 - r) * (A4 - r) / (4.0 * A4 * r)) * j.sn / j.dn);
      return lin * xi + t2 + t3 + C;
    }
    case 5: {  // phi_u2
      const double r2 = spec.roots[0], r3 = spec.roots[1];
      const double g = std::sqrt(2.0 * a1 * (r3 - r2));
      const double lin = c / (2.0 * am);
      const double t1 = (4.0 * e * (r2 - r3) / (am * r3 * g)) *
                        std::log(r3 * g * xi + r3 - 2.0 * r2);
      const double t2 = 4.0 * e * (r2 - r3) * (r2 - r3) /
                        (am * r3 * g * (r3 * std::exp(g * xi) + r3 - 2.0 * r2));
      return t1 + t2 + lin * xi + C;
    }
    case 6: {  // phi_u3
      const double r4 = spec.roots[0], r6 = spec.roots[2];
      const double s = std::sqrt(a1 * (r6 - r4) / 2.0);
      const double m = (spec.roots[1] - r4) / (r6 - r4);
      const double lin = (e + c * r4) / (2.0 * am * r4);
      const double coef =
          (e * (r6 - r4) / (4.0 * am * r4 * r4 * r6)) * std::sqrt(2.0 / (a1 * (r6 - r4)));
      return lin * xi - coef * atan_tn_nd_cont(r6 / (r6 - r4), s * xi, m) + C;
    }
    case 7: {  // phi_u4 (verified exact)
      const double r7 = spec.roots[0], r8 = spec.roots[1];
      const double s = std::sqrt(a1 * (r8 - r7) / 2.0);
      const double lin = (2.0 * e + c * r7) / (2.0 * am * r7);
      const double coef = (e / (am * r7)) * std::sqrt(2.0 / (a1 * r8));
      return lin * xi - coef * atan_tan_cont(std::sqrt(r8 / (r8 - r7)), s * xi) + C;
    }
    case 8: {  // phi_u6
      const double lin = (c * a2 - 3.0 * e * a1) / (2.0 * am * a2);
      const double coef =
          (9.0 * e * a1 * a1 / (4.0 * am * a2 * a2)) * std::sqrt(-3.0 / a2);
      return lin * xi - coef * std::atan(std::sqrt(-a2 / 3.0) * xi) + C;
    }
  }
  throw DomainError("closed_phase: unreachable");
}

double quadrature_phase(const ProfileSpec& spec, const wavesystems::EquationParams& eq,
                        const wavesystems::Type2WaveParams& wave, double xi,
                        double xi_base) {
  const auto rate = [&](double s) {
    return wavesystems::phase_rate(eq, wave, eval_amplitude(spec, s));
  };
  return quadrature::integrate(rate, xi_base, xi, 1e-12);
}

double default_phase_base(const ProfileSpec& spec) {
  if (std::isfinite(spec.xi_min) && std::isfinite(spec.xi_max))
    return 0.5 * (spec.xi_min + spec.xi_max);
  if (std::isfinite(spec.xi_min)) return spec.xi_min + 1.0;
  if (std::isfinite(spec.xi_max)) return spec.xi_max - 1.0;
  return 0.0;
}

std::complex<double> assemble_type1(const ProfileSpec& spec,
                                    const wavesystems::EquationParams& eq,
                                    const wavesystems::Type1WaveParams& wave, double x,
                                    double y, double t) {
  const double c = wavesystems::wave_speed1(eq, wave);
  const double xi = x + wave.m * y - c * t;
  const double p = eval_amplitude(spec, xi);
  const double phase = wave.kappa * x + wave.omega * y - wave.r * t + wave.theta;
  return std::polar(1.0, phase) * p;
}

std::complex<double> assemble_type2(const ProfileSpec& spec,
                                    const wavesystems::EquationParams& eq,
                                    const wavesystems::Type2WaveParams& wave, double x,
                                    double y, double t, const PhaseConstants& cst) {
  const double xi = x + wave.m * y - wave.c * t;
  const double phi = eval_amplitude(spec, xi);
  double varphi;
  if (closed_phase_is_exact(spec.family)) {
    varphi = closed_phase(spec, eq, wave, xi, cst);
  } else {
    varphi = quadrature_phase(spec, eq, wave, xi, default_phase_base(spec));
  }
  return std::polar(1.0, varphi - wave.mu * t) * phi;
}

}  // namespace gkmn::solutions
