#include "gkmn/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gkmn/errors.hpp"

namespace gkmn::elliptic {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

Modulus::Modulus(double k_squared) : k2(k_squared) {
  if (!(k2 >= 0.0) || !(k2 <= 1.0))
    throw DomainError("Modulus requires k^2 in [0,1], got " + std::to_string(k_squared));
  k = std::sqrt(k2);
  kprime = std::sqrt(1.0 - k2);
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("agm requires positive arguments");
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= 4.0 * kEps * a) return a;
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
  }
  return a;  // quadratic convergence: unreachable for admissible input
}

double complete_K(double k2) {
  if (!(k2 >= 0.0) || k2 >= 1.0)
    throw DomainError("complete_K requires k^2 in [0,1)");
  return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - k2)));
}

double complete_E(double k2) {
  if (!(k2 >= 0.0) || !(k2 <= 1.0))
    throw DomainError("complete_E requires k^2 in [0,1]");
  if (k2 == 1.0) return 1.0;
  const double kp2 = 1.0 - k2;
  return carlson_RF(0.0, kp2, 1.0) - (k2 / 3.0) * carlson_RD(0.0, kp2, 1.0);
}

double complete_Pi(double n, double k2) {
  if (!(k2 >= 0.0) || k2 >= 1.0)
    throw DomainError("complete_Pi requires k^2 in [0,1)");
  if (!(n < 1.0)) throw DomainError("complete_Pi requires characteristic n < 1");
  const double kp2 = 1.0 - k2;
  return carlson_RF(0.0, kp2, 1.0) + (n / 3.0) * carlson_RJ(0.0, kp2, 1.0, 1.0 - n);
}

// Carlson symmetric integrals via the duplication theorem.
// Truncation errors scale as errtol^6 (RF) / errtol^6 (RD, RJ), i.e. well
// below double round-off for the tolerances used here.

double carlson_RF(double x, double y, double z) {
  constexpr double errtol = 0.0010;
  if (x < 0.0 || y < 0.0 || z < 0.0 || (x + y) == 0.0 || (y + z) == 0.0 || (z + x) == 0.0)
    throw DomainError("carlson_RF: arguments must be nonnegative, at most one zero");
  double dx, dy, dz, mu;
  for (int i = 0; i < 200; ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    mu = (x + y + z) / 3.0;
    dx = (mu - x) / mu;
    dy = (mu - y) / mu;
    dz = (mu - z) / mu;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) {
      const double e2 = dx * dy - dz * dz;
      const double e3 = dx * dy * dz;
      return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
    }
  }
  throw ConvergenceError("carlson_RF failed to converge");
}

double carlson_RC(double x, double y) {
  constexpr double errtol = 0.0010;
  if (x < 0.0 || y <= 0.0) throw DomainError("carlson_RC requires x >= 0, y > 0");
  double s, mu;
  for (int i = 0; i < 200; ++i) {
    const double lam = 2.0 * std::sqrt(x) * std::sqrt(y) + y;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    mu = (x + y + y) / 3.0;
    s = (y - mu) / mu;
    if (std::abs(s) < errtol) {
      return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0))))) /
             std::sqrt(mu);
    }
  }
  throw ConvergenceError("carlson_RC failed to converge");
}

double carlson_RD(double x, double y, double z) {
  constexpr double errtol = 0.0010;
  if (x < 0.0 || y < 0.0 || z <= 0.0 || (x + y) == 0.0)
    throw DomainError("carlson_RD: invalid arguments");
  double sum = 0.0, fac = 1.0;
  double dx, dy, dz, mu;
  for (int i = 0; i < 200; ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (z + lam));
    fac *= 0.25;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    mu = 0.2 * (x + y + 3.0 * z);
    dx = (mu - x) / mu;
    dy = (mu - y) / mu;
    dz = (mu - z) / mu;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) {
      const double ea = dx * dy;
      const double eb = dz * dz;
      const double ec = ea - eb;
      const double ed = ea - 6.0 * eb;
      const double ee = ed + ec + ec;
      constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0, c4 = 3.0 / 26.0;
      constexpr double c5 = 0.25 * c3, c6 = 1.5 * c4;
      return 3.0 * sum +
             fac *
                 (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
                  dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
                 (mu * std::sqrt(mu));
    }
  }
  throw ConvergenceError("carlson_RD failed to converge");
}

double carlson_RJ(double x, double y, double z, double p) {
  constexpr double errtol = 0.0010;
  if (x < 0.0 || y < 0.0 || z < 0.0 || p <= 0.0 || (x + y) == 0.0 || (y + z) == 0.0 ||
      (z + x) == 0.0)
    throw DomainError("carlson_RJ: invalid arguments (requires p > 0)");
  double sum = 0.0, fac = 1.0;
  double dx, dy, dz, dp, mu;
  for (int i = 0; i < 200; ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * (sy + sz) + sy * sz;
    const double alpha_root = p * (sx + sy + sz) + sx * sy * sz;
    const double alpha = alpha_root * alpha_root;
    const double beta = p * (p + lam) * (p + lam);
    sum += fac * carlson_RC(alpha, beta);
    fac *= 0.25;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    p = 0.25 * (p + lam);
    mu = 0.2 * (x + y + z + p + p);
    dx = (mu - x) / mu;
    dy = (mu - y) / mu;
    dz = (mu - z) / mu;
    dp = (mu - p) / mu;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) < errtol) {
      const double ea = dx * (dy + dz) + dy * dz;
      const double eb = dx * dy * dz;
      const double ec = dp * dp;
      const double ed = ea - 3.0 * ec;
      const double ee = eb + 2.0 * dp * (ea - ec);
      constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 3.0, c3 = 3.0 / 22.0, c4 = 3.0 / 26.0;
      constexpr double c5 = 0.75 * c3, c6 = 1.5 * c4, c7 = 0.5 * c2, c8 = c3 + c3;
      return 3.0 * sum +
             fac *
                 (1.0 + ed * (-c1 + c5 * ed - c6 * ee) + eb * (c7 + dp * (-c8 + dp * c4)) +
                  dp * ea * (c2 - dp * c3) - c2 * dp * ec) /
                 (mu * std::sqrt(mu));
    }
  }
  throw ConvergenceError("carlson_RJ failed to converge");
}

namespace {

// Reduce phi = phir + n*pi with phir in [-pi/2, pi/2]; returns n.
double reduce_phase(double phi, double& phir) {
  const double n = std::round(phi / kPi);
  phir = phi - n * kPi;
  return n;
}

}  // namespace

double incomplete_F(double phi, double k2) {
  if (!(k2 >= 0.0)) throw DomainError("incomplete_F requires k^2 >= 0");
  if (k2 >= 1.0) {
    if (k2 > 1.0) throw DomainError("incomplete_F requires k^2 <= 1");
    if (std::abs(phi) >= kPi / 2.0)
      throw SingularityError("incomplete_F(phi, 1) diverges at |phi| = pi/2", kPi / 2.0);
    return std::asinh(std::tan(phi));
  }
  double phir;
  const double n = reduce_phase(phi, phir);
  const double s = std::sin(phir), c = std::cos(phir);
  double value = s * carlson_RF(c * c, 1.0 - k2 * s * s, 1.0);
  if (n != 0.0) value += 2.0 * n * complete_K(k2);
  return value;
}

double incomplete_E(double phi, double k2) {
  if (!(k2 >= 0.0) || !(k2 <= 1.0)) throw DomainError("incomplete_E requires k^2 in [0,1]");
  if (k2 == 1.0) {
    double phir;
    const double n = reduce_phase(phi, phir);
    return std::sin(phir) + 2.0 * n;
  }
  double phir;
  const double n = reduce_phase(phi, phir);
  const double s = std::sin(phir), c = std::cos(phir);
  const double d = 1.0 - k2 * s * s;
  double value = s * carlson_RF(c * c, d, 1.0) -
                 (k2 / 3.0) * s * s * s * carlson_RD(c * c, d, 1.0);
  if (n != 0.0) value += 2.0 * n * complete_E(k2);
  return value;
}

double incomplete_Pi(double phi, double n, double k2) {
  if (!(k2 >= 0.0) || k2 >= 1.0) throw DomainError("incomplete_Pi requires k^2 in [0,1)");
  if (!(n < 1.0)) throw DomainError("incomplete_Pi requires characteristic n < 1");
  double phir;
  const double cycles = reduce_phase(phi, phir);
  const double s = std::sin(phir), c = std::cos(phir);
  const double d = 1.0 - k2 * s * s;
  double value = s * carlson_RF(c * c, d, 1.0);
  if (n != 0.0)
    value += (n / 3.0) * s * s * s * carlson_RJ(c * c, d, 1.0, 1.0 - n * s * s);
  if (cycles != 0.0) value += 2.0 * cycles * complete_Pi(n, k2);
  return value;
}

JacobiTriple jacobi(double u, double k2) {
  if (!(k2 >= 0.0) || !(k2 <= 1.0)) throw DomainError("jacobi requires k^2 in [0,1]");
  if (k2 == 0.0) return {std::sin(u), std::cos(u), 1.0, u};
  if (k2 == 1.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech, std::atan(std::sinh(u))};  // am = gd(u)
  }

  const double K = complete_K(k2);
  // am(u) = n*pi + am(w) with w = u - 2nK in [-K, K].
  const double cycles = std::round(u / (2.0 * K));
  const double w = u - 2.0 * K * cycles;

  // Descending Landen (AGM) recursion.
  constexpr int kMaxDepth = 32;
  double a[kMaxDepth + 1], c[kMaxDepth + 1];
  double aa = 1.0, bb = std::sqrt(1.0 - k2);
  a[0] = aa;
  c[0] = std::sqrt(k2);
  int depth = 0;
  while (std::abs(c[depth]) > 4.0 * kEps * a[depth]) {
    if (depth >= kMaxDepth)
      throw ConvergenceError("jacobi: Landen recursion exceeded depth cap 32");
    const double an = 0.5 * (aa + bb);
    const double cn = 0.5 * (aa - bb);
    bb = std::sqrt(aa * bb);
    aa = an;
    ++depth;
    a[depth] = aa;
    c[depth] = cn;
  }
  double phi = std::ldexp(1.0, depth) * aa * w;
  for (int i = depth; i >= 1; --i) {
    const double t = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(t));
  }
  const double am = cycles * kPi + phi;
  const double sn = std::sin(am);
  const double cn = std::cos(am);
  const double dn = std::sqrt(1.0 - k2 * sn * sn);
  return {sn, cn, dn, am};
}

double jacobi_sn(double u, double k2) { return jacobi(u, k2).sn; }
double jacobi_cn(double u, double k2) { return jacobi(u, k2).cn; }
double jacobi_dn(double u, double k2) { return jacobi(u, k2).dn; }

double jacobi_tn(double u, double k2) {
  const JacobiTriple j = jacobi(u, k2);
  if (j.cn == 0.0) throw SingularityError("tn pole (cn = 0)", u);
  return j.sn / j.cn;
}

double jacobi_nd(double u, double k2) {
  const JacobiTriple j = jacobi(u, k2);
  if (j.dn == 0.0) throw SingularityError("nd pole (dn = 0)", u);
  return 1.0 / j.dn;
}

double jacobi_sd(double u, double k2) {
  const JacobiTriple j = jacobi(u, k2);
  if (j.dn == 0.0) throw SingularityError("sd pole (dn = 0)", u);
  return j.sn / j.dn;
}

double jacobi_cd(double u, double k2) {
  const JacobiTriple j = jacobi(u, k2);
  if (j.dn == 0.0) throw SingularityError("cd pole (dn = 0)", u);
  return j.cn / j.dn;
}

double jacobi_epsilon(double u, double k2) {
  if (k2 == 1.0) return std::tanh(u);
  return incomplete_E(jacobi(u, k2).am, k2);
}

double inverse_sn(double x, double k2) {
  if (!(x >= -1.0) || !(x <= 1.0)) throw DomainError("inverse_sn requires |x| <= 1");
  return incomplete_F(std::asin(x), k2);
}

double inverse_cn(double x, double k2) {
  if (!(x >= -1.0) || !(x <= 1.0)) throw DomainError("inverse_cn requires |x| <= 1");
  return incomplete_F(std::acos(x), k2);
}

}  // namespace gkmn::elliptic
