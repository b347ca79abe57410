#pragma once

// Real elliptic integrals and Jacobi elliptic functions.
//
// Conventions:
//  * All moduli are passed as k^2 (the parameter m = k^2), matching the way
//    the closed-form wave catalog states its moduli.
//  * Complete/incomplete integrals follow the Legendre normal forms
//      F(phi,k) = integral_0^phi dt / sqrt(1 - k^2 sin^2 t)
//      E(phi,k) = integral_0^phi sqrt(1 - k^2 sin^2 t) dt
//      Pi(n;phi,k) = integral_0^phi dt / ((1 - n sin^2 t) sqrt(1 - k^2 sin^2 t))
//  * jacobi(u,k2) returns sn, cn, dn and the continuous amplitude am(u),
//    valid for all real u (quasi-periodic reduction is done internally).

#include <array>

namespace gkmn::elliptic {

// Modulus bundle: built from k^2, keeps k and the complement handy.
struct Modulus {
  double k2;      // parameter m = k^2
  double k;       // sqrt(k2)
  double kprime;  // sqrt(1 - k2)
  explicit Modulus(double k_squared);
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
  double am;  // continuous amplitude, sn = sin(am), cn = cos(am)
};

// Arithmetic-geometric mean of two positive reals.
double agm(double a, double b);

// Complete integrals; k2 in [0,1) for K, [0,1] for E.
double complete_K(double k2);
double complete_E(double k2);
// Complete Pi(n; k): requires n < 1 (circular case handled), k2 in [0,1).
double complete_Pi(double n, double k2);

// Carlson symmetric forms (building blocks, exposed for tests/oracles).
double carlson_RF(double x, double y, double z);
double carlson_RC(double x, double y);
double carlson_RD(double x, double y, double z);
double carlson_RJ(double x, double y, double z, double p);

// Incomplete integrals for arbitrary real phi (quasi-periodic extension).
double incomplete_F(double phi, double k2);
double incomplete_E(double phi, double k2);
double incomplete_Pi(double phi, double n, double k2);

// Jacobi functions for arbitrary real u; k2 in [0,1].
// Exact closed forms at k2 = 0 (trig) and k2 = 1 (hyperbolic).
JacobiTriple jacobi(double u, double k2);

// Convenience ratios; throw SingularityError at a pole (cn = 0 or dn = 0).
double jacobi_sn(double u, double k2);
double jacobi_cn(double u, double k2);
double jacobi_dn(double u, double k2);
double jacobi_tn(double u, double k2);  // sn/cn
double jacobi_nd(double u, double k2);  // 1/dn
double jacobi_sd(double u, double k2);  // sn/dn
double jacobi_cd(double u, double k2);  // cn/dn

// Jacobi epsilon function E(am(u,k),k); d/du = dn^2(u,k).
double jacobi_epsilon(double u, double k2);

// Inverses on the principal branch.
// inverse_sn: x in [-1,1] -> u in [-K,K];  inverse_cn: x in [-1,1] -> u in [0,2K].
double inverse_sn(double x, double k2);
double inverse_cn(double x, double k2);

}  // namespace gkmn::elliptic
