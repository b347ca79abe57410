#pragma once

// Adaptive Gauss-Kronrod (7,15) quadrature on finite intervals.
// Used as the independent integral oracle and for phase integrals.

#include <cmath>
#include <functional>

#include "gkmn/errors.hpp"

namespace gkmn::quadrature {

namespace detail {

// QK15 nodes/weights on [-1,1] (positive half; node 0 last).
inline constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWeightsKronrod[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWeightsGauss[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;
};

template <typename F>
PanelResult qk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = h * kNodes[i];
    double fv;
    if (i == 7) {
      fv = f(c);
      resk += kWeightsKronrod[7] * fv;
      resg += kWeightsGauss[3] * fv;
    } else {
      const double f1 = f(c - x);
      const double f2 = f(c + x);
      resk += kWeightsKronrod[i] * (f1 + f2);
      if (i % 2 == 1) resg += kWeightsGauss[i / 2] * (f1 + f2);
    }
  }
  resk *= h;
  resg *= h;
  return {resk, std::abs(resk - resg)};
}

template <typename F>
double integrate_rec(const F& f, double a, double b, double tol, int depth, int max_depth) {
  const PanelResult r = qk15(f, a, b);
  if (r.error <= tol || depth >= max_depth) {
    if (depth >= max_depth && r.error > 1e3 * tol)
      throw ConvergenceError("adaptive quadrature: depth cap reached without convergence");
    return r.kronrod;
  }
  const double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, depth + 1, max_depth) +
         integrate_rec(f, c, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Integrate f over [a,b]; absolute tolerance apportioned across panels.
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  return detail::integrate_rec(f, a, b, tol, 0, 48);
}

}  // namespace gkmn::quadrature
