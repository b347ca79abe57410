#include "gkmn/bifurcation.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gkmn/errors.hpp"

namespace gkmn::bifurcation {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

double horner_deriv(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) v = v * x + c[i] * static_cast<double>(i);
  return v;
}

}  // namespace

const char* regime_name(RegimeType1 r) {
  switch (r) {
    case RegimeType1::Case1: return "Case1";
    case RegimeType1::Case2: return "Case2";
    case RegimeType1::Case3Unbounded: return "Case3Unbounded";
    case RegimeType1::Case3Bounded: return "Case3Bounded";
  }
  return "?";
}

const char* regime_name(RegimeType2 r) {
  switch (r) {
    case RegimeType2::CaseI: return "CaseI";
    case RegimeType2::CaseII: return "CaseII";
    case RegimeType2::CaseIII: return "CaseIII";
    case RegimeType2::CaseIV: return "CaseIV";
  }
  return "?";
}

const char* kind_name(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::Center: return "center";
    case EquilibriumKind::Saddle: return "saddle";
    case EquilibriumKind::DegenerateCenter: return "degenerate-center";
    case EquilibriumKind::DegenerateSaddle: return "degenerate-saddle";
    case EquilibriumKind::Cusp: return "cusp";
  }
  return "?";
}

const char* orbit_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::Periodic: return "periodic";
    case OrbitClass::Homoclinic: return "homoclinic";
    case OrbitClass::Heteroclinic: return "heteroclinic";
    case OrbitClass::Unbounded: return "unbounded";
  }
  return "?";
}

RegimeType1 classify_type1(const wavesystems::SystemCoefficients& s) {
  if (s.B == 0.0) throw OutOfScopeError("Type 1 classification requires B != 0");
  if (s.A * s.B > 0.0) return s.B < 0.0 ? RegimeType1::Case1 : RegimeType1::Case2;
  return s.B < 0.0 ? RegimeType1::Case3Unbounded : RegimeType1::Case3Bounded;
}

RegimeType2 classify_type2(const wavesystems::AlphaCoefficients& al) {
  if (al.alpha1 == 0.0) throw OutOfScopeError("Type 2 classification requires alpha1 != 0");
  if (!(al.alpha3 > 0.0)) throw OutOfScopeError("Type 2 classification requires alpha3 > 0");
  if (al.alpha1 < 0.0) return RegimeType2::CaseIV;
  if (al.alpha2 < 0.0) {
    const double threshold =
        -4.0 * al.alpha2 * al.alpha2 * al.alpha2 / (27.0 * al.alpha1 * al.alpha1);
    const double rel = std::abs(al.alpha3 - threshold) /
                       std::max(std::abs(al.alpha3), std::abs(threshold));
    if (rel <= 1e-12) return RegimeType2::CaseII;
    if (al.alpha3 < threshold) return RegimeType2::CaseI;
  }
  return RegimeType2::CaseIII;
}

std::vector<Equilibrium> equilibria_type1(const wavesystems::SystemCoefficients& s) {
  if (s.B == 0.0) throw OutOfScopeError("Type 1 equilibria require B != 0");
  std::vector<Equilibrium> out;
  EquilibriumKind origin_kind;
  if (s.A > 0.0)
    origin_kind = EquilibriumKind::Saddle;
  else if (s.A < 0.0)
    origin_kind = EquilibriumKind::Center;
  else
    origin_kind = s.B > 0.0 ? EquilibriumKind::DegenerateCenter
                            : EquilibriumKind::DegenerateSaddle;
  const double rho = s.A / (2.0 * s.B);
  if (rho > 0.0) {
    const double ps = std::sqrt(rho);
    // Linearization at the outer pair is A - 6B ps^2 = -2A.
    const EquilibriumKind outer_kind =
        s.A > 0.0 ? EquilibriumKind::Center : EquilibriumKind::Saddle;
    const double energy = wavesystems::energy1(s, ps, 0.0);
    out.push_back({-ps, outer_kind, energy});
    out.push_back({0.0, origin_kind, 0.0});
    out.push_back({ps, outer_kind, energy});
  } else {
    out.push_back({0.0, origin_kind, 0.0});
  }
  return out;
}

std::vector<Equilibrium> equilibria_type2(const wavesystems::AlphaCoefficients& al) {
  classify_type2(al);  // scope checks
  // Equilibria of the amplitude system: positive roots psi of
  // g(psi) = alpha1 psi^3 + alpha2 psi^2 + alpha3, phi = +/- sqrt(psi).
  const std::vector<Root> roots = real_roots({al.alpha3, 0.0, al.alpha2, al.alpha1});
  std::vector<Equilibrium> pos;
  for (const Root& r : roots) {
    if (!(r.x > 1e-14)) continue;
    EquilibriumKind kind;
    if (r.multiplicity >= 2) {
      kind = EquilibriumKind::Cusp;
    } else {
      const double gp = 3.0 * al.alpha1 * r.x * r.x + 2.0 * al.alpha2 * r.x;
      kind = gp > 0.0 ? EquilibriumKind::Saddle : EquilibriumKind::Center;
    }
    const double phi = std::sqrt(r.x);
    pos.push_back({phi, kind, wavesystems::energy2(al, phi, 0.0)});
  }
  std::vector<Equilibrium> out;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    out.push_back({-it->u, it->kind, it->energy});
  for (const Equilibrium& e : pos) out.push_back(e);
  return out;
}

std::vector<Root> real_roots(const std::vector<double>& coeffs) {
  // Trim negligible leading coefficients.
  double cmax = 0.0;
  for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) throw DomainError("real_roots: zero polynomial");
  std::vector<double> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * cmax) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);

  std::vector<double> cand;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> ev = solver.eigenvalues()[i];
    const double scale = std::max(1.0, std::abs(ev.real()));
    if (std::abs(ev.imag()) <= 1e-7 * scale) cand.push_back(ev.real());
  }
  // Newton polishing (kept only while it improves |P|).
  for (double& x : cand) {
    for (int it = 0; it < 8; ++it) {
      const double p = horner(c, x);
      const double dp = horner_deriv(c, x);
      if (dp == 0.0) break;
      const double x1 = x - p / dp;
      if (!std::isfinite(x1) || std::abs(horner(c, x1)) >= std::abs(p)) break;
      x = x1;
    }
  }
  std::sort(cand.begin(), cand.end());

  std::vector<Root> out;
  double scale = 1.0;
  for (double x : cand) scale = std::max(scale, std::abs(x));
  const double tol = 1e-8 * scale;
  std::size_t i = 0;
  while (i < cand.size()) {
    std::size_t j = i + 1;
    double sum = cand[i];
    while (j < cand.size() && cand[j] - cand[j - 1] <= tol) {
      sum += cand[j];
      ++j;
    }
    out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

std::vector<Root> level_roots_type1(const wavesystems::SystemCoefficients& s, double h) {
  if (s.B == 0.0) throw OutOfScopeError("level_roots_type1 requires B != 0");
  return real_roots({2.0 * h, 0.0, s.A, 0.0, -s.B});
}

std::vector<Root> level_roots_type2(const wavesystems::AlphaCoefficients& al, double h) {
  if (al.alpha1 == 0.0) throw OutOfScopeError("level_roots_type2 requires alpha1 != 0");
  std::vector<Root> all = real_roots({-al.alpha3, 2.0 * h, al.alpha2, 0.5 * al.alpha1});
  std::vector<Root> pos;
  for (const Root& r : all)
    if (r.x > 1e-14) pos.push_back(r);
  return pos;
}

namespace {

struct IntervalSpec {
  OrbitClass cls;
  double lo, hi;
  bool lo_turning, hi_turning;  // finite simple-root endpoint
  bool through_cusp;
};

// Shared interval combinatorics: positivity intervals of a polynomial between
// consecutive distinct roots, plus rays, classified by endpoint multiplicity.
template <typename PolyFn>
std::vector<IntervalSpec> positive_intervals(const PolyFn& poly,
                                             const std::vector<Root>& roots, double lo_bound,
                                             const std::vector<double>& cusp_positions) {
  std::vector<IntervalSpec> out;
  const auto near_cusp = [&](double x) {
    for (double c : cusp_positions)
      if (std::abs(x - c) <= 1e-6 * (1.0 + std::abs(c))) return true;
    return false;
  };
  const bool half_line = std::isfinite(lo_bound);

  if (roots.empty()) {
    const double test = half_line ? lo_bound + 1.0 : 0.0;
    if (poly(test) > 0.0 && !half_line)
      out.push_back({OrbitClass::Unbounded, -kInf, kInf, false, false, false});
    // On a half-line with no roots the polynomial is negative at lo_bound's
    // side for every admissible level (C(0) = -alpha3 < 0), so nothing to add.
    return out;
  }

  // A cusp endpoint is an equilibrium, not a turning point: the level curve
  // only osculates y = 0 there, so the upper and lower halves never join.
  const auto turning = [&](const Root& r) { return r.multiplicity == 1 && !near_cusp(r.x); };

  // Left ray (full-line case only; half-line levels start negative at 0+).
  if (!half_line) {
    const double r0 = roots.front().x;
    if (poly(r0 - (1.0 + std::abs(r0))) > 0.0) {
      out.push_back({OrbitClass::Unbounded, -kInf, r0, false, turning(roots.front()),
                     near_cusp(r0)});
    }
  }
  // Bounded intervals between consecutive distinct roots.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Root& a = roots[i];
    const Root& b = roots[i + 1];
    if (!(poly(0.5 * (a.x + b.x)) > 0.0)) continue;
    OrbitClass cls;
    if (a.multiplicity == 1 && b.multiplicity == 1)
      cls = OrbitClass::Periodic;
    else if (a.multiplicity >= 2 && b.multiplicity >= 2)
      cls = OrbitClass::Heteroclinic;
    else
      cls = OrbitClass::Homoclinic;
    out.push_back({cls, a.x, b.x, turning(a), turning(b), near_cusp(a.x) || near_cusp(b.x)});
  }
  // Right ray.
  {
    const Root& rl = roots.back();
    if (poly(rl.x + 1.0 + std::abs(rl.x)) > 0.0) {
      out.push_back(
          {OrbitClass::Unbounded, rl.x, kInf, turning(rl), false, near_cusp(rl.x)});
    }
  }
  return out;
}

// Branch split: a single two-sided orbit iff some finite endpoint is a
// turning point (simple root); otherwise the upper and lower halves are
// distinct orbits.
void emit(std::vector<OrbitSpec>& out, const IntervalSpec& iv) {
  const bool has_turning = iv.lo_turning || iv.hi_turning;
  if (has_turning) {
    out.push_back({iv.cls, iv.lo, iv.hi, Branch::Both, iv.through_cusp});
  } else {
    out.push_back({iv.cls, iv.lo, iv.hi, Branch::Upper, iv.through_cusp});
    out.push_back({iv.cls, iv.lo, iv.hi, Branch::Lower, iv.through_cusp});
  }
}

}  // namespace

std::vector<OrbitSpec> orbit_inventory_type1(const wavesystems::SystemCoefficients& s,
                                             double h) {
  const auto Q = [&](double p) {
    const double p2 = p * p;
    return 2.0 * h + s.A * p2 - s.B * p2 * p2;
  };
  const std::vector<Root> roots = level_roots_type1(s, h);
  std::vector<OrbitSpec> out;
  for (const IntervalSpec& iv : positive_intervals(Q, roots, -kInf, {})) emit(out, iv);
  return out;
}

std::vector<OrbitSpec> orbit_inventory_type2(const wavesystems::AlphaCoefficients& al,
                                             double h) {
  const auto C = [&](double psi) {
    return 0.5 * al.alpha1 * psi * psi * psi + al.alpha2 * psi * psi + 2.0 * h * psi -
           al.alpha3;
  };
  std::vector<Root> roots = level_roots_type2(al, h);
  std::vector<double> cusps;
  for (const Equilibrium& e : equilibria_type2(al))
    if (e.kind == EquilibriumKind::Cusp && e.u > 0.0) cusps.push_back(e.u * e.u);

  // At the cusp level the cubic has a triple root; the eigensolver splits it
  // by ~eps^(1/3), far beyond the generic clustering window. Snap any root
  // cluster sitting on a known cusp back onto it.
  for (double c : cusps) {
    int mult = 0;
    const double tol = 1e-5 * (1.0 + std::abs(c));
    for (auto it = roots.begin(); it != roots.end();) {
      if (std::abs(it->x - c) <= tol) {
        mult += it->multiplicity;
        it = roots.erase(it);
      } else {
        ++it;
      }
    }
    if (mult > 0) {
      auto pos = std::upper_bound(roots.begin(), roots.end(), c,
                                  [](double v, const Root& r) { return v < r.x; });
      roots.insert(pos, {c, mult});
    }
  }

  const std::vector<IntervalSpec> psi_specs = positive_intervals(C, roots, 0.0, cusps);

  // Map psi intervals to phi = +/- sqrt(psi); mirror copy on the negative side.
  std::vector<OrbitSpec> out;
  for (auto it = psi_specs.rbegin(); it != psi_specs.rend(); ++it) {
    IntervalSpec m = *it;
    const double lo = -(std::isfinite(m.hi) ? std::sqrt(m.hi) : kInf);
    const double hi = -std::sqrt(m.lo);
    std::swap(m.lo_turning, m.hi_turning);
    m.lo = lo;
    m.hi = hi;
    emit(out, m);
  }
  for (const IntervalSpec& p : psi_specs) {
    IntervalSpec m = p;
    m.lo = std::sqrt(p.lo);
    m.hi = std::isfinite(p.hi) ? std::sqrt(p.hi) : kInf;
    emit(out, m);
  }
  return out;
}

}  // namespace gkmn::bifurcation
