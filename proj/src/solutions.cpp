#include "gkmn/solutions.hpp"

#include <algorithm>
#include <cmath>

#include "gkmn/bifurcation.hpp"
#include "gkmn/elliptic.hpp"
#include "gkmn/errors.hpp"

namespace gkmn::solutions {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.141592653589793238462643383279502884;

double clip(double v, double xi) {
  if (std::isnan(v)) throw SingularityError("amplitude evaluation produced NaN", xi);
  if (std::abs(v) > kAmplitudeClip) return std::copysign(kAmplitudeClip, v);
  return v;
}

double sn2(double u, double m) {
  const double s = elliptic::jacobi(u, m).sn;
  return s * s;
}

// Quartic level polynomial Q(p) = 2h + A p^2 - B p^4 in rho = p^2:
// rho = (A +/- sqrt(A^2 + 8 B h)) / (2 B).
struct RhoPair {
  double lo = 0.0, hi = 0.0;  // positive roots sorted ascending (n of them)
  int n = 0;
};

RhoPair positive_rho(const wavesystems::SystemCoefficients& s, double h) {
  const double disc = s.A * s.A + 8.0 * s.B * h;
  RhoPair out;
  if (disc < 0.0) return out;
  const double sq = std::sqrt(disc);
  double r1 = (s.A - sq) / (2.0 * s.B);
  double r2 = (s.A + sq) / (2.0 * s.B);
  if (r1 > r2) std::swap(r1, r2);
  if (r1 > 0.0) out.lo = r1, ++out.n;
  if (r2 > 0.0) {
    if (out.n == 0)
      out.lo = r2;
    else
      out.hi = r2;
    ++out.n;
  }
  if (out.n == 1) out.hi = out.lo;
  return out;
}

double saddle_energy1(const wavesystems::SystemCoefficients& s) {
  return -s.A * s.A / (8.0 * s.B);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

void require_level(double h, double expected, const std::string& family) {
  require(std::abs(h - expected) <= 1e-9 * (1.0 + std::abs(expected)),
          family + ": energy level must equal " + std::to_string(expected));
}

void require_regime1(const wavesystems::SystemCoefficients& s,
                     bifurcation::RegimeType1 want, const std::string& family) {
  require(bifurcation::classify_type1(s) == want, family + ": coefficients outside regime");
}

void require_regime2(const wavesystems::AlphaCoefficients& al,
                     bifurcation::RegimeType2 want, const std::string& family) {
  require(bifurcation::classify_type2(al) == want, family + ": coefficients outside regime");
}

bool is_degenerate_A(const wavesystems::SystemCoefficients& s) {
  return std::abs(s.A) <= 1e-12 * (1.0 + std::abs(s.B));
}

}  // namespace

std::vector<Family> all_families() {
  using F = Family;
  return {F::Pb1,  F::Pb2,  F::Pb2p, F::Pb3,  F::Pb3p, F::Pb4,  F::Pb4p, F::Pb5,
          F::Pb6,  F::Pb7,  F::Pu0,  F::Pu1,  F::Pu1p, F::Pu2,  F::Pu2p, F::Pu3,
          F::Pu3p, F::Pu4,  F::Pu4p, F::Pu5,  F::Pu5p, F::Pu6,  F::Pu6p, F::Pu7,
          F::Pu7p, F::Pu8,  F::Pu8p, F::Pu9,  F::Pu9p, F::PhiB1, F::PhiB2, F::PhiB3,
          F::PhiU1, F::PhiU2, F::PhiU3, F::PhiU4, F::PhiU5, F::PhiU6, F::PhiU7, F::PhiU8};
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::Pb1: return "p_b1";
    case Family::Pb2: return "p_b2";
    case Family::Pb2p: return "p_b2p";
    case Family::Pb3: return "p_b3";
    case Family::Pb3p: return "p_b3p";
    case Family::Pb4: return "p_b4";
    case Family::Pb4p: return "p_b4p";
    case Family::Pb5: return "p_b5";
    case Family::Pb6: return "p_b6";
    case Family::Pb7: return "p_b7";
    case Family::Pu0: return "p_u0";
    case Family::Pu1: return "p_u1";
    case Family::Pu1p: return "p_u1p";
    case Family::Pu2: return "p_u2";
    case Family::Pu2p: return "p_u2p";
    case Family::Pu3: return "p_u3";
    case Family::Pu3p: return "p_u3p";
    case Family::Pu4: return "p_u4";
    case Family::Pu4p: return "p_u4p";
    case Family::Pu5: return "p_u5";
    case Family::Pu5p: return "p_u5p";
    case Family::Pu6: return "p_u6";
    case Family::Pu6p: return "p_u6p";
    case Family::Pu7: return "p_u7";
    case Family::Pu7p: return "p_u7p";
    case Family::Pu8: return "p_u8";
    case Family::Pu8p: return "p_u8p";
    case Family::Pu9: return "p_u9";
    case Family::Pu9p: return "p_u9p";
    case Family::PhiB1: return "phi_b1";
    case Family::PhiB2: return "phi_b2";
    case Family::PhiB3: return "phi_b3";
    case Family::PhiU1: return "phi_u1";
    case Family::PhiU2: return "phi_u2";
    case Family::PhiU3: return "phi_u3";
    case Family::PhiU4: return "phi_u4";
    case Family::PhiU5: return "phi_u5";
    case Family::PhiU6: return "phi_u6";
    case Family::PhiU7: return "phi_u7";
    case Family::PhiU8: return "phi_u8";
  }
  return "?";
}

std::optional<Family> parse_family_tag(std::string s) {
  // Accept a trailing apostrophe as an alias for the "p" prime suffix.
  if (!s.empty() && s.back() == '\'') {
    s.pop_back();
    s += 'p';
  }
  for (Family f : all_families())
    if (family_tag(f) == s) return f;
  return std::nullopt;
}

bool is_type2(Family f) {
  switch (f) {
    case Family::PhiB1: case Family::PhiB2: case Family::PhiB3:
    case Family::PhiU1: case Family::PhiU2: case Family::PhiU3: case Family::PhiU4:
    case Family::PhiU5: case Family::PhiU6: case Family::PhiU7: case Family::PhiU8:
      return true;
    default:
      return false;
  }
}

bool is_bounded(Family f) {
  switch (f) {
    case Family::Pb1: case Family::Pb2: case Family::Pb2p: case Family::Pb3:
    case Family::Pb3p: case Family::Pb4: case Family::Pb4p: case Family::Pb5:
    case Family::Pb6: case Family::Pb7:
    case Family::PhiB1: case Family::PhiB2: case Family::PhiB3:
      return true;
    default:
      return false;
  }
}

namespace {

// Fills roots/domain/period; called by make_profile and validate_profile.
void build_profile(ProfileSpec& spec) {
  using bifurcation::RegimeType1;
  using bifurcation::RegimeType2;
  using F = Family;
  const wavesystems::SystemCoefficients& S = spec.sys;
  const wavesystems::AlphaCoefficients& al = spec.alpha;
  const double h = spec.h;
  const std::string tag = family_tag(spec.family);
  spec.roots.clear();
  spec.period = 0.0;

  const auto quartic_band = [&](RegimeType1 regime) {
    require_regime1(S, regime, tag);
    const RhoPair rho = positive_rho(S, h);
    require(rho.n == 2 && rho.lo > 0.0, tag + ": level must cut four real turning points");
    const double a = std::sqrt(rho.lo), b = std::sqrt(rho.hi);
    spec.roots = {-b, -a, a, b};
  };

  switch (spec.family) {
    case F::Pb1: {
      quartic_band(RegimeType1::Case1);
      require(h > 0.0 && h < saddle_energy1(S), "p_b1: requires 0 < h < saddle energy");
      const double p1 = spec.roots[0], p2 = spec.roots[1], p3 = spec.roots[2],
                   p4 = spec.roots[3];
      const double s = 0.5 * std::sqrt(-S.B * (p4 - p2) * (p3 - p1));
      const double m = ((p3 - p2) * (p4 - p1)) / ((p4 - p2) * (p3 - p1));
      const double T0 = elliptic::complete_K(m) / s;
      spec.xi_min = -T0;
      spec.xi_max = T0;
      spec.period = 2.0 * T0;
      break;
    }
    case F::Pb2:
    case F::Pb2p: {
      require_regime1(S, RegimeType1::Case1, tag);
      require_level(h, saddle_energy1(S), tag);
      const double p6 = std::sqrt(S.A / (2.0 * S.B));
      spec.roots = {-p6, p6};
      spec.xi_min = -kInf;
      spec.xi_max = kInf;
      break;
    }
    case F::Pb3:
    case F::Pb3p: {
      quartic_band(RegimeType1::Case2);
      require(h < 0.0 && h > saddle_energy1(S), tag + ": requires saddle energy < h < 0");
      const double p7 = spec.roots[0], p8 = spec.roots[1], p9 = spec.roots[2],
                   p10 = spec.roots[3];
      const double s = 0.5 * std::sqrt(S.B) * std::sqrt((p10 - p8) * (p9 - p7));
      const double m = ((p8 - p7) * (p10 - p9)) / ((p10 - p8) * (p9 - p7));
      const double T1 = elliptic::complete_K(m) / s;
      spec.xi_min = -T1;
      spec.xi_max = T1;
      spec.period = 2.0 * T1;
      break;
    }
    case F::Pb4:
    case F::Pb4p: {
      require_regime1(S, RegimeType1::Case2, tag);
      require_level(h, 0.0, tag);
      spec.roots = {std::sqrt(S.A / S.B)};
      spec.xi_min = -kInf;
      spec.xi_max = kInf;
      break;
    }
    case F::Pb5:
    case F::Pb6: {
      require_regime1(S,
                      spec.family == F::Pb5 ? RegimeType1::Case2 : RegimeType1::Case3Bounded,
                      tag);
      require(h > 0.0, tag + ": requires h > 0");
      const RhoPair rho = positive_rho(S, h);
      require(rho.n >= 1, tag + ": no positive turning point at this level");
      const double p = std::sqrt(rho.hi);
      spec.roots = {p};
      const double s = std::sqrt(2.0 * S.B * p * p - S.A);
      const double m = S.B * p * p / (2.0 * S.B * p * p - S.A);
      // One non-negative arch between consecutive zeros of the profile.
      const double T = elliptic::complete_K(m) / s;
      spec.xi_min = 0.0;
      spec.xi_max = 2.0 * T;
      spec.period = 2.0 * T;
      break;
    }
    case F::Pb7: {
      require_regime1(S, RegimeType1::Case3Bounded, tag);
      require(is_degenerate_A(S), "p_b7: requires A = 0");
      require(h > 0.0, "p_b7: requires h > 0");
      const double p = std::pow(2.0 * h / S.B, 0.25);
      spec.roots = {p};
      const double s = std::sqrt(2.0 * S.B) * p;
      // One non-negative arch between consecutive zeros of the profile.
      const double T = elliptic::complete_K(0.5) / s;
      spec.xi_min = 0.0;
      spec.xi_max = 2.0 * T;
      spec.period = 2.0 * T;
      break;
    }
    case F::Pu0:
    case F::Pu5: {
      require_regime1(S,
                      spec.family == F::Pu0 ? RegimeType1::Case1
                                            : RegimeType1::Case3Unbounded,
                      tag);
      if (spec.family == F::Pu0)
        require(h > saddle_energy1(S), "p_u0: requires h above the saddle energy");
      else
        require(h > 0.0, "p_u5: requires h > 0");
      const double root = std::sqrt(-2.0 * S.B * h);
      const double s = 2.0 * std::pow(-2.0 * S.B * h, 0.25);
      const double m = 0.5 + S.A / (4.0 * root);  // modulus as printed
      spec.xi_min = 0.0;
      spec.xi_max = 4.0 * elliptic::complete_K(m) / s;
      break;
    }
    case F::Pu1:
    case F::Pu1p: {
      require_regime1(S, RegimeType1::Case1, tag);
      require_level(h, saddle_energy1(S), tag);
      spec.roots = {std::sqrt(S.A / (2.0 * S.B))};
      spec.xi_min = 0.0;
      spec.xi_max = kInf;
      break;
    }
    case F::Pu2:
    case F::Pu2p: {
      require_regime1(S, RegimeType1::Case1, tag);
      require(h > 0.0 && h < saddle_energy1(S), tag + ": requires 0 < h < saddle energy");
      const RhoPair rho = positive_rho(S, h);
      require(rho.n == 2, tag + ": level must cut four real turning points");
      const double p3 = std::sqrt(rho.lo), p4 = std::sqrt(rho.hi);
      spec.roots = {p3, p4};
      const double s = p4 * std::sqrt(-S.B);
      const double m = (p3 / p4) * (p3 / p4);
      spec.xi_min = 0.0;
      spec.xi_max = 4.0 * elliptic::complete_K(m) / s;
      break;
    }
    case F::Pu3:
    case F::Pu3p: {
      require_regime1(S, RegimeType1::Case1, tag);
      require_level(h, 0.0, tag);
      const double p5 = std::sqrt(S.A / S.B);
      spec.roots = {p5};
      spec.xi_min = 0.0;
      spec.xi_max = 2.0 * kPi / (p5 * std::sqrt(-S.B));
      break;
    }
    case F::Pu4:
    case F::Pu4p:
    case F::Pu8:
    case F::Pu8p: {
      const bool case1 = spec.family == F::Pu4 || spec.family == F::Pu4p;
      require_regime1(S, case1 ? RegimeType1::Case1 : RegimeType1::Case3Unbounded, tag);
      require(h < 0.0, tag + ": requires h < 0");
      const RhoPair rho = positive_rho(S, h);
      require(rho.n == 1, tag + ": level must have exactly one positive turning point");
      const double p = std::sqrt(rho.hi);
      spec.roots = {p};
      const double s = std::sqrt(S.A - 2.0 * S.B * p * p);
      const double m = (S.B * p * p - S.A) / (2.0 * S.B * p * p - S.A);
      spec.xi_min = 0.0;
      spec.xi_max = 2.0 * elliptic::complete_K(m) / s;
      break;
    }
    case F::Pu5p: {
      require_regime1(S, RegimeType1::Case3Unbounded, tag);
      require(is_degenerate_A(S), "p_u5p: requires A = 0");
      require(h > 0.0, "p_u5p: requires h > 0");
      spec.xi_min = 0.0;
      spec.xi_max = 4.0 * elliptic::complete_K(0.5) / (8.0 * h);
      break;
    }
    case F::Pu6:
    case F::Pu6p: {
      require_regime1(S, RegimeType1::Case3Unbounded, tag);
      require(S.A > 0.0, tag + ": requires A > 0");
      require_level(h, 0.0, tag);
      spec.xi_min = 0.0;
      spec.xi_max = kInf;
      break;
    }
    case F::Pu7:
    case F::Pu7p: {
      require_regime1(S, RegimeType1::Case3Unbounded, tag);
      require(is_degenerate_A(S), tag + ": requires A = 0");
      require_level(h, 0.0, tag);
      spec.xi_min = 0.0;
      spec.xi_max = kInf;
      break;
    }
    case F::Pu9:
    case F::Pu9p: {
      require_regime1(S, RegimeType1::Case3Unbounded, tag);
      require(is_degenerate_A(S), tag + ": requires A = 0");
      require(h < 0.0, tag + ": requires h < 0");
      const double p = std::pow(2.0 * h / S.B, 0.25);
      spec.roots = {p};
      const double s = std::sqrt(-2.0 * S.B) * p;
      spec.xi_min = 0.0;
      spec.xi_max = 2.0 * elliptic::complete_K(0.5) / s;
      break;
    }

    case F::PhiB1:
    case F::PhiU3: {
      require_regime2(al, RegimeType2::CaseI, tag);
      const std::vector<bifurcation::Root> roots = bifurcation::level_roots_type2(al, h);
      require(roots.size() == 3 && roots[0].multiplicity == 1 &&
                  roots[1].multiplicity == 1 && roots[2].multiplicity == 1,
              tag + ": level must cut three simple positive roots");
      const double r1 = roots[0].x, r2 = roots[1].x, r3 = roots[2].x;
      spec.roots = {r1, r2, r3};
      const double s = std::sqrt(al.alpha1 * (r3 - r1) / 2.0);
      const double m = (r2 - r1) / (r3 - r1);
      const double K = elliptic::complete_K(m);
      if (spec.family == F::PhiB1) {
        spec.xi_min = -K / s;
        spec.xi_max = K / s;
        spec.period = 2.0 * K / s;
      } else {
        spec.xi_min = 0.0;
        spec.xi_max = 2.0 * K / s;
      }
      break;
    }
    case F::PhiB2:
    case F::PhiU2: {
      require_regime2(al, RegimeType2::CaseI, tag);
      // Pinned to the saddle level: double root at the saddle psi2, simple
      // root at 2 alpha3 / (alpha1 psi2^2) (root product identity).
      double psi2 = 0.0, saddle_energy = 0.0;
      for (const bifurcation::Equilibrium& e : bifurcation::equilibria_type2(al))
        if (e.u > 0.0 && e.kind == bifurcation::EquilibriumKind::Saddle) {
          psi2 = e.u * e.u;
          saddle_energy = e.energy;
        }
      require(psi2 > 0.0, tag + ": no saddle equilibrium in this regime");
      require_level(h, saddle_energy, tag);
      const double r4 = 2.0 * al.alpha3 / (al.alpha1 * psi2 * psi2);
      require(r4 < psi2, tag + ": root ordering violated");
      spec.roots = {r4, psi2};
      if (spec.family == F::PhiB2) {
        spec.xi_min = -kInf;
        spec.xi_max = kInf;
      } else {
        spec.xi_min = 0.0;
        spec.xi_max = kInf;
      }
      break;
    }
    case F::PhiB3: {
      require_regime2(al, RegimeType2::CaseIV, tag);
      const std::vector<bifurcation::Root> roots = bifurcation::level_roots_type2(al, h);
      require(roots.size() == 2 && roots[0].multiplicity == 1 &&
                  roots[1].multiplicity == 1,
              "phi_b3: level must cut two simple positive roots");
      const double r6 = roots[0].x, r7 = roots[1].x;
      require(2.0 * r6 > r7,
              "phi_b3: printed form requires 2 r6 > r7 (narrow band above the center)");
      spec.roots = {r6, r7};
      const double D = 2.0 * al.alpha1 * r7 + al.alpha1 * r6 + 2.0 * al.alpha2;
      const double s = std::sqrt(-D / 2.0);
      const double m = al.alpha1 * (r7 - r6) / D;
      const double K = elliptic::complete_K(m);
      spec.xi_min = -K / s;
      spec.xi_max = K / s;
      spec.period = 2.0 * K / s;
      break;
    }
    case F::PhiU1:
    case F::PhiU5:
    case F::PhiU7:
    case F::PhiU8: {
      if (spec.family == F::PhiU1 || spec.family == F::PhiU5)
        require_regime2(al, RegimeType2::CaseI, tag);
      else if (spec.family == F::PhiU7)
        require_regime2(al, RegimeType2::CaseII, tag);
      else
        require_regime2(al, RegimeType2::CaseIII, tag);
      const std::vector<bifurcation::Root> roots = bifurcation::level_roots_type2(al, h);
      require(roots.size() == 1 && roots[0].multiplicity == 1,
              tag + ": level must cut exactly one simple positive root");
      const double r = roots[0].x;
      spec.roots = {r};
      const double Qv =
          (2.0 * al.alpha1 * r * r + (al.alpha1 + 2.0 * al.alpha2) * r + 4.0 * h) /
          al.alpha1;
      require(Qv > 0.0, tag + ": discriminant combination must be positive");
      const double A4 = std::pow(Qv, 0.25);
      const double s = std::sqrt(2.0 * al.alpha1) * A4;
      const double num =
          std::sqrt(8.0 * al.alpha1 * al.alpha1 * r * r +
                    4.0 * al.alpha1 * (al.alpha1 + 2.0 * al.alpha2) * r +
                    16.0 * al.alpha1 * h) -
          (2.0 * al.alpha2 + 3.0 * al.alpha1 * r);
      const double den = std::sqrt(32.0 * al.alpha1 * al.alpha1 * r * r +
                                   16.0 * al.alpha1 * (al.alpha1 + al.alpha2) * r +
                                   64.0 * al.alpha1 * h);
      const double m = num / den;  // modulus as printed
      spec.xi_min = 0.0;
      spec.xi_max = 4.0 * elliptic::complete_K(m) / s;
      break;
    }
    case F::PhiU4: {
      require_regime2(al, RegimeType2::CaseI, tag);
      // Pinned to the center level: double root at the center psi1, simple
      // root at 2 alpha3 / (alpha1 psi1^2).
      double psi1 = 0.0, center_energy = 0.0;
      for (const bifurcation::Equilibrium& e : bifurcation::equilibria_type2(al))
        if (e.u > 0.0 && e.kind == bifurcation::EquilibriumKind::Center) {
          psi1 = e.u * e.u;
          center_energy = e.energy;
        }
      require(psi1 > 0.0, "phi_u4: no center equilibrium in this regime");
      require_level(h, center_energy, "phi_u4");
      const double r8 = 2.0 * al.alpha3 / (al.alpha1 * psi1 * psi1);
      require(r8 > psi1, "phi_u4: root ordering violated");
      spec.roots = {psi1, r8};
      const double s = std::sqrt(al.alpha1 * (r8 - psi1) / 2.0);
      spec.xi_min = 0.0;
      spec.xi_max = kPi / s;
      break;
    }
    case F::PhiU6: {
      require_regime2(al, RegimeType2::CaseII, tag);
      // The level is pinned to the cusp energy.
      double cusp_energy = 0.0;
      bool found = false;
      for (const bifurcation::Equilibrium& e : bifurcation::equilibria_type2(al)) {
        if (e.kind == bifurcation::EquilibriumKind::Cusp && e.u > 0.0) {
          cusp_energy = e.energy;
          found = true;
        }
      }
      require(found, "phi_u6: no cusp equilibrium");
      require_level(h, cusp_energy, "phi_u6");
      spec.xi_min = 0.0;
      spec.xi_max = kInf;
      break;
    }
  }
}

}  // namespace

ProfileSpec make_profile1(Family f, const wavesystems::SystemCoefficients& s, double h) {
  if (is_type2(f)) throw ValidationError("make_profile1: " + family_tag(f) + " is Type 2");
  ProfileSpec spec;
  spec.family = f;
  spec.sys = s;
  spec.h = h;
  build_profile(spec);
  validate_profile(spec);
  return spec;
}

ProfileSpec make_profile2(Family f, const wavesystems::AlphaCoefficients& al, double h) {
  if (!is_type2(f)) throw ValidationError("make_profile2: " + family_tag(f) + " is Type 1");
  ProfileSpec spec;
  spec.family = f;
  spec.alpha = al;
  spec.h = h;
  build_profile(spec);
  validate_profile(spec);
  return spec;
}

void validate_profile(const ProfileSpec& spec) {
  ProfileSpec rebuilt = spec;
  build_profile(rebuilt);
  require(rebuilt.roots.size() == spec.roots.size(),
          family_tag(spec.family) + ": root list size mismatch");
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    require(std::abs(rebuilt.roots[i] - spec.roots[i]) <=
                1e-8 * (1.0 + std::abs(rebuilt.roots[i])),
            family_tag(spec.family) + ": root list inconsistent with level");
    if (i > 0)
      require(spec.roots[i] > spec.roots[i - 1],
              family_tag(spec.family) + ": roots must be strictly increasing");
  }
  // Energy cross-check: every stored turning value lies on the level.
  for (double r : spec.roots) {
    double dev;
    if (is_type2(spec.family)) {
      dev = std::abs(wavesystems::energy2(spec.alpha, std::sqrt(r), 0.0) - spec.h);
    } else {
      dev = std::abs(wavesystems::energy1(spec.sys, r, 0.0) - spec.h);
    }
    require(dev <= 1e-8 * (1.0 + std::abs(spec.h)),
            family_tag(spec.family) + ": turning point off the energy level");
  }
}

double eval_amplitude(const ProfileSpec& spec, double xi) {
  using F = Family;
  const wavesystems::SystemCoefficients& S = spec.sys;
  const wavesystems::AlphaCoefficients& al = spec.alpha;
  const double h = spec.h;

  switch (spec.family) {
    case F::Pb1: {
      const double p1 = spec.roots[0], p2 = spec.roots[1], p3 = spec.roots[2],
                   p4 = spec.roots[3];
      const double s = 0.5 * std::sqrt(-S.B * (p4 - p2) * (p3 - p1));
      const double m = ((p3 - p2) * (p4 - p1)) / ((p4 - p2) * (p3 - p1));
      const double Ssn = sn2(s * xi, m);
      return clip(p1 + (p2 - p1) * (p3 - p1) / ((p3 - p1) - (p3 - p2) * Ssn), xi);
    }
    case F::Pb2:
    case F::Pb2p: {
      const double amp = 0.5 * (spec.roots[1] - spec.roots[0]);
      const double v = amp * std::tanh(amp * std::sqrt(-S.B) * xi);
      return clip(spec.family == F::Pb2 ? v : -v, xi);
    }
    case F::Pb3: {
      const double p7 = spec.roots[0], p8 = spec.roots[1], p9 = spec.roots[2],
                   p10 = spec.roots[3];
      const double s = 0.5 * std::sqrt(S.B) * std::sqrt((p10 - p8) * (p9 - p7));
      const double m = ((p8 - p7) * (p10 - p9)) / ((p10 - p8) * (p9 - p7));
      const double Ssn = sn2(s * xi, m);
      return clip(p10 - (p10 - p8) * (p10 - p7) / ((p10 - p8) + (p8 - p7) * Ssn), xi);
    }
    case F::Pb3p: {
      const double p7 = spec.roots[0], p8 = spec.roots[1], p9 = spec.roots[2],
                   p10 = spec.roots[3];
      const double s = 0.5 * std::sqrt(S.B) * std::sqrt((p10 - p8) * (p9 - p7));
      const double m = ((p8 - p7) * (p10 - p9)) / ((p10 - p8) * (p9 - p7));
      const double Ssn = sn2(s * xi, m);
      return clip(p8 + (p9 - p8) * (p10 - p8) / ((p10 - p8) - (p10 - p9) * Ssn), xi);
    }
    case F::Pb4:
    case F::Pb4p: {
      const double p11 = spec.roots[0];
      const double E = std::exp(std::sqrt(S.B) * p11 * std::abs(xi));
      const double v = -2.0 * p11 * E / (E * E + 1.0);
      return clip(spec.family == F::Pb4 ? v : -v, xi);
    }
    case F::Pb5:
    case F::Pb6: {
      const double p = spec.roots[0];
      const double p2 = p * p;
      const double s = std::sqrt(2.0 * S.B * p2 - S.A);
      const double m = S.B * p2 / (2.0 * S.B * p2 - S.A);
      const double Ssn = sn2(s * xi, m);
      return clip(
          std::sqrt((S.B * p2 - S.A) * p2 * Ssn / (2.0 * S.B * p2 - S.A - S.B * p2 * Ssn)),
          xi);
    }
    case F::Pb7: {
      const double p = spec.roots[0];
      const double Ssn = sn2(std::sqrt(2.0 * S.B) * p * xi, 0.5);
      return clip(std::sqrt(p * p * Ssn / (2.0 - Ssn)), xi);
    }
    case F::Pu0:
    case F::Pu5: {
      const double root = std::sqrt(-2.0 * S.B * h);
      const double beta = std::pow(-2.0 * h / S.B, 0.25);
      const double s = 2.0 * std::pow(-2.0 * S.B * h, 0.25);
      const double m = 0.5 + S.A / (4.0 * root);  // as printed
      const double cn = elliptic::jacobi(s * xi, m).cn;
      return clip(beta * std::sqrt(-1.0 + 2.0 / (1.0 - cn)), xi);
    }
    case F::Pu1:
    case F::Pu1p: {
      const double amp = spec.roots[0];
      const double v = amp * (1.0 + 2.0 / (std::exp(std::sqrt(-2.0 * S.A) * xi) - 1.0));
      return clip(spec.family == F::Pu1 ? v : -v, xi);
    }
    case F::Pu2:
    case F::Pu2p: {
      const double p3 = spec.roots[0], p4 = spec.roots[1];
      const double v =
          p4 / elliptic::jacobi(p4 * std::sqrt(-S.B) * xi, (p3 / p4) * (p3 / p4)).sn;
      return clip(spec.family == F::Pu2 ? v : -v, xi);
    }
    case F::Pu3:
    case F::Pu3p: {
      const double p5 = spec.roots[0];
      const double v = p5 / std::sin(p5 * std::sqrt(-S.B) * xi);
      return clip(spec.family == F::Pu3 ? v : -v, xi);
    }
    case F::Pu4:
    case F::Pu4p:
    case F::Pu8:
    case F::Pu8p: {
      const double p = spec.roots[0];
      const double p2 = p * p;
      const double s = std::sqrt(S.A - 2.0 * S.B * p2);
      const double m = (S.B * p2 - S.A) / (2.0 * S.B * p2 - S.A);
      const double Ssn = sn2(s * xi, m);
      const double v =
          std::sqrt(-(S.B * p2 - S.A) / S.B + (2.0 * S.B * p2 - S.A) / (S.B * Ssn));
      const bool positive = spec.family == F::Pu4 || spec.family == F::Pu8;
      return clip(positive ? v : -v, xi);
    }
    case F::Pu5p: {
      const double cn = elliptic::jacobi(8.0 * h * xi, 0.5).cn;
      return clip(std::sqrt(2.0 / (1.0 - cn) - 1.0), xi);
    }
    case F::Pu6:
    case F::Pu6p: {
      const double E = std::exp(std::sqrt(S.A) * xi);
      const double v = 2.0 * std::sqrt(-S.A / S.B) * E / (E * E - 1.0);
      return clip(spec.family == F::Pu6 ? v : -v, xi);
    }
    case F::Pu7:
    case F::Pu7p: {
      const double v = std::sqrt(-1.0 / S.B) / xi;
      return clip(spec.family == F::Pu7 ? v : -v, xi);
    }
    case F::Pu9:
    case F::Pu9p: {
      const double p = spec.roots[0];
      const double Ssn = sn2(std::sqrt(-2.0 * S.B) * p * xi, 0.5);
      const double v = std::sqrt(-p * p + 2.0 * p * p / Ssn);
      return clip(spec.family == F::Pu9 ? v : -v, xi);
    }

    case F::PhiB1: {
      const double r1 = spec.roots[0], r2 = spec.roots[1], r3 = spec.roots[2];
      const double s = std::sqrt(al.alpha1 * (r3 - r1) / 2.0);
      const double m = (r2 - r1) / (r3 - r1);
      return clip(std::sqrt(r1 + (r2 - r1) * sn2(s * xi, m)), xi);
    }
    case F::PhiB2: {
      const double r4 = spec.roots[0], r5 = spec.roots[1];
      const double E = std::exp(std::sqrt(2.0 * al.alpha1 * (r5 - r4)) * xi);
      const double w = (1.0 - E) / (1.0 + E);
      return clip(std::sqrt(r4 + (r5 - r4) * w * w), xi);
    }
    case F::PhiB3: {
      const double r6 = spec.roots[0], r7 = spec.roots[1];
      const double D = 2.0 * al.alpha1 * r7 + al.alpha1 * r6 + 2.0 * al.alpha2;
      const double D6 = 2.0 * al.alpha1 * r6 + al.alpha1 * r7 + 2.0 * al.alpha2;
      const double s = std::sqrt(-D / 2.0);
      const double m = al.alpha1 * (r7 - r6) / D;
      const double Ssn = sn2(s * xi, m);
      return clip(
          std::sqrt(r6 + D6 * (r7 - r6) * Ssn / (al.alpha1 * (r7 - r6) * Ssn - D)), xi);
    }
    case F::PhiU1:
    case F::PhiU5:
    case F::PhiU7:
    case F::PhiU8: {
      const double r = spec.roots[0];
      const double Qv =
          (2.0 * al.alpha1 * r * r + (al.alpha1 + 2.0 * al.alpha2) * r + 4.0 * h) /
          al.alpha1;
      const double A4 = std::pow(Qv, 0.25);
      const double s = std::sqrt(2.0 * al.alpha1) * A4;
      const double num =
          std::sqrt(8.0 * al.alpha1 * al.alpha1 * r * r +
                    4.0 * al.alpha1 * (al.alpha1 + 2.0 * al.alpha2) * r +
                    16.0 * al.alpha1 * h) -
          (2.0 * al.alpha2 + 3.0 * al.alpha1 * r);
      const double den = std::sqrt(32.0 * al.alpha1 * al.alpha1 * r * r +
                                   16.0 * al.alpha1 * (al.alpha1 + al.alpha2) * r +
                                   64.0 * al.alpha1 * h);
      const double m = num / den;  // as printed
      const double cn = elliptic::jacobi(s * xi, m).cn;
      return clip(std::sqrt(r - A4 + 2.0 * A4 / (1.0 - cn)), xi);
    }
    case F::PhiU2: {
      const double r2 = spec.roots[0], r3 = spec.roots[1];
      const double E = std::exp(std::sqrt(2.0 * al.alpha1 * (r3 - r2)) * xi);
      const double w = (1.0 + E) / (1.0 - E);
      return clip(std::sqrt(r2 + (r3 - r2) * w * w), xi);
    }
    case F::PhiU3: {
      const double r4 = spec.roots[0], r5 = spec.roots[1], r6 = spec.roots[2];
      const double s = std::sqrt(al.alpha1 * (r6 - r4) / 2.0);
      const double m = (r5 - r4) / (r6 - r4);
      return clip(std::sqrt(r4 + (r6 - r4) / sn2(s * xi, m)), xi);
    }
    case F::PhiU4: {
      const double r7 = spec.roots[0], r8 = spec.roots[1];
      const double s = std::sqrt(al.alpha1 * (r8 - r7) / 2.0);
      const double t = std::tan(s * xi);
      return clip(std::sqrt(r8 + (r8 - r7) / (t * t)), xi);
    }
    case F::PhiU6: {
      return clip(
          std::sqrt(-2.0 * al.alpha2 / (3.0 * al.alpha1) + 2.0 / (al.alpha1 * xi * xi)),
          xi);
    }
  }
  throw DomainError("eval_amplitude: unknown family");
}

double eval_amplitude_derivative(const ProfileSpec& spec, double xi) {
  double step = 1e-5;
  if (std::isfinite(spec.xi_min)) step = std::min(step, 0.3 * (xi - spec.xi_min));
  if (std::isfinite(spec.xi_max)) step = std::min(step, 0.3 * (spec.xi_max - xi));
  step = std::max(step, 1e-9);
  const double f1 = eval_amplitude(spec, xi - 2.0 * step);
  const double f2 = eval_amplitude(spec, xi - step);
  const double f3 = eval_amplitude(spec, xi + step);
  const double f4 = eval_amplitude(spec, xi + 2.0 * step);
  return (f1 - 8.0 * f2 + 8.0 * f3 - f4) / (12.0 * step);
}

void embed_type1(const wavesystems::SystemCoefficients& s, wavesystems::EquationParams& eq,
                 wavesystems::Type1WaveParams& wave) {
  eq = {1.0, s.B};
  wave = {1.0, 1.0, 0.0, -s.A, 0.0};  // A = -r, B = b at a = m = kappa = 1
}

void embed_type2(const wavesystems::AlphaCoefficients& al, wavesystems::EquationParams& eq,
                 wavesystems::Type2WaveParams& wave) {
  if (!(al.alpha3 > 0.0)) throw OutOfScopeError("embed_type2 requires alpha3 > 0");
  const double e = std::sqrt(al.alpha3);
  const double b = -al.alpha1;  // alpha1 = -c b at c = 1
  const double mu = -al.alpha2 - (1.0 + 8.0 * b * e) / 4.0;
  eq = {1.0, b};
  wave = {1.0, 1.0, mu, e};
}

namespace {

struct SweepParams {
  Family family;
  bool type2;
  wavesystems::SystemCoefficients sys;
  wavesystems::AlphaCoefficients alpha;
  double h;
};

std::vector<SweepParams> sweep_table() {
  using F = Family;
  const wavesystems::SystemCoefficients case1{-4.0, -0.5};
  const wavesystems::SystemCoefficients case2{4.0, 0.5};
  const wavesystems::SystemCoefficients case3u{4.0, -2.0};
  const wavesystems::SystemCoefficients case3u_deg{0.0, -0.5};
  const wavesystems::SystemCoefficients case3b{-4.0, 2.0};
  const wavesystems::SystemCoefficients case3b_deg{0.0, 0.5};
  const wavesystems::AlphaCoefficients aI{1.0, -4.0, 0.1};
  const wavesystems::AlphaCoefficients aII{1.0, -4.0, 256.0 / 27.0};
  const wavesystems::AlphaCoefficients aIII{1.0, 0.0, 0.1};
  const wavesystems::AlphaCoefficients aIV{-1.0, 0.0, 0.1};

  double h_center = 0.0, h_saddle = 0.0, h_cusp = 0.0, h_center_iv = 0.0;
  for (const bifurcation::Equilibrium& e : bifurcation::equilibria_type2(aI)) {
    if (e.u <= 0.0) continue;
    if (e.kind == bifurcation::EquilibriumKind::Center) h_center = e.energy;
    if (e.kind == bifurcation::EquilibriumKind::Saddle) h_saddle = e.energy;
  }
  for (const bifurcation::Equilibrium& e : bifurcation::equilibria_type2(aII))
    if (e.u > 0.0 && e.kind == bifurcation::EquilibriumKind::Cusp) h_cusp = e.energy;
  for (const bifurcation::Equilibrium& e : bifurcation::equilibria_type2(aIV))
    if (e.u > 0.0 && e.kind == bifurcation::EquilibriumKind::Center) h_center_iv = e.energy;
  const double h_mid = 0.5 * (h_center + h_saddle);

  return {
      {F::Pb1, false, case1, {}, 2.0},
      {F::Pb2, false, case1, {}, 4.0},
      {F::Pb2p, false, case1, {}, 4.0},
      {F::Pb3, false, case2, {}, -2.0},
      {F::Pb3p, false, case2, {}, -2.0},
      {F::Pb4, false, case2, {}, 0.0},
      {F::Pb4p, false, case2, {}, 0.0},
      {F::Pb5, false, case2, {}, 2.25},
      {F::Pb6, false, case3b, {}, 3.0},
      {F::Pb7, false, case3b_deg, {}, 0.25},
      {F::Pu0, false, case1, {}, 6.0},
      {F::Pu1, false, case1, {}, 4.0},
      {F::Pu1p, false, case1, {}, 4.0},
      {F::Pu2, false, case1, {}, 2.0},
      {F::Pu2p, false, case1, {}, 2.0},
      {F::Pu3, false, case1, {}, 0.0},
      {F::Pu3p, false, case1, {}, 0.0},
      {F::Pu4, false, case1, {}, -2.0},
      {F::Pu4p, false, case1, {}, -2.0},
      {F::Pu5, false, case3u, {}, 2.0},
      {F::Pu5p, false, case3u_deg, {}, 1.0},
      {F::Pu6, false, case3u, {}, 0.0},
      {F::Pu6p, false, case3u, {}, 0.0},
      {F::Pu7, false, case3u_deg, {}, 0.0},
      {F::Pu7p, false, case3u_deg, {}, 0.0},
      {F::Pu8, false, case3u, {}, -2.0},
      {F::Pu8p, false, case3u, {}, -2.0},
      {F::Pu9, false, case3u_deg, {}, -1.0},
      {F::Pu9p, false, case3u_deg, {}, -1.0},
      {F::PhiB1, true, {}, aI, h_mid},
      {F::PhiB2, true, {}, aI, h_saddle},
      {F::PhiB3, true, {}, aIV, h_center_iv + 0.01},
      {F::PhiU1, true, {}, aI, h_saddle + 1.0},
      {F::PhiU2, true, {}, aI, h_saddle},
      {F::PhiU3, true, {}, aI, h_mid},
      {F::PhiU4, true, {}, aI, h_center},
      {F::PhiU5, true, {}, aI, 0.5 * h_center},
      {F::PhiU6, true, {}, aII, h_cusp},
      {F::PhiU7, true, {}, aII, 6.0},
      {F::PhiU8, true, {}, aIII, 1.0},
  };
}

SweepEntry make_entry(const SweepParams& p) {
  SweepEntry entry;
  entry.family = p.family;
  if (p.type2) {
    entry.spec = make_profile2(p.family, p.alpha, p.h);
    embed_type2(p.alpha, entry.eq, entry.wave2);
    entry.wave1 = {};
  } else {
    entry.spec = make_profile1(p.family, p.sys, p.h);
    embed_type1(p.sys, entry.eq, entry.wave1);
    entry.wave2 = {};
  }
  return entry;
}

}  // namespace

std::vector<SweepEntry> default_sweep() {
  std::vector<SweepEntry> out;
  for (const SweepParams& p : sweep_table()) out.push_back(make_entry(p));
  return out;
}

SweepEntry default_sweep_entry(Family f) {
  for (const SweepParams& p : sweep_table())
    if (p.family == f) return make_entry(p);
  throw DomainError("default_sweep_entry: unknown family");
}

}  // namespace gkmn::solutions
