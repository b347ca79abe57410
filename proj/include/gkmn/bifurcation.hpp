#pragma once

// Phase-plane analysis of the two traveling-wave reductions:
// parameter-regime classification, equilibria with stability kinds,
// energy-level-set roots, and a combinatorial orbit inventory per level.

#include <vector>

#include "gkmn/wavesystems.hpp"

namespace gkmn::bifurcation {

enum class RegimeType1 {
  Case1,           // A*B > 0, B < 0: center at origin, outer saddle pair
  Case2,           // A*B > 0, B > 0: saddle at origin, outer center pair
  Case3Unbounded,  // A*B <= 0, B < 0: single (possibly degenerate) saddle
  Case3Bounded,    // A*B <= 0, B > 0: single (possibly degenerate) center
};

enum class RegimeType2 {
  CaseI,    // alpha1 > 0, alpha2 < 0, 0 < alpha3 < -4 alpha2^3 / (27 alpha1^2)
  CaseII,   // alpha1 > 0, alpha2 < 0, alpha3 at the cusp threshold
  CaseIII,  // alpha1 > 0, no positive equilibria
  CaseIV,   // alpha1 < 0: exactly one pair of centers
};

enum class EquilibriumKind {
  Center,
  Saddle,
  DegenerateCenter,  // linearization vanishes, nonlinear term restoring
  DegenerateSaddle,  // linearization vanishes, nonlinear term repelling
  Cusp,              // double root of the reduced cubic (Type 2 threshold)
};

struct Equilibrium {
  double u;  // p (Type 1) or phi (Type 2) coordinate; y = 0 always
  EquilibriumKind kind;
  double energy;  // H / H2 value at the equilibrium
};

const char* regime_name(RegimeType1 r);
const char* regime_name(RegimeType2 r);
const char* kind_name(EquilibriumKind k);

// Throws OutOfScopeError when B = 0 (Type 1) or alpha1 = 0 / alpha3 <= 0 (Type 2).
RegimeType1 classify_type1(const wavesystems::SystemCoefficients& s);
RegimeType2 classify_type2(const wavesystems::AlphaCoefficients& al);

// Equilibria sorted by coordinate. Type 2 returns the +/- sqrt(psi) pairs.
std::vector<Equilibrium> equilibria_type1(const wavesystems::SystemCoefficients& s);
std::vector<Equilibrium> equilibria_type2(const wavesystems::AlphaCoefficients& al);

// --- polynomial level-set machinery ---

struct Root {
  double x;
  int multiplicity;
};

// Real roots (with clustered multiplicities) of sum_i coeffs[i] x^i,
// computed by a companion-matrix eigen solve plus Newton polishing.
std::vector<Root> real_roots(const std::vector<double>& coeffs);

// Type 1: roots of Q(p) = 2h + A p^2 - B p^4  (= y^2 on the level H = h).
std::vector<Root> level_roots_type1(const wavesystems::SystemCoefficients& s, double h);

// Type 2: positive roots of C(psi) = (alpha1/2) psi^3 + alpha2 psi^2 + 2 h psi - alpha3,
// psi = phi^2 (so (psi')^2 = 4 C(psi) on the level H2 = h).
std::vector<Root> level_roots_type2(const wavesystems::AlphaCoefficients& al, double h);

// --- orbit inventory ---

enum class OrbitClass { Periodic, Homoclinic, Heteroclinic, Unbounded };

enum class Branch { Both, Upper, Lower };

struct OrbitSpec {
  OrbitClass cls;
  double lo;  // coordinate interval (p or phi); +/-infinity for rays
  double hi;
  Branch branch;
  bool through_cusp;  // an endpoint sits at a cusp equilibrium
};

const char* orbit_name(OrbitClass c);

// All orbits of the level set H = h (Type 1) resp. H2 = h (Type 2).
// Type 2 orbits are reported in phi, both mirror copies.
std::vector<OrbitSpec> orbit_inventory_type1(const wavesystems::SystemCoefficients& s,
                                             double h);
std::vector<OrbitSpec> orbit_inventory_type2(const wavesystems::AlphaCoefficients& al,
                                             double h);

}  // namespace gkmn::bifurcation
