#pragma once

// Phase-portrait rendering for the two reduced planar systems: marching-squares
// level sets of the first integral (Newton-projected back onto the level),
// RK-traced separatrices out of hyperbolic saddles, equilibrium markers, and
// deterministic SVG / CSV serialization.

#include <array>
#include <string>
#include <vector>

#include "gkmn/bifurcation.hpp"
#include "gkmn/wavesystems.hpp"

namespace gkmn::portrait {

struct PortraitOptions {
  double u_min = -3.0, u_max = 3.0;
  double y_min = -3.0, y_max = 3.0;
  int grid = 512;               // marching-squares cells per side
  std::vector<double> levels;   // empty: auto (equilibrium energies, midpoints,
                                // two exterior levels; {-1,0,1} if no equilibria)
  double band = 0.02;           // Type 2 only: mask |phi| < band around the
                                // phase-space singularity
};

struct Curve {
  int id = 0;
  double h = 0.0;       // energy level
  std::string cls;      // "level" | "separatrix"
  bool closed = false;  // polyline forms a loop (bounded component)
  std::vector<std::array<double, 2>> pts;  // (u, y)
};

struct Marker {
  double u = 0.0, y = 0.0;
  bifurcation::EquilibriumKind kind{};
  double energy = 0.0;
};

struct Portrait {
  std::vector<Curve> curves;
  std::vector<Marker> markers;
  std::vector<double> levels;  // the levels actually drawn, ascending
};

Portrait make_portrait_type1(const wavesystems::SystemCoefficients& s,
                             const PortraitOptions& opt);
Portrait make_portrait_type2(const wavesystems::AlphaCoefficients& al,
                             const PortraitOptions& opt);

// Number of closed level curves on energy level h (bounded components).
int bounded_component_count(const Portrait& p, double h);

// Deterministic renderings: byte-identical for identical inputs.
// SVG canvas is 800x640; saddles render as crosses, centers as dots,
// cusps as triangles, degenerate equilibria as hollow circles.
std::string to_svg(const Portrait& p, const PortraitOptions& opt);
// Columns: curve_id,class,h,u,y
std::string to_csv(const Portrait& p);

}  // namespace gkmn::portrait
