#pragma once

// Independent verification layer: adaptive Runge-Kutta integration of the
// reduced systems, finite-difference ODE residuals, energy conservation,
// closed-form vs numeric orbit comparison, quadrature phase cross-checks,
// full-PDE residual convergence, and quadrature oracles for the elliptic
// kernel. Every check reports its metrics; nothing passes silently.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gkmn/solutions.hpp"
#include "gkmn/wavesystems.hpp"

namespace gkmn::verify {

// --- adaptive Dormand-Prince 5(4) with dense output ---

struct Trajectory {
  std::vector<double> t;
  std::vector<wavesystems::State> y;
  std::vector<wavesystems::State> f;  // field values at nodes
  bool complete = true;
  std::string note;

  // Dense output: cubic Hermite on the enclosing step (4th-order accurate).
  wavesystems::State at(double s) const;
  double t_begin() const { return t.front(); }
  double t_end() const { return t.back(); }
};

// Integrates y' = field(y) from t0 to t1 (either direction). Stops early
// (complete = false, note set) on amplitude overflow or step underflow.
Trajectory rk_integrate(const wavesystems::Field& field, const wavesystems::State& y0,
                        double t0, double t1, double tol = 1e-10);

// Poincare return time of the closed orbit through `start` (a turning point,
// y = 0): time of the second y = 0 crossing.
double find_period(const wavesystems::Field& field, const wavesystems::State& start,
                   double t_max = 1000.0, double tol = 1e-10);

// --- profile metrics ---

// Default sampling window for a profile: the validity interval shrunk away
// from its endpoints, truncated to a fixed width on unbounded sides.
std::pair<double, double> sample_window(const solutions::ProfileSpec& spec);

// max over `samples` interior points of |p'' - rhs(p)| / max(1, |rhs(p)|),
// second derivative by 5-point finite differences with step 1e-4.
// Samples where |p| > 1e5 (near poles / clip) are skipped.
double ode_residual(const std::function<double(double)>& profile,
                    const std::function<double(double)>& rhs, double lo, double hi,
                    int samples = 100);

// max over samples of |H(p, p') - h| with p' by 5-point finite differences;
// restricted to samples with |p| <= 10 where the FD derivative is reliable.
double energy_spread(const std::function<double(double)>& profile,
                     const std::function<double(double, double)>& energy, double h,
                     double lo, double hi, int samples = 100);

// Normalized sup distance between the closed-form profile and an independent
// RK orbit, re-anchored on the closed form's energy level every ~1.5 units
// (and afresh on each arc between poles). Compared only at moderate
// amplitude (|closed| within 10x the anchor value): matching deep inside a
// blow-up would measure integrator phase drift, not orbit identity.
double closed_vs_numeric(const solutions::SweepEntry& entry, double rk_tol = 1e-10);

// --- per-family verdicts ---

struct FamilyReport {
  std::string target;  // family tag
  double ode_residual = 0.0;
  double energy_spread = 0.0;
  double closed_vs_numeric = 0.0;
  double tol_ode = 0.0;
  double tol_energy = 0.0;
  double tol_closed = 0.0;
  std::string verdict;  // "Pass" | "AsPrintedDiscrepancy" | "Fail"
  std::string notes;
};

FamilyReport verify_family(const solutions::SweepEntry& entry);
std::vector<FamilyReport> verify_all();  // the 40-family default sweep

std::string to_json(const FamilyReport& r);
std::string to_json(const std::vector<FamilyReport>& rs);

// --- phase cross-checks (the eight printed phase integrals) ---

struct PhaseReport {
  std::string target;       // "S1".."S8"
  std::string family;       // carrying family tag
  double max_error = 0.0;   // sup |closed - quadrature| after base matching
  double tol = 1e-8;
  std::string verdict;      // "Pass" | "AsPrintedDiscrepancy"
  std::string notes;
};

PhaseReport verify_phase(const solutions::SweepEntry& entry);
std::vector<PhaseReport> verify_phases();  // S1..S8 at the sweep parameters
std::string to_json(const std::vector<PhaseReport>& rs);

// --- full-PDE residual convergence ---

struct PdeReport {
  std::string target;
  std::array<double, 3> residual{};  // max-norm residual on 3 nested grids
  std::array<double, 2> order{};     // observed convergence orders
  bool pass = false;                 // both orders within [1.8, 2.2]
};

// Central second-order finite differences of i q_t + a q_xy + i b q (q q*_x - q* q_x)
// over the cube [corner, corner+span]^3 at spacings h0, h0/2, h0/4.
PdeReport pde_residual(const solutions::SweepEntry& entry,
                       const std::array<double, 3>& corner, double span, double h0);

// --- quadrature oracles for the elliptic kernel ---

double oracle_K(double k2);
double oracle_F(double phi, double k2);
double oracle_E(double phi, double k2);
double oracle_Pi(double phi, double n, double k2);
double oracle_epsilon(double u, double k2);  // integral of dn^2

// --- negative controls (mutations the verifier must flag) ---

double negative_control_sn_swap();     // p_b1 with sn^2 -> cn^2
double negative_control_alpha_flip();  // phi_b1 against an alpha2-flipped field

}  // namespace gkmn::verify
