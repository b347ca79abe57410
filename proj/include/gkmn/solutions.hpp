#pragma once

// Closed-form traveling-wave catalog: 40 amplitude families (Type 1 bounded
// "p_b*", Type 1 unbounded "p_u*", Type 2 "phi_b*"/"phi_u*"), their validity
// domains/periods, the eight printed closed phase integrals S1..S8, an
// independent quadrature phase, and full q(x,y,t) assembly.
//
// Formulas are evaluated exactly as the source catalog prints them; known
// misprints are NOT corrected here (the verifier reports them as
// as-printed discrepancies).

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gkmn/wavesystems.hpp"

namespace gkmn::solutions {

enum class Family {
  // Type 1 bounded
  Pb1, Pb2, Pb2p, Pb3, Pb3p, Pb4, Pb4p, Pb5, Pb6, Pb7,
  // Type 1 unbounded
  Pu0, Pu1, Pu1p, Pu2, Pu2p, Pu3, Pu3p, Pu4, Pu4p,
  Pu5, Pu5p, Pu6, Pu6p, Pu7, Pu7p, Pu8, Pu8p, Pu9, Pu9p,
  // Type 2 bounded
  PhiB1, PhiB2, PhiB3,
  // Type 2 unbounded
  PhiU1, PhiU2, PhiU3, PhiU4, PhiU5, PhiU6, PhiU7, PhiU8,
};

inline constexpr int kFamilyCount = 40;
std::vector<Family> all_families();

std::string family_tag(Family f);                       // canonical, e.g. "p_b2p"
std::optional<Family> parse_family_tag(std::string s);  // accepts "p_b2'" alias
bool is_type2(Family f);
bool is_bounded(Family f);

// Amplitude clip applied to unbounded evaluations.
inline constexpr double kAmplitudeClip = 1e8;

struct ProfileSpec {
  Family family;
  wavesystems::SystemCoefficients sys{0.0, 0.0};        // Type 1
  wavesystems::AlphaCoefficients alpha{0.0, 0.0, 0.0};  // Type 2
  double h = 0.0;              // energy level of the underlying orbit
  std::vector<double> roots;   // family-specific ordered root list
  double xi_min = 0.0;         // open validity interval
  double xi_max = 0.0;
  double period = 0.0;         // 0 when non-periodic
};

// Build + validate a profile on energy level h (coefficients must match the
// family's regime; throws ValidationError / OutOfScopeError otherwise).
ProfileSpec make_profile1(Family f, const wavesystems::SystemCoefficients& s, double h);
ProfileSpec make_profile2(Family f, const wavesystems::AlphaCoefficients& al, double h);

// Re-run the internal consistency checks (root ordering, regime, energy
// cross-checks within 1e-8). Throws ValidationError on violation.
void validate_profile(const ProfileSpec& spec);

// Amplitude value at xi (clipped to +/-kAmplitudeClip near blow-up points).
double eval_amplitude(const ProfileSpec& spec, double xi);
// Five-point finite-difference derivative of the amplitude.
double eval_amplitude_derivative(const ProfileSpec& spec, double xi);

// --- phases (Type 2) ---

// Phase constants C1..C8 (zero-initialized, settable per wave).
struct PhaseConstants {
  double C[8] = {0, 0, 0, 0, 0, 0, 0, 0};
};

// True iff the family has a printed closed phase (maps to one of S1..S8).
bool has_closed_phase(Family f);
// Index 1..8 of the printed phase integral for this family; 0 if none.
int closed_phase_index(Family f);
// True iff the printed closed phase reproduces the quadrature phase exactly
// (within 1e-8); used to choose the assembly phase.
bool closed_phase_is_exact(Family f);

// Printed closed phase S<index> evaluated at xi (throws DomainError when the
// family has no printed phase).
double closed_phase(const ProfileSpec& spec, const wavesystems::EquationParams& eq,
                    const wavesystems::Type2WaveParams& wave, double xi,
                    const PhaseConstants& c = {});

// Independent phase by adaptive quadrature of
//   varphi'(s) = e/(a m phi(s)^2) + c/(2 a m)  from xi_base to xi.
double quadrature_phase(const ProfileSpec& spec, const wavesystems::EquationParams& eq,
                        const wavesystems::Type2WaveParams& wave, double xi,
                        double xi_base);

// Default quadrature anchor: midpoint of the validity interval (1.0 for
// half-infinite domains).
double default_phase_base(const ProfileSpec& spec);

// --- assembly ---

// Type 1: q = p(xi) exp(i(kappa x + omega y - r t + theta)), xi = x + m y - c t.
std::complex<double> assemble_type1(const ProfileSpec& spec,
                                    const wavesystems::EquationParams& eq,
                                    const wavesystems::Type1WaveParams& wave, double x,
                                    double y, double t);

// Type 2: q = phi(xi) exp(i(varphi(xi) - mu t)). Uses the printed closed
// phase only when it verified exact; otherwise the quadrature phase anchored
// at default_phase_base.
std::complex<double> assemble_type2(const ProfileSpec& spec,
                                    const wavesystems::EquationParams& eq,
                                    const wavesystems::Type2WaveParams& wave, double x,
                                    double y, double t, const PhaseConstants& c = {});

// --- frozen demonstration sweep ---

// Synthetic physical embeddings with a = m = 1 realizing given coefficients.
void embed_type1(const wavesystems::SystemCoefficients& s, wavesystems::EquationParams& eq,
                 wavesystems::Type1WaveParams& wave);
void embed_type2(const wavesystems::AlphaCoefficients& al, wavesystems::EquationParams& eq,
                 wavesystems::Type2WaveParams& wave);

struct SweepEntry {
  Family family;
  ProfileSpec spec;
  wavesystems::EquationParams eq;
  wavesystems::Type1WaveParams wave1;  // valid when !is_type2(family)
  wavesystems::Type2WaveParams wave2;  // valid when is_type2(family)
};

// One entry per family at the documented fixed parameters (see README).
std::vector<SweepEntry> default_sweep();
SweepEntry default_sweep_entry(Family f);

}  // namespace gkmn::solutions
