#pragma once

#include <string>

#include "combeit/atomic.hpp"
#include "combeit/comb.hpp"
#include "combeit/eit.hpp"
#include "combeit/types.hpp"

namespace combeit {

enum class Chi3Method { analytic_4L, numeric_finite_difference };

struct Chi3Result {
  double value = 0.0;  // m^2 V^-2
  Chi3Method method = Chi3Method::analytic_4L;
  double detuning_context_hz = 0.0;  // three-photon leg detuning Delta_b / 2pi
  bool perturbative_ok = true;       // false flags a regime violation
};

// Cross-Kerr convention: chi3 is the coefficient in
// delta[Re chi_probe] = 2 * chi3 * |E_pump|^2. Both dipole matrix elements
// follow the system's recorded chi3_dipole_convention (reduced element).

// Re[chi3] of the ideal four-level ladder,
//   N |mu13|^2 |mu24|^2 / (2 eps0 hbar^3) * 1 / (Omega_c^2 Delta_b),
// with Omega_c, Delta_b angular (rad/s). Delta_b = 0 is singular.
Chi3Result chi3_four_level_analytic(const AtomicSystem& sys, double omega_c, double delta_b);

struct Chi3NumericConfig {
  std::string probe_lower;  // probe transition
  std::string probe_upper;
  // ideal ground coherence: the Taylor expansion behind the analytic form
  // assumes a fully developed transparency, so the numeric path defaults to
  // negligible ground dephasing rather than the warm-vapor value
  double ground_dephasing_hz = 1e-3;
  double pair_window = 0.0;  // rad/s; 0 -> 2 * (2 pi rep)
  // when finite, the three-photon legs are taken at detunings
  // target_delta_b + k * 2pi*rep (the comb's aliased ladder) instead of the
  // atomic splitting geometry; this is the sweep knob of the chi3 command
  double target_delta_b = std::numeric_limits<double>::quiet_NaN();
};

// Extracts Re[chi3] by 5-point central finite differences of Re chi with
// respect to the three-photon-leg intensity, with the step shrunk until the
// cubic term dominates the next order by >= 100x. With a zero-amplitude comb
// the probe's own saturation is differentiated instead (bare two-level Kerr).
Chi3Result chi3_numeric(const AtomicSystem& sys, const CombSpectrum& comb,
                        const FieldDrive& probe, const Chi3NumericConfig& cfg);

struct KerrGeometry {
  double wavelength = 780.241e-9;       // m
  double interaction_length = 0.075;    // m
  double mode_area = 4.3e-4;            // m^2, effective collimated-beam area
  double interaction_time = 2.5017e-10; // s, cell light-transit by default
  double refractive_index = 1.0;

  void validate() const;
};

// Single-mode Kerr phase per photon-number-squared per pass:
//   kappa = 3 hbar w^2 Re[chi3] t / (4 eps0 n^2 A L)   [dimensionless]
double chi3_to_kerr_rate(const Chi3Result& chi3, const KerrGeometry& geom);

// Cross-phase shift from a single pump photon, phi = 2 kappa (cross-Kerr is
// twice self-Kerr in the standard convention).
double single_photon_phase_shift(const Chi3Result& chi3, const KerrGeometry& geom);

}  // namespace combeit
