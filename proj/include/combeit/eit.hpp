#pragma once

#include <functional>
#include <string>
#include <vector>

#include "combeit/atomic.hpp"
#include "combeit/comb.hpp"
#include "combeit/types.hpp"

namespace combeit {

// Sign conventions follow the steady-state coherence of a driven chain,
//   rho_13 = (Omega_a/2) / [(Delta_a - i*gamma_13) - (Omega_1^2/4)/(...)],
// i.e. every nested denominator is written as (d_k - i*gamma_k) with the
// cumulative multi-photon detunings d_1 = Delta_a, d_{k+1} = d_k -+ Delta_k
// (alternating, minus first). All quantities here are angular (rad/s).

struct FieldDrive {
  double rabi = 0.0;      // Omega, rad/s, >= 0
  double detuning = 0.0;  // Delta, rad/s
};

struct ChainLink {
  FieldDrive drive;
  double gamma = 0.0;  // relaxation of the coherence this link opens, rad/s
};

struct ChainSpec {
  FieldDrive probe;
  double probe_gamma = 0.0;  // gamma_13, rad/s
  std::vector<ChainLink> links;
  int n_levels = 2;  // must equal links.size() + 2

  void validate() const;
};

// Continued-fraction steady-state coherence of an N-level chain, evaluated
// from the deepest link outward. links.size() == 2 reproduces the four-level
// expression bit for bit.
Complex rho_chain(const ChainSpec& spec);

// Four-level coherence (rho_13)_4L for probe a and comb legs c (two-photon)
// and b (three-photon). gammas = (gamma_13, gamma_12, gamma_14), rad/s.
Complex rho13_four_level(const FieldDrive& probe, const FieldDrive& comb_b,
                         const FieldDrive& comb_c, double gamma13, double gamma12,
                         double gamma14);

struct LiouvillianDrive {
  std::string lower, upper;  // transition, must exist in the system
  FieldDrive field;
};

struct SteadyState {
  MatC rho;                        // density matrix over `basis`
  std::vector<std::string> basis;  // level labels, system order
  int index_of(const std::string& label) const;
};

// Full rotating-wave Lindblad steady state of the driven chain: solves
// L(rho) = 0 with tr(rho) = 1. The driven levels must form a loop-free
// pattern (chain/ladder); radiative decay is branched by dipole strength
// and renormalized within the driven subspace, and a pure-dephasing rate
// (system.ground_dephasing_hz) acts on every ground level except the chain
// root (the first drive's lower level). With no drives the ground-manifold
// thermal population matrix over the full system is returned.
SteadyState steady_state_liouvillian(const AtomicSystem& sys,
                                     const std::vector<LiouvillianDrive>& drives);

struct SusceptibilitySpectrum {
  VecD detunings_hz;  // two-photon detuning delta = Delta_c - Delta_a, ordinary Hz
  VecC chi;           // complex linear susceptibility at the probe
  double probe_one_photon_detuning_hz = 0.0;
};

struct SpectrumParams {
  std::string probe_lower;  // probe-coupled ground level label
  std::string probe_upper;  // probe-coupled excited level label (reference)
  double pair_window = 0.0;  // rad/s; 0 -> default 2 * (2*pi*repetition_rate)
  bool doppler = false;
  int doppler_order = 64;
};

// Weak-probe susceptibility chi(delta) over the scan grid. Contributions of
// every comb line pair forming a chain with the probe are summed on top of
// the bare multi-line absorption background. Comb line amplitudes are Rabi
// frequencies (rad/s) referred to the reduced dipole element; per-transition
// couplings scale by dipole_cm / reduced_dipole_cm.
SusceptibilitySpectrum susceptibility_spectrum(const AtomicSystem& sys, const CombSpectrum& comb,
                                               double probe_rabi, const VecD& scan_hz,
                                               const SpectrumParams& params);

// Transmission through a cell of length_m for the stored chi.
VecD transmission(const AtomicSystem& sys, const SusceptibilitySpectrum& s, double length_m);

// 1-D Maxwell-Boltzmann average over the line-of-sight velocity with
// Gauss-Hermite quadrature; co-propagating beams shift every one-photon
// detuning by k*v, which is what the wrapped function sees.
std::function<Complex(double)> doppler_average(std::function<Complex(double)> spectrum_fn,
                                               const AtomicSystem& sys, int order = 64);

// Gauss-Hermite nodes/weights for weight exp(-x^2) (Golub-Welsch).
void gauss_hermite(int order, VecD& nodes, VecD& weights);

struct LorentzianFit {
  double gamma = 0.0;   // rad-free: reported in the same units as the grid (Hz)
  double delta0 = 0.0;  // Hz
  double A = 0.0, B = 0.0, C = 0.0;
  double residual_rms = 0.0;
  bool converged = false;
};

// Least-squares fit of a(delta) = gamma*(A*gamma + B*(delta-delta0)) /
// (gamma^2 + (delta0-delta)^2 + C) to Im chi inside [window_lo, window_hi].
// The denominator offset C is not separately identifiable from gamma in a
// single window, so the fit is performed in the identifiable reduced basis
// and reported in the C = 0 gauge.
LorentzianFit fit_lorentzian(const SusceptibilitySpectrum& s, double window_lo_hz,
                             double window_hi_hz);

struct Peak {
  double position;  // grid units, parabolically refined
  double height;
  double width;  // full width at half prominence
};

// Local maxima above a prominence threshold; threshold < 0 selects the
// default 3x the RMS of the background-subtracted curve.
std::vector<Peak> find_peaks(const VecD& x, const VecD& y, double prominence = -1.0);

}  // namespace combeit
