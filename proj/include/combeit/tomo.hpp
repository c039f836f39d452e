#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combeit/fock.hpp"
#include "combeit/types.hpp"

namespace combeit {

struct QuadratureDataset {
  VecD phases;               // radians, within [0, 2*pi), one entry per group
  std::vector<VecD> samples; // samples[i] measured at phases[i]
  std::uint64_t seed = 0;
  double efficiency = 1.0;   // in (0, 1]

  void validate() const;
  std::size_t total_samples() const;
  int phase_index(double phase) const;  // -1 if absent
};

struct QuadraturePdf {
  VecD x;
  VecD density;

  double mean() const;
  double variance() const;
};

// <x_theta| rho |x_theta> by Hermite-function expansion; nonnegative and
// normalized to 1 on a sufficiently wide grid.
QuadraturePdf quadrature_pdf(const QuantumState& state, double theta, const VecD& x_grid);
QuadraturePdf quadrature_pdf(const QuantumState& state, double theta);

// Inverse-CDF sampling from quadrature_pdf at each phase. Detection
// efficiency acts as a beam-splitter loss channel applied before sampling.
// Per-phase RNG streams are derived from the master seed with a splitmix64
// step indexed by the phase position, so phases can be drawn independently
// and the result is reproducible bit for bit.
QuadratureDataset sample_homodyne(const QuantumState& state, const std::vector<double>& phases,
                                  int n_per_phase, std::uint64_t seed, double efficiency = 1.0);

struct RadonResult {
  WignerGrid w;
  double normalization = 1.0;  // factor applied so the output integrates to 1
};

// Filtered back-projection of the empirical quadrature measure with a ramp
// filter apodized by a raised-cosine (Tukey) taper above `flat_fraction` of
// the cutoff. Requires >= 12 distinct phases modulo pi and >= 1000 samples
// per phase.
RadonResult inverse_radon(const QuadratureDataset& data, const VecD& x_axis, const VecD& p_axis,
                          double cutoff, double flat_fraction = 0.6);

// Default angular cutoff in quadrature-frequency units. The naive choice of
// a few inverse vacuum widths truncates so much of a Gaussian's spectrum
// that even the vacuum reconstructs with >20% peak error; 7.0 keeps the
// truncation bias of vacuum-width features below one percent.
inline constexpr double kDefaultRadonCutoff = 7.0;

struct Histogram {
  VecD edges;   // bins+1 uniform edges over the data range
  VecD counts;  // size bins
};

Histogram histogram(const QuadratureDataset& data, double phase, int bins);

struct ReconstructionError {
  double l_inf = 0.0;
  double l2 = 0.0;
  double fidelity_proxy = 0.0;  // normalized overlap integral
};

ReconstructionError reconstruction_error(const WignerGrid& w_est, const WignerGrid& w_ref);

// Dataset file: '#meta seed=<n> efficiency=<v>' comment line, then CSV with
// header phase_rad,quadrature.
void save_dataset(const QuadratureDataset& data, const std::string& path);
QuadratureDataset load_dataset(const std::string& path);

}  // namespace combeit
