#pragma once

#include <vector>

#include "combeit/types.hpp"

namespace combeit {

struct CombLine {
  double frequency;   // absolute optical frequency, Hz
  Complex amplitude;  // Rabi-equivalent at the reduced dipole element, rad/s
};

struct CombSpectrum {
  double repetition_rate = 0.0;   // Hz
  double center_frequency = 0.0;  // Hz
  std::vector<CombLine> lines;    // ascending frequency, arithmetic grid

  void validate() const;
};

struct PhaseMask {
  double center = 0.0;  // Hz
  double width = 0.0;   // Hz, > 0
  double phase = 0.0;   // radians
};

enum class CombEnvelope { flat, gaussian };

// floor(span/rep)+1 lines centred on `center`; flat envelope gives every
// line the same real amplitude, gaussian uses sigma = span/6.
CombSpectrum make_comb(double repetition_rate_hz, double center_hz, double span_hz,
                       CombEnvelope envelope, double line_amplitude = 1.0);

// Lines with |f - mask.center| <= width/2 (closed interval, a line exactly
// on the edge is masked) are multiplied by exp(i*phase).
CombSpectrum apply_phase_mask(const CombSpectrum& comb, const PhaseMask& mask);

struct EnhancementModel {
  double gamma_eff = 30.0e6;  // Hz, resonant-band effective width
  double pair_mix = 0.01;     // one-photon admixture relative to the pair term
};

// Nonlinearity enhancement factor |S(masked)|^2 / |S(unmasked)|^2 for the
// interfering-transition-amplitude model. S combines the two-photon pair
// amplitude (lines symmetrically detuned about the resonance, Lorentzian
// intermediate-state weight of width gamma_eff) with a one-photon sum whose
// weights are e^{+i pi/2}/|Delta| above resonance, e^{-i pi/2}/|Delta|
// below, and 1/gamma_eff (real) inside the resonant band. The amplitude law
// is deliberately isolated here so it can be swapped.
double enhancement_factor(const CombSpectrum& comb, const CombSpectrum& masked,
                          double resonance_hz, const EnhancementModel& model = {});

}  // namespace combeit
