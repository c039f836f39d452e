#include "combeit/comb.hpp"

#include <cmath>
#include <stdexcept>

namespace combeit {

void CombSpectrum::validate() const {
  if (repetition_rate <= 0) throw std::invalid_argument("repetition_rate must be > 0");
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!std::isfinite(lines[i].amplitude.real()) || !std::isfinite(lines[i].amplitude.imag()))
      throw std::invalid_argument("comb amplitudes must be finite");
    if (i > 0) {
      const double step = lines[i].frequency - lines[i - 1].frequency;
      if (std::abs(step - repetition_rate) > 1e-6 * repetition_rate)
        throw std::invalid_argument("comb lines must form an arithmetic sequence at the repetition rate");
    }
  }
}

CombSpectrum make_comb(double repetition_rate_hz, double center_hz, double span_hz,
                       CombEnvelope envelope, double line_amplitude) {
  if (span_hz < repetition_rate_hz)
    throw std::invalid_argument("span must be at least one repetition rate");
  CombSpectrum comb;
  comb.repetition_rate = repetition_rate_hz;
  comb.center_frequency = center_hz;
  const int n = static_cast<int>(std::floor(span_hz / repetition_rate_hz)) + 1;
  comb.lines.reserve(n);
  const double sigma = span_hz / 6.0;
  for (int i = 0; i < n; ++i) {
    const double f = center_hz + (i - (n - 1) / 2.0) * repetition_rate_hz;
    double a = line_amplitude;
    if (envelope == CombEnvelope::gaussian) {
      const double u = (f - center_hz) / sigma;
      a *= std::exp(-0.5 * u * u);
    }
    comb.lines.push_back({f, Complex(a, 0.0)});
  }
  return comb;
}

CombSpectrum apply_phase_mask(const CombSpectrum& comb, const PhaseMask& mask) {
  if (mask.width <= 0) throw std::invalid_argument("mask width must be > 0");
  CombSpectrum out = comb;
  if (mask.phase == 0.0) return out;  // exact identity
  const Complex rot = std::polar(1.0, mask.phase);
  for (auto& ln : out.lines)
    if (std::abs(ln.frequency - mask.center) <= mask.width / 2.0) ln.amplitude *= rot;
  return out;
}

namespace {

// Transition amplitude of the model documented in the header. The comb
// enters twice (two-photon pair term, sum-frequency pairs symmetric about
// the resonance) plus once (one-photon term with the +-pi/2 weights); the
// one-photon admixture is scaled by pair_mix times the reference rms
// amplitude so the enhancement ratio is invariant under overall comb power.
Complex transition_amplitude(const CombSpectrum& comb, double resonance_hz,
                             const EnhancementModel& model, double rms_ref) {
  const double g = model.gamma_eff;
  const double rep = comb.repetition_rate;
  const int n = static_cast<int>(comb.lines.size());

  // two-photon pairs: f_j + f_k = 2*resonance within half a line spacing
  Complex pair_sum(0, 0);
  const double target = 2.0 * resonance_hz;
  for (int j = 0; j < n; ++j) {
    const double fj = comb.lines[j].frequency;
    const double fk = target - fj;
    const int k = static_cast<int>(std::lround((fk - comb.lines[0].frequency) / rep));
    if (k < j || k >= n) continue;  // each unordered pair once
    if (std::abs(comb.lines[k].frequency - fk) > rep / 2.0) continue;
    const double dj = fj - resonance_hz;
    const double dk = comb.lines[k].frequency - resonance_hz;
    const double w = g / (g * g + dj * dj) + g / (g * g + dk * dk);
    pair_sum += comb.lines[j].amplitude * comb.lines[k].amplitude * w;
  }

  // one-photon sum with the asymptotic +-pi/2 weights
  Complex single_sum(0, 0);
  for (int j = 0; j < n; ++j) {
    const double d = comb.lines[j].frequency - resonance_hz;
    Complex w;
    if (std::abs(d) <= g)
      w = Complex(1.0 / g, 0.0);
    else
      w = Complex(0.0, (d > 0 ? 1.0 : -1.0) / std::abs(d));
    single_sum += comb.lines[j].amplitude * w;
  }

  return Complex(0, 1) * pair_sum + Complex(0, 1) * model.pair_mix * rms_ref * single_sum;
}

}  // namespace

double enhancement_factor(const CombSpectrum& comb, const CombSpectrum& masked,
                          double resonance_hz, const EnhancementModel& model) {
  comb.validate();
  masked.validate();
  if (comb.lines.size() != masked.lines.size())
    throw std::invalid_argument("combs do not share a line grid");
  for (size_t i = 0; i < comb.lines.size(); ++i)
    if (std::abs(comb.lines[i].frequency - masked.lines[i].frequency) >
        1e-6 * comb.repetition_rate)
      throw std::invalid_argument("combs do not share a line grid");

  double rms = 0.0;
  for (const auto& ln : comb.lines) rms += std::norm(ln.amplitude);
  rms = std::sqrt(rms / comb.lines.size());

  const Complex s_ref = transition_amplitude(comb, resonance_hz, model, rms);
  const Complex s_mask = transition_amplitude(masked, resonance_hz, model, rms);
  const double ref = std::norm(s_ref);
  if (ref <= 0.0)
    throw std::runtime_error("degenerate comb: zero unmasked transition amplitude");
  return std::norm(s_mask) / ref;
}

}  // namespace combeit
