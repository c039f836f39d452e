#include "combeit/chi3.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace combeit {

using constants::eps0;
using constants::hbar;
using constants::twopi;

Chi3Result chi3_four_level_analytic(const AtomicSystem& sys, double omega_c, double delta_b) {
  if (omega_c <= 0) throw std::invalid_argument("omega_c must be > 0");
  if (delta_b == 0) throw std::invalid_argument("delta_b = 0 is a singular configuration");
  const double mu2 = sys.reduced_dipole_cm * sys.reduced_dipole_cm;
  Chi3Result r;
  r.method = Chi3Method::analytic_4L;
  r.detuning_context_hz = delta_b / twopi;
  r.value = sys.number_density * mu2 * mu2 / (2.0 * eps0 * hbar * hbar * hbar) /
            (omega_c * omega_c * delta_b);
  return r;
}

namespace {

struct Legs {
  double omega_c = 0.0;               // rad/s
  std::vector<double> omega_b;        // rad/s
  std::vector<double> delta_b;        // rad/s
  double gamma13 = 0.0, gamma12 = 0.0, gamma14 = 0.0;
  double principal_delta_b = 0.0;     // leg nearest resonance, rad/s
  double principal_omega_b = 0.0;
};

// Re chi at the two-photon dark point with the b-leg intensities scaled by s.
double rechi_at_scale(const AtomicSystem& sys, const Transition& probe_t, double probe_rabi,
                      const Legs& legs, double s) {
  Complex mid(0.0, legs.gamma12);  // delta = 0
  for (size_t i = 0; i < legs.omega_b.size(); ++i) {
    const Complex d3(-legs.delta_b[i], legs.gamma14);
    mid -= s * (legs.omega_b[i] * legs.omega_b[i] / 4.0) / d3;
  }
  const Complex den = Complex(0.0, -legs.gamma13) + (legs.omega_c * legs.omega_c / 4.0) / mid;
  const Complex rho = (probe_rabi / 2.0) / den;
  const double pref =
      2.0 * sys.number_density * probe_t.dipole_cm * probe_t.dipole_cm / (eps0 * hbar * probe_rabi);
  return (pref * rho).real();
}

// bare two-level Re chi with saturation, for the zero-comb path
double rechi_two_level(const AtomicSystem& sys, const Transition& t, double omega_a,
                       double delta) {
  const double g = twopi * t.gamma_hz;
  const double denom = delta * delta + g * g + omega_a * omega_a / 2.0;
  const double mu2 = t.dipole_cm * t.dipole_cm;
  return sys.number_density * mu2 * delta / (eps0 * hbar * denom);
}

// first derivative at s0 from the 5-point central stencil with step h
template <class F>
double deriv5(F f, double s0, double h) {
  return (f(s0 - 2 * h) - 8 * f(s0 - h) + 8 * f(s0 + h) - f(s0 + 2 * h)) / (12 * h);
}

}  // namespace

Chi3Result chi3_numeric(const AtomicSystem& sys, const CombSpectrum& comb,
                        const FieldDrive& probe, const Chi3NumericConfig& cfg) {
  sys.validate();
  if (probe.rabi <= 0) throw std::invalid_argument("probe rabi must be > 0");

  const Transition& ta = sys.transition(cfg.probe_lower, cfg.probe_upper);
  Chi3Result r;
  r.method = Chi3Method::numeric_finite_difference;
  const double mu_conv = sys.reduced_dipole_cm;

  double total_amp = 0.0;
  for (const auto& ln : comb.lines) total_amp += std::abs(ln.amplitude);

  if (comb.lines.empty() || total_amp == 0.0) {
    // bare two-level self-Kerr of the probe: differentiate Re chi with
    // respect to the probe intensity at the probe detuning
    const double delta = probe.detuning != 0 ? probe.detuning : twopi * ta.gamma_hz * 10.0;
    auto f = [&](double s) {
      const double om = probe.rabi * std::sqrt(s);
      return rechi_two_level(sys, ta, om, delta);
    };
    double s0 = 1.0;
    double slope = deriv5(f, s0, s0 / 4.0);
    for (int it = 0; it < 60; ++it) {
      const double half = deriv5(f, s0 / 2.0, s0 / 8.0);
      if (std::abs(half - slope) <= 0.005 * std::abs(half)) {
        slope = half;
        break;
      }
      s0 /= 2.0;
      slope = half;
    }
    // slope = d(Re chi)/ds with Omega^2 = s * rabi^2, E^2 = (hbar/mu)^2 Omega^2
    const double mu = ta.dipole_cm;
    r.value = 0.5 * slope * (mu / hbar) * (mu / hbar) / (probe.rabi * probe.rabi);
    r.detuning_context_hz = delta / twopi;
    r.perturbative_ok = true;
    return r;
  }

  comb.validate();
  const double window =
      cfg.pair_window > 0 ? cfg.pair_window : 2.0 * twopi * comb.repetition_rate;
  const double f_d2 = constants::clight / (sys.wavelength_nm * 1e-9);

  Legs legs;
  legs.gamma13 = twopi * ta.gamma_hz;
  legs.gamma12 = twopi * cfg.ground_dephasing_hz;

  // Lambda leg: comb ground level sharing the probe's upper level
  std::string comb_lower;
  for (const auto& t : sys.transitions)
    if (t.upper == cfg.probe_upper && t.lower != cfg.probe_lower) comb_lower = t.lower;
  if (comb_lower.empty())
    throw std::invalid_argument("no comb-coupled ground level shares the probe upper level");
  const Transition& tc = sys.transition(comb_lower, cfg.probe_upper);
  const double f_c = f_d2 + sys.transition_offset_hz(tc);
  double best = std::numeric_limits<double>::max();
  for (const auto& ln : comb.lines) {
    const double d = std::abs(ln.frequency - f_c);
    if (d < best) {
      best = d;
      legs.omega_c = std::abs(ln.amplitude) * tc.dipole_cm / mu_conv;
    }
  }
  if (legs.omega_c <= 0) throw std::invalid_argument("comb has no amplitude on the Lambda leg");

  // three-photon legs
  const double rep_ang = twopi * comb.repetition_rate;
  if (std::isfinite(cfg.target_delta_b)) {
    // aliased ladder at the requested principal detuning, uniform amplitude
    double amp = 0.0;
    int cnt = 0;
    for (const auto& ln : comb.lines) {
      amp += std::abs(ln.amplitude);
      ++cnt;
    }
    amp /= cnt;
    const int kmax = static_cast<int>(std::floor((window + std::abs(cfg.target_delta_b)) / rep_ang)) + 1;
    for (int k = -kmax; k <= kmax; ++k) {
      const double db = cfg.target_delta_b + k * rep_ang;
      if (db == 0.0 || std::abs(db) > window) continue;
      legs.omega_b.push_back(amp);
      legs.delta_b.push_back(db);
    }
    legs.gamma14 = twopi * ta.gamma_hz;
  } else {
    for (const auto& tb : sys.transitions) {
      if (tb.lower != comb_lower || tb.upper == cfg.probe_upper) continue;
      const double f_b = f_d2 + sys.transition_offset_hz(tb);
      for (const auto& ln : comb.lines) {
        const double db = twopi * (ln.frequency - f_b);
        if (std::abs(db) > window || db == 0.0) continue;
        const double om = std::abs(ln.amplitude) * tb.dipole_cm / mu_conv;
        if (om == 0.0) continue;
        legs.omega_b.push_back(om);
        legs.delta_b.push_back(db);
        legs.gamma14 = twopi * tb.gamma_hz;
      }
    }
  }
  if (legs.omega_b.empty())
    throw std::invalid_argument("comb provides no three-photon leg within the pair window");

  double bestd = std::numeric_limits<double>::max();
  for (size_t i = 0; i < legs.omega_b.size(); ++i)
    if (std::abs(legs.delta_b[i]) < bestd) {
      bestd = std::abs(legs.delta_b[i]);
      legs.principal_delta_b = legs.delta_b[i];
      legs.principal_omega_b = legs.omega_b[i];
    }

  auto f = [&](double s) { return rechi_at_scale(sys, ta, probe.rabi, legs, s); };

  // adaptive step: shrink until the secant slope is step-independent, which
  // bounds the fifth-order contamination at the percent level
  double s0 = 0.25;
  double slope = (f(s0) - f(0.0)) / s0;
  for (int it = 0; it < 60; ++it) {
    const double half = (f(s0 / 2.0) - f(0.0)) / (s0 / 2.0);
    if (std::abs(half - slope) <= 0.0025 * std::abs(half) && it > 0) break;
    s0 /= 2.0;
    slope = half;
  }
  const double d = deriv5(f, s0, s0 / 4.0);

  // chi3 = (1/2) d(Re chi)/d(E_b^2), referenced to the principal leg:
  // E_b^2 = (hbar/mu)^2 * s * Omega_b0^2 at the recorded dipole convention
  const double ob2 = legs.principal_omega_b * legs.principal_omega_b;
  r.value = 0.5 * d * (mu_conv / hbar) * (mu_conv / hbar) / ob2;
  r.detuning_context_hz = legs.principal_delta_b / twopi;

  const double g13 = legs.gamma13;
  const double g12 = legs.gamma12 > 0 ? legs.gamma12 : 1e-12;
  r.perturbative_ok = (legs.omega_c * legs.omega_c > 200.0 * g12 * g13) &&
                      (probe.rabi < 0.1 * legs.omega_c);
  return r;
}

void KerrGeometry::validate() const {
  if (wavelength <= 0 || interaction_length <= 0 || mode_area <= 0 || interaction_time <= 0 ||
      refractive_index <= 0)
    throw std::invalid_argument("KerrGeometry fields must all be positive");
}

double chi3_to_kerr_rate(const Chi3Result& chi3, const KerrGeometry& geom) {
  geom.validate();
  const double omega = twopi * constants::clight / geom.wavelength;
  const double n2 = geom.refractive_index * geom.refractive_index;
  return 3.0 * hbar * omega * omega * chi3.value * geom.interaction_time /
         (4.0 * eps0 * n2 * geom.mode_area * geom.interaction_length);
}

double single_photon_phase_shift(const Chi3Result& chi3, const KerrGeometry& geom) {
  return 2.0 * chi3_to_kerr_rate(chi3, geom);
}

}  // namespace combeit
