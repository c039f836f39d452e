#pragma once

#include "combeit/types.hpp"

namespace combeit {

// Quadrature convention used everywhere: x = (a + a^dag)/sqrt(2),
// p = (a - a^dag)/(i sqrt(2)), so [x, p] = i, the vacuum variance is 1/2
// and Wigner functions integrate to 1 over dx dp.

struct QuantumState {
  int dim = 0;
  MatC rho;

  // Hermiticity within 1e-12, unit trace within 1e-9, eigenvalues >= -1e-9
  // (check_psd), and < 1e-6 population in the top 10% of Fock levels.
  void validate(bool check_psd = true) const;

  Complex mean_a() const;       // <a>
  Complex mean_a2() const;      // <a^2>
  double mean_n() const;        // <n>
  double top_tail_population() const;
};

struct WignerGrid {
  VecD x_axis, p_axis;
  MatD values;  // values(i, j) = W(x_axis[i], p_axis[j])

  double cell_area() const;
  double integral() const;
};

QuantumState coherent_state(Complex alpha, int dim);

// Squeezed vacuum with variance e^{-2r}/2 along the angle phi/2 quadrature.
QuantumState squeezed_vacuum(double r, double phi, int dim);

// U rho U^dag with U_nn = exp(i kappa n^2); photon statistics unchanged.
QuantumState kerr_evolve(const QuantumState& state, double kappa);

// Beam-splitter loss with a vacuum ancilla (Kraus form), <n> -> eta <n>.
QuantumState loss_channel(const QuantumState& state, double eta);

// Fock-basis evaluation through the displaced-parity Laguerre series;
// log-space prefactors keep the terms representable at high dimension.
WignerGrid wigner(const QuantumState& state, const VecD& x_axis, const VecD& p_axis);

// Uniform grid covering the state's displacement plus `sigmas` vacuum
// standard deviations on each side.
VecD wigner_axis(const QuantumState& state, int points = 129, double sigmas = 5.0);

struct Squeezing {
  double level_db = 0.0;  // -10 log10(Vmin / (1/2)); positive = below vacuum
  double angle = 0.0;     // quadrature angle of the minimum variance
};

Squeezing squeezing_db(const QuantumState& state);

struct Negativity {
  double min_value = 0.0;
  double negative_volume = 0.0;  // integral of max(-W, 0)
};

Negativity negativity(const WignerGrid& w);

}  // namespace combeit
