#include <cstdio>
#include "combeit/atomic.hpp"
#include "combeit/eit.hpp"
#include "combeit/fock.hpp"
#include "combeit/chi3.hpp"

using namespace combeit;

int main() {
  // atomic
  auto sys = builtin_system(Isotope::Rb87, 333.15);
  printf("N(Rb87,333.15) = %.6e\n", sys.number_density);
  printf("ground splitting = %.6f GHz\n", sys.ground_splitting_hz() / 1e9);
  printf("F'1-F'2 = %.4f MHz\n",
         (sys.level("5P3/2 F'=2").energy_offset_hz - sys.level("5P3/2 F'=1").energy_offset_hz) / 1e6);

  // chain vs literal Eq form
  const double tp = constants::twopi;
  FieldDrive probe{tp * 0.1e6, 0.0}, cb{tp * 5e6, tp * 157e6}, cc{tp * 5e6, 0.0};
  Complex r4 = rho13_four_level(probe, cb, cc, tp * 3e6, tp * 0.05e6, tp * 3e6);
  // literal transcription
  Complex lit = (probe.rabi / 2.0) /
      (Complex(probe.detuning, -tp * 3e6) +
       (cc.rabi * cc.rabi / 4.0) /
           (Complex(cc.detuning - probe.detuning, tp * 0.05e6) -
            (cb.rabi * cb.rabi / 4.0) /
                Complex(cc.detuning - probe.detuning - cb.detuning, tp * 3e6)));
  printf("rho_chain = %.15e %+.15e i\n", r4.real(), r4.imag());
  printf("literal   = %.15e %+.15e i  reldiff=%.2e\n", lit.real(), lit.imag(),
         std::abs(r4 - lit) / std::abs(lit));

  // Liouvillian oracle on a synthetic 4-level chain
  AtomicSystem s4;
  s4.isotope = Isotope::Rb87; s4.number_density = 1e17; s4.temperature = 333.15;
  s4.mass_amu = 87; s4.wavelength_nm = 780; s4.natural_fraction = 1; s4.reduced_dipole_cm = 3.6e-29;
  s4.ground_dephasing_hz = 0.05e6;
  s4.levels = {{"g1", -3e9, Manifold::ground}, {"g2", 3e9, Manifold::ground},
               {"e1", -1e8, Manifold::excited}, {"e2", 1e8, Manifold::excited}};
  s4.transitions = {{"g1", "e1", 2e-29, 3e6}, {"g2", "e1", 2e-29, 3e6}, {"g2", "e2", 2e-29, 3e6}};
  std::vector<LiouvillianDrive> drives = {
      {"g1", "e1", {tp * 0.1e6, 0.0}},       // probe
      {"g2", "e1", {tp * 5e6, 0.0}},         // c
      {"g2", "e2", {tp * 5e6, tp * 157e6}},  // b
  };
  auto ss = steady_state_liouvillian(s4, drives);
  Complex rl = ss.rho(ss.index_of("g1"), ss.index_of("e1"));
  printf("liouv rho_13 = %.6e %+.6e i\n", rl.real(), rl.imag());
  printf("CF    rho_13 = %.6e %+.6e i  reldiff=%.3f%%\n", r4.real(), r4.imag(),
         100.0 * std::abs(rl - r4) / std::abs(r4));

  // fock basics
  auto vac = coherent_state(0.0, 16);
  VecD ax = VecD::LinSpaced(81, -4, 4);
  auto w = wigner(vac, ax, ax);
  printf("vac W(0,0) = %.8f (1/pi = %.8f), integral = %.6f\n", w.values(40, 40), 1.0 / M_PI, w.integral());

  QuantumState one; one.dim = 16; one.rho = MatC::Zero(16, 16); one.rho(1, 1) = 1;
  VecD ax1 = VecD::LinSpaced(101, -5.5, 5.5);
  auto w1 = wigner(one, ax1, ax1);
  printf("fock1 W(0,0) = %.8f (-1/pi = %.8f)\n", w1.values(40, 40), -1.0 / M_PI);

  auto coh = coherent_state(Complex(1.0, 0.5), 32);
  VecD ax2 = VecD::LinSpaced(101, -6, 6);
  auto wc = wigner(coh, ax2, ax2);
  int bi = 0, bj = 0; double bv = -1;
  for (int i = 0; i < 101; ++i) for (int j = 0; j < 101; ++j)
    if (wc.values(i, j) > bv) { bv = wc.values(i, j); bi = i; bj = j; }
  printf("coherent peak at x=%.3f p=%.3f (expect %.3f, %.3f)\n",
         ax2[bi], ax2[bj], sqrt(2.0) * 1.0, sqrt(2.0) * 0.5);

  auto k = kerr_evolve(coherent_state(3.0, 48), 0.02);
  auto wk = wigner(k, wigner_axis(k), wigner_axis(k));
  auto neg = negativity(wk);
  printf("banana(3,0.02): Wmin = %.6f  negvol = %.6f\n", neg.min_value, neg.negative_volume);
  auto sq = squeezing_db(k);
  printf("banana squeezing = %.4f dB\n", sq.level_db);

  // chi3 analytic at the 470 point
  auto c3 = chi3_four_level_analytic(sys, 4.1e6, tp * 470e6);
  printf("chi3(470) = %.4e\n", c3.value);
  return 0;
}
