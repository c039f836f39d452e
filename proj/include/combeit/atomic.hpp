#pragma once

#include <string>
#include <vector>

#include "combeit/types.hpp"

namespace combeit {

enum class Isotope { Rb85, Rb87 };
enum class Manifold { ground, excited };

std::string to_string(Isotope iso);
Isotope isotope_from_string(const std::string& s);

struct Level {
  std::string label;        // unique within a system, e.g. "5S1/2 F=2"
  double energy_offset_hz;  // relative to the manifold centroid, ordinary Hz
  Manifold manifold;
};

struct Transition {
  std::string lower;  // ground-manifold level label
  std::string upper;  // excited-manifold level label
  double dipole_cm;   // C*m, hyperfine-resolved
  double gamma_hz;    // optical coherence relaxation, ordinary Hz
};

// Immutable after construction; safe to share read-only across threads.
struct AtomicSystem {
  Isotope isotope = Isotope::Rb87;
  std::vector<Level> levels;
  std::vector<Transition> transitions;
  double number_density = 0.0;  // atoms / m^3
  double temperature = 0.0;     // K
  double mass_amu = 0.0;
  double wavelength_nm = 0.0;
  double natural_fraction = 0.0;
  double reduced_dipole_cm = 0.0;
  double ground_dephasing_hz = 0.0;  // default gamma_12 for chain solvers
  std::string chi3_dipole_convention = "reduced";

  const Level& level(const std::string& label) const;
  bool has_level(const std::string& label) const;
  const Transition& transition(const std::string& lower, const std::string& upper) const;
  const Transition* find_transition(const std::string& lower, const std::string& upper) const;
  // ordinary Hz, upper offset minus lower offset (manifold-relative)
  double transition_offset_hz(const Transition& t) const;
  double ground_splitting_hz() const;
  double most_probable_speed(double temperature_k) const;  // m/s
  void validate() const;  // throws std::invalid_argument on violation
};

// Rubidium vapor number density from the usual Clausius-Clapeyron style
// pressure fit (solid and liquid branches), scaled by the isotopic fraction.
// Valid for temperature in [250, 550] K; throws outside.
double number_density(Isotope iso, double temperature_k, double fraction);

AtomicSystem load_system(const std::string& path, double temperature_k);
void save_system(const AtomicSystem& sys, const std::string& path);

// Loads the packaged data file for the isotope. The data directory is taken
// from the COMBEIT_DATA_DIR environment variable when set, otherwise from
// the compiled-in default. Requires temperature in [273, 400] K.
AtomicSystem builtin_system(Isotope iso, double temperature_k);

std::string default_data_dir();

}  // namespace combeit
