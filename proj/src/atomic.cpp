#include "combeit/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "combeit/csvio.hpp"

namespace combeit {

std::string to_string(Isotope iso) { return iso == Isotope::Rb85 ? "Rb85" : "Rb87"; }

Isotope isotope_from_string(const std::string& s) {
  if (s == "Rb85") return Isotope::Rb85;
  if (s == "Rb87") return Isotope::Rb87;
  throw std::invalid_argument("unsupported isotope: " + s);
}

const Level& AtomicSystem::level(const std::string& label) const {
  for (const auto& l : levels)
    if (l.label == label) return l;
  throw std::invalid_argument("unknown level label: " + label);
}

bool AtomicSystem::has_level(const std::string& label) const {
  return std::any_of(levels.begin(), levels.end(),
                     [&](const Level& l) { return l.label == label; });
}

const Transition* AtomicSystem::find_transition(const std::string& lower,
                                                const std::string& upper) const {
  for (const auto& t : transitions)
    if (t.lower == lower && t.upper == upper) return &t;
  return nullptr;
}

const Transition& AtomicSystem::transition(const std::string& lower,
                                           const std::string& upper) const {
  const Transition* t = find_transition(lower, upper);
  if (!t) throw std::invalid_argument("unknown transition: " + lower + " -> " + upper);
  return *t;
}

double AtomicSystem::transition_offset_hz(const Transition& t) const {
  return level(t.upper).energy_offset_hz - level(t.lower).energy_offset_hz;
}

double AtomicSystem::ground_splitting_hz() const {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& l : levels) {
    if (l.manifold != Manifold::ground) continue;
    if (first) {
      lo = hi = l.energy_offset_hz;
      first = false;
    } else {
      lo = std::min(lo, l.energy_offset_hz);
      hi = std::max(hi, l.energy_offset_hz);
    }
  }
  if (first) throw std::invalid_argument("system has no ground levels");
  return hi - lo;
}

double AtomicSystem::most_probable_speed(double temperature_k) const {
  return std::sqrt(2.0 * constants::kboltzmann * temperature_k / (mass_amu * constants::amu));
}

void AtomicSystem::validate() const {
  if (number_density <= 0) throw std::invalid_argument("number_density must be > 0");
  if (temperature <= 0) throw std::invalid_argument("temperature must be > 0");
  std::set<std::string> seen;
  for (const auto& l : levels)
    if (!seen.insert(l.label).second)
      throw std::invalid_argument("duplicate level label: " + l.label);
  // strictly increasing energies within each manifold, file order
  for (Manifold m : {Manifold::ground, Manifold::excited}) {
    double prev = -1e300;
    for (const auto& l : levels) {
      if (l.manifold != m) continue;
      if (l.energy_offset_hz <= prev)
        throw std::invalid_argument("level energies not strictly increasing: " + l.label);
      prev = l.energy_offset_hz;
    }
  }
  if (ground_splitting_hz() <= 0)
    throw std::invalid_argument("ground hyperfine splitting must be > 0");
  for (const auto& t : transitions) {
    if (level(t.lower).manifold != Manifold::ground)
      throw std::invalid_argument("transition lower level not in ground manifold: " + t.lower);
    if (level(t.upper).manifold != Manifold::excited)
      throw std::invalid_argument("transition upper level not in excited manifold: " + t.upper);
    if (t.dipole_cm <= 0) throw std::invalid_argument("dipole moment must be > 0");
    if (t.gamma_hz <= 0) throw std::invalid_argument("relaxation rate must be > 0");
  }
}

double number_density(Isotope iso, double temperature_k, double fraction) {
  (void)iso;  // both isotopes share the elemental vapor-pressure curve
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("fraction must be in (0, 1]");
  if (temperature_k < 250.0 || temperature_k > 550.0)
    throw std::invalid_argument("temperature outside vapor-pressure model validity [250, 550] K");
  // log10(P/torr), solid branch below the 312.46 K melting point
  const double lg = (temperature_k < 312.46)
                        ? 2.881 + 4.857 - 4215.0 / temperature_k
                        : 2.881 + 4.312 - 4040.0 / temperature_k;
  const double pascal = std::pow(10.0, lg) * 133.322387415;
  return fraction * pascal / (constants::kboltzmann * temperature_k);
}

namespace {

struct Section {
  std::string name;
  std::map<std::string, std::string> kv;
  int first_line = 0;
};

std::vector<Section> parse_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open atomic data file: " + path);
  std::vector<Section> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed section header");
      out.push_back({strip(line.substr(1, line.size() - 2)), {}, lineno});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos || out.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (!out.back().kv.emplace(key, val).second)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate key " + key);
  }
  return out;
}

double want_num(const Section& s, const std::string& key, const std::string& path) {
  auto it = s.kv.find(key);
  if (it == s.kv.end())
    throw std::runtime_error(path + ": section [" + s.name + "] missing key " + key);
  size_t pos = 0;
  double v = std::stod(it->second, &pos);
  if (pos != it->second.size())
    throw std::runtime_error(path + ": bad numeric value for " + key + ": " + it->second);
  return v;
}

std::string want_str(const Section& s, const std::string& key, const std::string& path) {
  auto it = s.kv.find(key);
  if (it == s.kv.end())
    throw std::runtime_error(path + ": section [" + s.name + "] missing key " + key);
  return it->second;
}

}  // namespace

AtomicSystem load_system(const std::string& path, double temperature_k) {
  AtomicSystem sys;
  bool have_system = false;
  for (const auto& s : parse_sections(path)) {
    if (s.name == "system") {
      have_system = true;
      sys.isotope = isotope_from_string(want_str(s, "isotope", path));
      sys.mass_amu = want_num(s, "mass_amu", path);
      sys.wavelength_nm = want_num(s, "wavelength_nm", path);
      sys.natural_fraction = want_num(s, "natural_fraction", path);
      sys.reduced_dipole_cm = want_num(s, "reduced_dipole_cm", path);
      sys.ground_dephasing_hz = want_num(s, "ground_dephasing_hz", path);
      sys.chi3_dipole_convention = want_str(s, "chi3_dipole_convention", path);
    } else if (s.name == "level") {
      Level l;
      l.label = want_str(s, "label", path);
      l.energy_offset_hz = want_num(s, "energy_offset_hz", path);
      std::string m = want_str(s, "manifold", path);
      if (m == "ground") l.manifold = Manifold::ground;
      else if (m == "excited") l.manifold = Manifold::excited;
      else throw std::runtime_error(path + ": bad manifold " + m);
      sys.levels.push_back(l);
    } else if (s.name == "transition") {
      Transition t;
      t.lower = want_str(s, "lower", path);
      t.upper = want_str(s, "upper", path);
      t.dipole_cm = want_num(s, "dipole_cm", path);
      t.gamma_hz = want_num(s, "gamma_hz", path);
      sys.transitions.push_back(t);
    } else {
      throw std::runtime_error(path + ": unknown section [" + s.name + "]");
    }
  }
  if (!have_system) throw std::runtime_error(path + ": missing [system] section");
  sys.temperature = temperature_k;
  sys.number_density = number_density(sys.isotope, temperature_k, sys.natural_fraction);
  sys.validate();
  return sys;
}

void save_system(const AtomicSystem& sys, const std::string& path) {
  std::ostringstream os;
  os << "[system]\n";
  os << "isotope = " << to_string(sys.isotope) << "\n";
  os << "mass_amu = " << fmt17(sys.mass_amu) << "\n";
  os << "wavelength_nm = " << fmt17(sys.wavelength_nm) << "\n";
  os << "natural_fraction = " << fmt17(sys.natural_fraction) << "\n";
  os << "reduced_dipole_cm = " << fmt17(sys.reduced_dipole_cm) << "\n";
  os << "chi3_dipole_convention = " << sys.chi3_dipole_convention << "\n";
  os << "ground_dephasing_hz = " << fmt17(sys.ground_dephasing_hz) << "\n";
  for (const auto& l : sys.levels) {
    os << "\n[level]\n";
    os << "label = " << l.label << "\n";
    os << "manifold = " << (l.manifold == Manifold::ground ? "ground" : "excited") << "\n";
    os << "energy_offset_hz = " << fmt17(l.energy_offset_hz) << "\n";
  }
  for (const auto& t : sys.transitions) {
    os << "\n[transition]\n";
    os << "lower = " << t.lower << "\n";
    os << "upper = " << t.upper << "\n";
    os << "dipole_cm = " << fmt17(t.dipole_cm) << "\n";
    os << "gamma_hz = " << fmt17(t.gamma_hz) << "\n";
  }
  write_file_atomic(path, os.str());
}

std::string default_data_dir() {
  if (const char* env = std::getenv("COMBEIT_DATA_DIR")) return env;
#ifdef COMBEIT_DATA_DIR
  return COMBEIT_DATA_DIR;
#else
  return "data";
#endif
}

AtomicSystem builtin_system(Isotope iso, double temperature_k) {
  if (temperature_k < 273.0 || temperature_k > 400.0)
    throw std::invalid_argument("builtin_system: temperature outside [273, 400] K");
  const std::string file = iso == Isotope::Rb85 ? "rb85_d2.dat" : "rb87_d2.dat";
  return load_system(default_data_dir() + "/" + file, temperature_k);
}

}  // namespace combeit
