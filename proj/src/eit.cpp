#include "combeit/eit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace combeit {

using constants::twopi;

void ChainSpec::validate() const {
  if (probe.rabi < 0) throw std::invalid_argument("probe rabi must be >= 0");
  if (probe_gamma <= 0) throw std::invalid_argument("probe coherence relaxation must be > 0");
  for (const auto& l : links) {
    if (l.drive.rabi < 0) throw std::invalid_argument("link rabi must be >= 0");
    if (l.gamma <= 0) throw std::invalid_argument("link relaxation must be > 0");
  }
  if (n_levels != static_cast<int>(links.size()) + 2)
    throw std::invalid_argument("n_levels must equal links.size() + 2");
}

Complex rho_chain(const ChainSpec& spec) {
  spec.validate();
  const int L = static_cast<int>(spec.links.size());
  // cumulative detunings, alternating sign starting with minus
  std::vector<double> d(L + 1);
  d[0] = spec.probe.detuning;
  for (int k = 0; k < L; ++k)
    d[k + 1] = d[k] + ((k % 2 == 0) ? -1.0 : 1.0) * spec.links[k].drive.detuning;
  auto denom = [&](int k) {
    const double g = (k == 0) ? spec.probe_gamma : spec.links[k - 1].gamma;
    return Complex(d[k], -g);
  };
  Complex t = denom(L);
  for (int k = L - 1; k >= 0; --k) {
    const double om = spec.links[k].drive.rabi;
    t = denom(k) - (om * om / 4.0) / t;
  }
  return (spec.probe.rabi / 2.0) / t;
}

Complex rho13_four_level(const FieldDrive& probe, const FieldDrive& comb_b,
                         const FieldDrive& comb_c, double gamma13, double gamma12,
                         double gamma14) {
  ChainSpec spec;
  spec.probe = probe;
  spec.probe_gamma = gamma13;
  spec.links = {{comb_c, gamma12}, {comb_b, gamma14}};
  spec.n_levels = 4;
  return rho_chain(spec);
}

int SteadyState::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("level not in steady-state basis: " + label);
}

namespace {

MatC kron(const MatC& a, const MatC& b) {
  MatC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void add_dissipator(MatC& liouv, const MatC& c) {
  const Eigen::Index n = c.rows();
  const MatC id = MatC::Identity(n, n);
  const MatC cdc = c.adjoint() * c;
  liouv += kron(c.conjugate(), c);
  liouv -= 0.5 * kron(id, cdc);
  liouv -= 0.5 * kron(cdc.transpose(), id);
}

}  // namespace

SteadyState steady_state_liouvillian(const AtomicSystem& sys,
                                     const std::vector<LiouvillianDrive>& drives) {
  sys.validate();

  if (drives.empty()) {
    // Thermal population over the ground manifold, zero coherences. Any
    // population-only ground matrix is stationary; the Boltzmann weights fix
    // a deterministic representative.
    SteadyState out;
    for (const auto& l : sys.levels) out.basis.push_back(l.label);
    const int n = static_cast<int>(out.basis.size());
    out.rho = MatC::Zero(n, n);
    double norm = 0.0;
    std::vector<double> w(n, 0.0);
    const double kT = constants::kboltzmann * sys.temperature;
    for (int i = 0; i < n; ++i) {
      const Level& l = sys.levels[i];
      if (l.manifold != Manifold::ground) continue;
      w[i] = std::exp(-l.energy_offset_hz * 6.62607015e-34 / kT);
      norm += w[i];
    }
    for (int i = 0; i < n; ++i) out.rho(i, i) = w[i] / norm;
    return out;
  }

  // collect driven levels, system order
  std::set<std::string> touched;
  for (const auto& d : drives) {
    sys.transition(d.lower, d.upper);  // validates existence
    touched.insert(d.lower);
    touched.insert(d.upper);
  }
  SteadyState out;
  std::map<std::string, int> index;
  for (const auto& l : sys.levels)
    if (touched.count(l.label)) {
      index[l.label] = static_cast<int>(out.basis.size());
      out.basis.push_back(l.label);
    }
  const int n = static_cast<int>(out.basis.size());

  // rotating frame by breadth-first traversal; a revisited level means the
  // drive graph has a loop, which does not admit a consistent static frame
  std::vector<double> frame(n, 0.0);
  std::vector<bool> seen(n, false);
  {
    std::vector<std::pair<int, int>> edges;  // (lower idx, upper idx) per drive
    for (const auto& d : drives) edges.emplace_back(index.at(d.lower), index.at(d.upper));
    std::vector<int> queue;
    const int root = edges.front().first;
    seen[root] = true;
    queue.push_back(root);
    std::vector<bool> used(edges.size(), false);
    size_t qi = 0;
    while (qi < queue.size()) {
      const int v = queue[qi++];
      for (size_t e = 0; e < edges.size(); ++e) {
        if (used[e]) continue;
        const auto [lo, up] = edges[e];
        const double delta = drives[e].field.detuning;
        int other = -1;
        if (lo == v) {
          other = up;
          if (seen[other])
            throw std::invalid_argument("drive pattern has a loop; chain/ladder topology required");
          frame[other] = frame[v] - delta;
        } else if (up == v) {
          other = lo;
          if (seen[other])
            throw std::invalid_argument("drive pattern has a loop; chain/ladder topology required");
          frame[other] = frame[v] + delta;
        } else {
          continue;
        }
        used[e] = true;
        seen[other] = true;
        queue.push_back(other);
      }
    }
    if (static_cast<int>(queue.size()) != n)
      throw std::invalid_argument("drive pattern is disconnected");
  }

  MatC h = MatC::Zero(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = frame[i];
  for (const auto& d : drives) {
    const int lo = index.at(d.lower), up = index.at(d.upper);
    h(up, lo) += d.field.rabi / 2.0;
    h(lo, up) += d.field.rabi / 2.0;
  }

  MatC liouv = MatC::Zero(n * n, n * n);
  {
    const MatC id = MatC::Identity(n, n);
    liouv = Complex(0, -1) * (kron(id, h) - kron(h.transpose(), id));
  }

  auto is_ground = [&](const std::string& label) {
    return sys.level(label).manifold == Manifold::ground;
  };

  // radiative decay: Gamma_u = 2*max coherence rate, branched by dipole^2
  // over the ground levels of the driven subspace
  for (int u = 0; u < n; ++u) {
    if (is_ground(out.basis[u])) continue;
    double gmax = 0.0;
    std::vector<std::pair<int, double>> branches;  // (ground idx, mu^2)
    double musq = 0.0;
    for (const auto& t : sys.transitions) {
      if (t.upper != out.basis[u]) continue;
      auto it = index.find(t.lower);
      if (it == index.end()) continue;
      gmax = std::max(gmax, twopi * t.gamma_hz);
      branches.emplace_back(it->second, t.dipole_cm * t.dipole_cm);
      musq += t.dipole_cm * t.dipole_cm;
    }
    const double gamma_u = 2.0 * gmax;
    for (const auto& [g, m2] : branches) {
      MatC c = MatC::Zero(n, n);
      c(g, u) = std::sqrt(gamma_u * m2 / musq);
      add_dissipator(liouv, c);
    }
  }

  // ground-state decoherence: pure dephasing on every ground level except
  // the chain root, so rho_{root,g} decays at the configured rate
  const int root = index.at(drives.front().lower);
  const double gd = twopi * sys.ground_dephasing_hz;
  if (gd > 0) {
    for (int g = 0; g < n; ++g) {
      if (g == root || !is_ground(out.basis[g])) continue;
      MatC c = MatC::Zero(n, n);
      c(g, g) = std::sqrt(2.0 * gd);
      add_dissipator(liouv, c);
    }
  }

  // solve L vec(rho) = 0 with tr(rho) = 1 as a stacked least-squares system
  MatC a(n * n + 1, n * n);
  a.topRows(n * n) = liouv;
  a.row(n * n).setZero();
  for (int i = 0; i < n; ++i) a(n * n, i * n + i) = 1.0;
  VecC b = VecC::Zero(n * n + 1);
  b(n * n) = 1.0;
  const VecC x = a.colPivHouseholderQr().solve(b);

  const double resid = (liouv * x).norm();
  const double scale = std::max(1.0, liouv.cwiseAbs().maxCoeff());
  if (!(resid < 1e-7 * scale))
    throw std::runtime_error("degenerate drive configuration: singular Liouvillian steady state");

  out.rho = Eigen::Map<const MatC>(x.data(), n, n);
  out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
  out.rho /= out.rho.trace().real();

  Eigen::SelfAdjointEigenSolver<MatC> es(out.rho);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::runtime_error("steady state not positive semidefinite within tolerance");
  return out;
}

void gauss_hermite(int order, VecD& nodes, VecD& weights) {
  if (order < 1) throw std::invalid_argument("gauss_hermite order must be >= 1");
  MatD j = MatD::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double off = std::sqrt(k / 2.0);
    j(k - 1, k) = off;
    j(k, k - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<MatD> es(j);
  nodes = es.eigenvalues();
  weights.resize(order);
  const double sqrtpi = std::sqrt(M_PI);
  for (int k = 0; k < order; ++k) {
    const double v0 = es.eigenvectors()(0, k);
    weights[k] = sqrtpi * v0 * v0;
  }
}

std::function<Complex(double)> doppler_average(std::function<Complex(double)> spectrum_fn,
                                               const AtomicSystem& sys, int order) {
  VecD nodes, weights;
  gauss_hermite(order, nodes, weights);
  const double vp = sys.most_probable_speed(sys.temperature);
  const double k = twopi / (sys.wavelength_nm * 1e-9);  // rad/m
  const double norm = std::sqrt(M_PI);
  return [=, fn = std::move(spectrum_fn)](double delta) {
    Complex acc(0, 0);
    for (int i = 0; i < nodes.size(); ++i)
      acc += weights[i] * fn(delta - k * vp * nodes[i]);
    return acc / norm;
  };
}

namespace {

struct BLeg {
  double rabi;      // rad/s at the transition
  double detuning;  // rad/s from its transition
  double gamma;     // rad/s
};

// weak-probe chain with one two-photon leg and several three-photon legs
Complex rho13_multileg(double probe_rabi, double da, double gamma_a, double omega_c, double d1,
                       double gamma_12, const std::vector<BLeg>& legs) {
  Complex mid(d1, gamma_12);  // written in (Delta_c - Delta_a + i gamma) form
  for (const auto& leg : legs) {
    // three-photon denominator (Delta_c - Delta_a - Delta_b + i gamma_14)
    Complex d3(d1 - leg.detuning, leg.gamma);
    mid -= (leg.rabi * leg.rabi / 4.0) / d3;
  }
  Complex den = Complex(da, -gamma_a) + (omega_c * omega_c / 4.0) / mid;
  return (probe_rabi / 2.0) / den;
}

}  // namespace

SusceptibilitySpectrum susceptibility_spectrum(const AtomicSystem& sys, const CombSpectrum& comb,
                                               double probe_rabi, const VecD& scan_hz,
                                               const SpectrumParams& params) {
  sys.validate();
  comb.validate();
  if (comb.lines.empty()) throw std::invalid_argument("empty comb");
  if (scan_hz.size() == 0) throw std::invalid_argument("empty scan");
  for (Eigen::Index i = 1; i < scan_hz.size(); ++i)
    if (scan_hz[i] <= scan_hz[i - 1])
      throw std::invalid_argument("scan grid must be strictly increasing");

  const Transition& probe_t = sys.transition(params.probe_lower, params.probe_upper);
  const double f_d2 = constants::clight / (sys.wavelength_nm * 1e-9);
  auto abs_freq = [&](const Transition& t) { return f_d2 + sys.transition_offset_hz(t); };

  // comb-coupled ground level: the other ground level reaching probe_upper
  std::string comb_lower;
  for (const auto& t : sys.transitions)
    if (t.upper == params.probe_upper && t.lower != params.probe_lower) comb_lower = t.lower;
  if (comb_lower.empty())
    throw std::invalid_argument("no comb-coupled ground level shares the probe upper level");

  const double window = params.pair_window > 0 ? params.pair_window
                                               : 2.0 * twopi * comb.repetition_rate;

  // reference comb line: nearest to the probe-shared Lambda transition
  const Transition& ref_lambda = sys.transition(comb_lower, params.probe_upper);
  const double f_lambda = abs_freq(ref_lambda);
  double dc_ref = 0.0, best = 1e300;
  for (const auto& ln : comb.lines) {
    const double d = ln.frequency - f_lambda;
    if (std::abs(d) < best) {
      best = std::abs(d);
      dc_ref = d;
    }
  }

  // thermal population share of the probe ground level (degeneracy-weighted)
  double f_pop;
  {
    auto g_of = [](const std::string& label) {
      const auto pos = label.find("F=");
      return 2.0 * std::stod(label.substr(pos + 2)) + 1.0;
    };
    const double kT = constants::kboltzmann * sys.temperature;
    double num = 0.0, den = 0.0;
    for (const auto& l : sys.levels) {
      if (l.manifold != Manifold::ground) continue;
      const double w = g_of(l.label) * std::exp(-l.energy_offset_hz * 6.62607015e-34 / kT);
      den += w;
      if (l.label == params.probe_lower) num = w;
    }
    f_pop = num / den;
  }

  const double neff = f_pop * sys.number_density;
  const double mu_ref = probe_t.dipole_cm;

  // probe pathways: every transition out of the probe ground level
  struct Pathway {
    const Transition* ta;          // probe leg
    const Transition* tc;          // Lambda leg (comb_lower -> same upper), may be null
    std::vector<const Transition*> tb;  // other comb legs from comb_lower
    double offset;                 // rad/s shift of Delta_a relative to the reference
    double pref;                   // chi prefactor with the rho normalization folded in
    double omega_a;                // probe Rabi on this leg, rad/s
  };
  std::vector<Pathway> paths;
  for (const auto& ta : sys.transitions) {
    if (ta.lower != params.probe_lower) continue;
    Pathway p;
    p.ta = &ta;
    p.tc = sys.find_transition(comb_lower, ta.upper);
    for (const auto& tb : sys.transitions)
      if (tb.lower == comb_lower && tb.upper != ta.upper) p.tb.push_back(&tb);
    p.offset = twopi * (sys.level(params.probe_upper).energy_offset_hz -
                        sys.level(ta.upper).energy_offset_hz);
    p.omega_a = probe_rabi * ta.dipole_cm / mu_ref;
    p.pref = 2.0 * neff * ta.dipole_cm * ta.dipole_cm / (constants::eps0 * constants::hbar * p.omega_a);
    paths.push_back(p);
  }

  auto chi_at = [&](double delta_a_ref) {
    Complex chi(0, 0);
    for (const auto& p : paths) {
      const double da = delta_a_ref + p.offset;
      const double ga = twopi * p.ta->gamma_hz;
      const Complex bare = (p.omega_a / 2.0) / Complex(da, -ga);
      chi += p.pref * bare;
      if (!p.tc) continue;
      const double f_c = abs_freq(*p.tc);
      const double mu_scale_c = p.tc->dipole_cm / sys.reduced_dipole_cm;
      for (const auto& ln : comb.lines) {
        const double dc = twopi * (ln.frequency - f_c);
        const double d1 = dc - da;  // two-photon detuning of this pair
        if (std::abs(d1) > window) continue;
        const double omega_c = std::abs(ln.amplitude) * mu_scale_c;
        if (omega_c == 0.0) continue;
        std::vector<BLeg> legs;
        for (const auto* tb : p.tb) {
          const double f_b = abs_freq(*tb);
          const double mu_scale_b = tb->dipole_cm / sys.reduced_dipole_cm;
          for (const auto& lb : comb.lines) {
            const double db = twopi * (lb.frequency - f_b);
            if (std::abs(db) > window) continue;
            const double omega_b = std::abs(lb.amplitude) * mu_scale_b;
            if (omega_b == 0.0) continue;
            legs.push_back({omega_b, db, twopi * tb->gamma_hz});
          }
        }
        const Complex withcomb = rho13_multileg(p.omega_a, da, ga, omega_c, d1,
                                                twopi * sys.ground_dephasing_hz, legs);
        chi += p.pref * (withcomb - bare);
      }
    }
    return chi;
  };

  std::function<Complex(double)> fn = chi_at;
  if (params.doppler) fn = doppler_average(fn, sys, params.doppler_order);

  SusceptibilitySpectrum out;
  out.detunings_hz = scan_hz;
  out.probe_one_photon_detuning_hz = dc_ref;
  out.chi.resize(scan_hz.size());
  for (Eigen::Index i = 0; i < scan_hz.size(); ++i) {
    const double delta = twopi * scan_hz[i];
    out.chi[i] = fn(twopi * dc_ref - delta);
  }
  return out;
}

VecD transmission(const AtomicSystem& sys, const SusceptibilitySpectrum& s, double length_m) {
  const double k = twopi / (sys.wavelength_nm * 1e-9);
  VecD t(s.chi.size());
  for (Eigen::Index i = 0; i < s.chi.size(); ++i)
    t[i] = std::exp(-k * length_m * s.chi[i].imag());
  return t;
}

LorentzianFit fit_lorentzian(const SusceptibilitySpectrum& s, double window_lo_hz,
                             double window_hi_hz) {
  std::vector<double> xs, ys;
  for (Eigen::Index i = 0; i < s.detunings_hz.size(); ++i) {
    const double x = s.detunings_hz[i];
    if (x < window_lo_hz || x > window_hi_hz) continue;
    xs.push_back(x);
    ys.push_back(s.chi[i].imag());
  }
  const int m = static_cast<int>(xs.size());
  if (m < 8) throw std::invalid_argument("fit window must contain at least 8 samples");

  // identifiable reduced model: a = (n0 + n1*u) / (D + u^2), u = x - delta0
  // theta = (delta0, log D); (n0, n1) solved linearly per theta
  auto solve_linear = [&](double delta0, double dd, double& n0, double& n1, double& rss) {
    double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
    for (int i = 0; i < m; ++i) {
      const double u = xs[i] - delta0;
      const double den = dd + u * u;
      const double b1 = 1.0 / den, b2 = u / den;
      s11 += b1 * b1;
      s12 += b1 * b2;
      s22 += b2 * b2;
      r1 += b1 * ys[i];
      r2 += b2 * ys[i];
    }
    const double det = s11 * s22 - s12 * s12;
    n0 = (s22 * r1 - s12 * r2) / det;
    n1 = (s11 * r2 - s12 * r1) / det;
    rss = 0;
    for (int i = 0; i < m; ++i) {
      const double u = xs[i] - delta0;
      const double fit = (n0 + n1 * u) / (dd + u * u);
      rss += (ys[i] - fit) * (ys[i] - fit);
    }
    return rss;
  };

  // initial guess: extremum location and half width
  int imax = 0;
  double dev = 0, base = 0;
  for (int i = 0; i < m; ++i) base += ys[i] / m;
  for (int i = 0; i < m; ++i)
    if (std::abs(ys[i] - base) > dev) {
      dev = std::abs(ys[i] - base);
      imax = i;
    }
  double delta0 = xs[imax];
  double halfw = (xs.back() - xs.front()) / 8.0;
  for (int i = imax; i < m; ++i)
    if (std::abs(ys[i] - base) < dev / 2) {
      halfw = std::max(xs[i] - xs[imax], (xs[1] - xs[0]));
      break;
    }
  double logd = 2.0 * std::log(halfw);

  double n0, n1, rss;
  rss = solve_linear(delta0, std::exp(logd), n0, n1, rss);
  double lambda = 1e-3;
  bool converged = false;
  const double xscale = xs.back() - xs.front();
  for (int it = 0; it < 200; ++it) {
    // numeric Jacobian of rss in (delta0, logd) via parameter steps
    const double h0 = 1e-6 * xscale, h1 = 1e-6;
    double a0, a1, junk;
    const double f0 = solve_linear(delta0, std::exp(logd), a0, a1, junk);
    const double fp0 = solve_linear(delta0 + h0, std::exp(logd), a0, a1, junk);
    const double fm0 = solve_linear(delta0 - h0, std::exp(logd), a0, a1, junk);
    const double fp1 = solve_linear(delta0, std::exp(logd + h1), a0, a1, junk);
    const double fm1 = solve_linear(delta0, std::exp(logd - h1), a0, a1, junk);
    const double g0 = (fp0 - fm0) / (2 * h0);
    const double g1 = (fp1 - fm1) / (2 * h1);
    const double h00 = (fp0 - 2 * f0 + fm0) / (h0 * h0);
    const double h11 = (fp1 - 2 * f0 + fm1) / (h1 * h1);
    // damped diagonal Newton step
    double step0 = -g0 / (std::abs(h00) + lambda * std::max(1.0, std::abs(h00)));
    double step1 = -g1 / (std::abs(h11) + lambda * std::max(1.0, std::abs(h11)));
    step0 = std::clamp(step0, -0.2 * xscale, 0.2 * xscale);
    step1 = std::clamp(step1, -1.0, 1.0);
    const double trial = solve_linear(delta0 + step0, std::exp(logd + step1), a0, a1, junk);
    if (trial < f0) {
      delta0 += step0;
      logd += step1;
      lambda = std::max(lambda * 0.5, 1e-12);
      if (f0 - trial < 1e-14 * (f0 + 1e-300)) {
        converged = true;
        break;
      }
    } else {
      lambda *= 4.0;
      if (lambda > 1e12) {
        converged = true;  // stuck at a flat minimum
        break;
      }
    }
  }
  rss = solve_linear(delta0, std::exp(logd), n0, n1, rss);

  LorentzianFit fit;
  const double dd = std::exp(logd);
  fit.gamma = std::sqrt(dd);  // C = 0 gauge
  fit.delta0 = delta0;
  fit.A = n0 / dd;
  fit.B = n1 / fit.gamma;
  fit.C = 0.0;
  fit.residual_rms = std::sqrt(rss / m);
  fit.converged = converged;
  return fit;
}

std::vector<Peak> find_peaks(const VecD& x, const VecD& y, double prominence) {
  const int n = static_cast<int>(y.size());
  if (n < 16) throw std::invalid_argument("find_peaks needs at least 16 samples");
  if (x.size() != y.size()) throw std::invalid_argument("grid size mismatch");

  if (prominence < 0) {
    // 3x RMS of the background-subtracted curve; background = wide moving mean
    const int w = std::max(5, n / 8);
    VecD bg(n);
    for (int i = 0; i < n; ++i) {
      const int a = std::max(0, i - w), b = std::min(n - 1, i + w);
      bg[i] = y.segment(a, b - a + 1).mean();
    }
    const double rms = std::sqrt((y - bg).squaredNorm() / n);
    prominence = 3.0 * rms;
  }

  std::vector<Peak> peaks;
  for (int i = 1; i + 1 < n; ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    // topographic prominence: lowest saddle towards a higher point each side
    double left_min = y[i], right_min = y[i];
    for (int j = i - 1; j >= 0; --j) {
      if (y[j] > y[i]) break;
      left_min = std::min(left_min, y[j]);
    }
    for (int j = i + 1; j < n; ++j) {
      if (y[j] > y[i]) break;
      right_min = std::min(right_min, y[j]);
    }
    const double prom = y[i] - std::max(left_min, right_min);
    if (prom < prominence) continue;

    // parabolic position refinement
    const double denom = y[i - 1] - 2 * y[i] + y[i + 1];
    double shift = 0.0;
    if (denom < 0) shift = 0.5 * (y[i - 1] - y[i + 1]) / denom;
    shift = std::clamp(shift, -0.5, 0.5);
    const double dx = (i + 1 < n ? x[i + 1] - x[i] : x[i] - x[i - 1]);
    const double pos = x[i] + shift * dx;

    // width at half prominence
    const double half = y[i] - prom / 2.0;
    double lo = x[i], hi = x[i];
    for (int j = i - 1; j >= 0; --j)
      if (y[j] <= half) {
        lo = x[j] + (x[j + 1] - x[j]) * (half - y[j]) / (y[j + 1] - y[j]);
        break;
      }
    for (int j = i + 1; j < n; ++j)
      if (y[j] <= half) {
        hi = x[j - 1] + (x[j] - x[j - 1]) * (y[j - 1] - half) / (y[j - 1] - y[j]);
        break;
      }
    peaks.push_back({pos, y[i], hi - lo});
  }
  return peaks;
}

}  // namespace combeit
