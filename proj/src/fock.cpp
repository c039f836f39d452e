#include "combeit/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace combeit {

void QuantumState::validate(bool check_psd) const {
  if (dim < 1 || rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("state dimension mismatch");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) throw std::invalid_argument("state not Hermitian within 1e-12");
  if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
    throw std::invalid_argument("state trace not 1 within 1e-9");
  if (check_psd) {
    Eigen::SelfAdjointEigenSolver<MatC> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::invalid_argument("state not positive semidefinite within 1e-9");
  }
  if (top_tail_population() >= 1e-6)
    throw std::invalid_argument("truncation inadequate: top Fock levels populated");
}

double QuantumState::top_tail_population() const {
  const int cut = dim - std::max(1, dim / 10);
  double p = 0.0;
  for (int n = cut; n < dim; ++n) p += rho(n, n).real();
  return p;
}

Complex QuantumState::mean_a() const {
  Complex s(0, 0);
  for (int m = 1; m < dim; ++m) s += rho(m, m - 1) * std::sqrt(double(m));
  return s;
}

Complex QuantumState::mean_a2() const {
  Complex s(0, 0);
  for (int m = 2; m < dim; ++m) s += rho(m, m - 2) * std::sqrt(double(m) * (m - 1));
  return s;
}

double QuantumState::mean_n() const {
  double s = 0.0;
  for (int n = 0; n < dim; ++n) s += n * rho(n, n).real();
  return s;
}

double WignerGrid::cell_area() const {
  const double dx = x_axis.size() > 1 ? x_axis[1] - x_axis[0] : 1.0;
  const double dp = p_axis.size() > 1 ? p_axis[1] - p_axis[0] : 1.0;
  return dx * dp;
}

double WignerGrid::integral() const { return values.sum() * cell_area(); }

QuantumState coherent_state(Complex alpha, int dim) {
  const double a2 = std::norm(alpha);
  const double amag = std::abs(alpha);
  if (dim <= a2 + 7.0 * amag + 10.0)
    throw std::invalid_argument("coherent_state: dim too small for |alpha|");
  VecC c(dim);
  const double theta = std::arg(alpha);
  for (int n = 0; n < dim; ++n) {
    const double ln = -0.5 * a2 + (amag > 0 ? n * std::log(amag) : (n ? -1e30 : 0.0)) -
                      0.5 * std::lgamma(n + 1.0);
    c[n] = std::polar(std::exp(ln), n * theta);
  }
  QuantumState st;
  st.dim = dim;
  st.rho = c * c.adjoint();
  return st;
}

QuantumState squeezed_vacuum(double r, double phi, int dim) {
  if (dim < 4) throw std::invalid_argument("squeezed_vacuum: dim too small");
  VecC c = VecC::Zero(dim);
  const double th = std::tanh(r);
  for (int m = 0; 2 * m < dim; ++m) {
    // c_{2m} = (-e^{i phi} tanh r)^m sqrt((2m)!)/(2^m m!) / sqrt(cosh r)
    const double ln = 0.5 * std::lgamma(2.0 * m + 1.0) - m * std::log(2.0) -
                      std::lgamma(m + 1.0) + m * std::log(std::max(th, 1e-300)) -
                      0.5 * std::log(std::cosh(r));
    c[2 * m] = std::polar(std::exp(ln), m * (phi + M_PI));
  }
  QuantumState st;
  st.dim = dim;
  st.rho = c * c.adjoint();
  st.rho /= st.rho.trace().real();  // renormalize the truncated tail
  return st;
}

QuantumState kerr_evolve(const QuantumState& state, double kappa) {
  QuantumState out;
  out.dim = state.dim;
  out.rho.resize(state.dim, state.dim);
  for (int m = 0; m < state.dim; ++m)
    for (int n = 0; n < state.dim; ++n) {
      const double phase = kappa * (double(m) * m - double(n) * n);
      out.rho(m, n) = state.rho(m, n) * std::polar(1.0, phase);
    }
  return out;
}

QuantumState loss_channel(const QuantumState& state, double eta) {
  if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("eta must be in [0, 1]");
  QuantumState out;
  out.dim = state.dim;
  if (eta == 1.0) {
    out.rho = state.rho;
    return out;
  }
  out.rho = MatC::Zero(state.dim, state.dim);
  if (eta == 0.0) {
    out.rho(0, 0) = state.rho.trace();
    return out;
  }
  const double lneta = std::log(eta), ln1m = std::log(1.0 - eta);
  for (int a = 0; a < state.dim; ++a) {
    for (int b = a; b < state.dim; ++b) {
      Complex s(0, 0);
      for (int k = 0; a + k < state.dim && b + k < state.dim; ++k) {
        // sqrt(C(a+k,k) C(b+k,k)) eta^{(a+b)/2} (1-eta)^k
        const double lw = 0.5 * (std::lgamma(a + k + 1.0) - std::lgamma(a + 1.0) +
                                 std::lgamma(b + k + 1.0) - std::lgamma(b + 1.0)) -
                          std::lgamma(k + 1.0) + 0.5 * (a + b) * lneta + k * ln1m;
        s += std::exp(lw) * state.rho(a + k, b + k);
      }
      out.rho(a, b) = s;
      if (b != a) out.rho(b, a) = std::conj(s);
    }
  }
  return out;
}

VecD wigner_axis(const QuantumState& state, int points, double sigmas) {
  const double amp = std::sqrt(2.0 * std::max(state.mean_n(), 0.0));
  const double half = amp + sigmas * std::sqrt(0.5);
  return VecD::LinSpaced(points, -half, half);
}

WignerGrid wigner(const QuantumState& state, const VecD& x_axis, const VecD& p_axis) {
  const int dim = state.dim;
  // coverage precondition: the grid must extend 5 vacuum sigmas past the
  // state's displacement amplitude
  {
    const double amp = std::sqrt(2.0 * std::max(state.mean_n(), 0.0));
    const double need = amp + 5.0 * std::sqrt(0.5);
    if (x_axis.minCoeff() > -need + 1e-9 || x_axis.maxCoeff() < need - 1e-9 ||
        p_axis.minCoeff() > -need + 1e-9 || p_axis.maxCoeff() < need - 1e-9)
      throw std::invalid_argument("wigner grid does not cover the state");
  }

  WignerGrid w;
  w.x_axis = x_axis;
  w.p_axis = p_axis;
  w.values.resize(x_axis.size(), p_axis.size());

  std::vector<double> half_lgamma(dim);
  for (int n = 0; n < dim; ++n) half_lgamma[n] = 0.5 * std::lgamma(n + 1.0);

  std::vector<double> lag_lo(dim), lag_hi(dim);
  for (Eigen::Index ix = 0; ix < x_axis.size(); ++ix) {
    for (Eigen::Index jp = 0; jp < p_axis.size(); ++jp) {
      const Complex alpha(x_axis[ix] / std::sqrt(2.0), p_axis[jp] / std::sqrt(2.0));
      const double r2 = std::norm(alpha);
      const double y = 4.0 * r2;
      const double lnr = r2 > 0 ? std::log(2.0 * std::abs(alpha)) : 0.0;
      const double theta = std::arg(alpha);
      double acc = 0.0;
      const int kmax = r2 > 0 ? dim - 1 : 0;
      for (int k = 0; k <= kmax; ++k) {
        // associated Laguerre recurrence in the lower index
        double sum_k = 0.0;
        double lm1 = 0.0, l = 1.0;  // L_0^{(k)} = 1
        for (int a = 0; a + k < dim; ++a) {
          if (a >= 1) {
            const double lnext =
                ((2.0 * a - 1.0 + k - y) * l - (a - 1.0 + k) * lm1) / a;
            lm1 = l;
            l = lnext;
          }
          const double pref =
              std::exp(k * lnr + half_lgamma[a] - half_lgamma[a + k] - 2.0 * r2);
          const double sign = (a % 2 == 0) ? 1.0 : -1.0;
          double coeff;
          if (k == 0)
            coeff = state.rho(a, a).real();
          else
            coeff = 2.0 * (state.rho(a, a + k) * std::polar(1.0, k * theta)).real();
          sum_k += sign * coeff * pref * l;
        }
        acc += sum_k;
      }
      w.values(ix, jp) = acc / M_PI;
    }
  }

  const double norm = w.integral();
  if (std::abs(norm - 1.0) > 1e-3)
    throw std::runtime_error("wigner normalization check failed: truncation or grid inadequate");
  return w;
}

Squeezing squeezing_db(const QuantumState& state) {
  const Complex a = state.mean_a();
  const Complex a2 = state.mean_a2();
  const double n = state.mean_n();
  const double xm = std::sqrt(2.0) * a.real();
  const double pm = std::sqrt(2.0) * a.imag();
  const double vxx = 0.5 + n + a2.real() - xm * xm;
  const double vpp = 0.5 + n - a2.real() - pm * pm;
  const double cxp = a2.imag() - xm * pm;
  const double mid = 0.5 * (vxx + vpp);
  const double rad = std::sqrt(0.25 * (vxx - vpp) * (vxx - vpp) + cxp * cxp);
  Squeezing s;
  const double vmin = mid - rad;
  s.level_db = -10.0 * std::log10(vmin / 0.5);
  s.angle = 0.5 * (std::atan2(2.0 * cxp, vxx - vpp) + M_PI);
  return s;
}

Negativity negativity(const WignerGrid& w) {
  Negativity n;
  n.min_value = w.values.minCoeff();
  n.negative_volume = (-w.values).cwiseMax(0.0).sum() * w.cell_area();
  return n;
}

}  // namespace combeit
