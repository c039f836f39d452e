#pragma once

#include <Eigen/Dense>
#include <complex>

namespace combeit {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using MatC = Mat<Complex>;
using MatD = Mat<double>;
using VecC = Vec<Complex>;
using VecD = Vec<double>;

// Unit convention used throughout the solvers: detunings, Rabi frequencies
// and relaxation rates are angular frequencies (rad/s). File formats and the
// atomic data layer store ordinary frequencies (Hz); conversion happens at
// the boundary via twopi.
namespace constants {
inline constexpr double twopi = 6.283185307179586476925286766559;
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double eps0 = 8.8541878128e-12;      // C^2 J^-1 m^-1
inline constexpr double kboltzmann = 1.380649e-23;    // J/K
inline constexpr double clight = 299792458.0;         // m/s
inline constexpr double amu = 1.66053906660e-27;      // kg
}  // namespace constants

}  // namespace combeit
