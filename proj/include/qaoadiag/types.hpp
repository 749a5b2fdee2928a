#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qaoadiag {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using IndexVector = Eigen::VectorXi;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Bad arguments / malformed input (CLI exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A formula or procedure does not apply at the given parameters (exit code 3).
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested computation exceeds a configured work budget (exit code 4).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double hermiticity = 1e-12;        // max entrywise |M - M^dag|
  double eigen_residual = 1e-10;     // relative eigenpair residual
  double tau_deg = 1e-9;             // chordal distance: treat as degenerate
  double tau_iso = 1e-12;            // ring-minimum threshold for isolation
  double match_overlap = 0.9;        // continuity threshold for curve matching
  int refine_depth = 12;             // max local sampling doublings
  double ring_radius = 1e-2;         // default neighborhood radius cap
  long long path_cap = 1000000;      // coupling path enumeration cap
  double sweep_budget = 4e12;        // sum of p*dim^2 over sweep cells
  int threads = 0;                   // 0 = hardware concurrency
};

// Map an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

// Figure convention: theta = -arg(lambda) in (-pi, pi].
inline double phase_of(cxd lambda) { return wrap_angle(-std::arg(lambda)); }

// Distance between two phases on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

// Euclidean distance between unit-circle eigenvalues, in [0, 2].
inline double chordal_distance(cxd a, cxd b) { return std::abs(a - b); }

inline double chordal_from_phase(double dphase) {
  return 2.0 * std::abs(std::sin(0.5 * dphase));
}

}  // namespace qaoadiag
