#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "voltvar/feeder.hpp"

namespace voltvar {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Spectral norm ||M||_2 = sqrt(lambda_max(M^T M)), computed by SVD.
double spectral_norm(const Matrix& m);

/// Bus admittance matrix Y = Y_L + diag(y_T), (N+1)x(N+1), bus 0 first.
/// The Laplacian part has zero row sums. Throws if the graph is
/// disconnected, naming the buses unreachable from the substation.
ComplexMatrix build_admittance(const FeederSpec& spec);

/// Linearized voltage-sensitivity model derived from the admittance
/// partition. Immutable after construction; shareable across threads.
struct SensitivityModel {
  int bus_count = 0;  // N + 1

  ComplexMatrix y_tilde;  // substation-removed admittance block, N x N
  ComplexVector y0;       // coupling column to the substation bus, N
  ComplexMatrix z_tilde;  // inverse of y_tilde, N x N
  Matrix r_tilde;         // Re(z_tilde)
  Matrix x_tilde;         // Im(z_tilde)

  // Block partition over DER buses (C) and load buses (L).
  std::vector<int> der_buses;   // original ids of the C indices
  std::vector<int> load_buses;  // original ids of the L indices
  Matrix r_cc, x_cc;            // C x C
  Matrix r_cl, x_cl;            // C x |L|
  Matrix x_ll;                  // |L| x |L|

  ComplexVector u_hat;  // zero-injection voltage phasors, N
  Vector u_hat_mag;     // |u_hat|
  double x_norm = 0.0;  // ||X||_2 of the C x C reactance block

  // Carried over from the feeder for downstream consumers.
  Vector q_min, q_max;  // per-DER box
  Vector v_min, v_max;  // per-bus bounds (buses 1..N)

  int n() const { return bus_count - 1; }
  int der_count() const { return static_cast<int>(der_buses.size()); }
  int load_count() const { return static_cast<int>(load_buses.size()); }

  /// Row index (0-based, over buses 1..N) of a bus id.
  static int row_of(int bus) { return bus - 1; }
};

/// Inverts the substation-removed admittance block and extracts the
/// sensitivity blocks. u_hat is the zero-injection solution -Z~ y_0,
/// which evaluates to 1 p.u. on shunt-free feeders. Throws a numeric
/// error with a condition estimate if the block is singular.
SensitivityModel derive_sensitivity(const ComplexMatrix& y, const FeederSpec& spec);

}  // namespace voltvar
