#pragma once

#include <complex>
#include <vector>

#include "ghostsim/errors.hpp"

namespace ghostsim {

using cplx = std::complex<double>;

enum class Domain { Position, Momentum };

/// Statistical ordering of a sampled field: P samples reproduce normally
/// ordered moments, Wigner samples reproduce symmetrically ordered ones.
enum class Ordering { P, Wigner };

/// 1-D sampled transverse plane.
///
/// Position lattice  x_j = (j - N/2) dx,            j = 0..N-1
/// Momentum lattice  q_k = 2 pi (k - N/2) / (N dx)  [rad/m]
///
/// N must be a power of two; index N/2 sits at x = 0 and q = 0, so the
/// reflection j -> (N - j) mod N maps x to -x exactly, with j = 0 its own
/// image (the edge mode).
class TransverseGrid {
 public:
  TransverseGrid(int n_points, double dx, double wavelength);

  int n_points() const { return n_; }
  double dx() const { return dx_; }
  double wavelength() const { return wavelength_; }
  /// Momentum lattice step 2 pi / (N dx).
  double dq() const;
  double extent() const { return n_ * dx_; }

  double x(int j) const { return (j - n_ / 2) * dx_; }
  double q(int k) const;
  int reflect(int j) const { return (n_ - j) % n_; }

  std::vector<double> position_lattice() const;
  std::vector<double> momentum_lattice() const;

  bool operator==(const TransverseGrid&) const = default;

 private:
  int n_;
  double dx_;
  double wavelength_;
};

/// Complex amplitudes on a grid, in units of sqrt(photons) per lattice mode.
struct ComplexField {
  TransverseGrid grid;
  std::vector<cplx> values;
  Domain domain = Domain::Position;
  Ordering ordering = Ordering::P;

  /// Total power sum |values|^2; invariant under domain transforms.
  double power() const;
};

ComplexField zero_field(const TransverseGrid& grid, Domain domain, Ordering ordering);

/// Unitary centered DFT, position -> momentum:
///   F_k = (1/sqrt N) sum_j exp(-i q_k x_j) f_j
ComplexField to_momentum(const ComplexField& field);

/// Exact inverse of to_momentum (momentum -> position).
ComplexField to_position(const ComplexField& field);

}  // namespace ghostsim
