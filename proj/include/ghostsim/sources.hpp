#pragma once

#include <utility>

#include "ghostsim/lattice.hpp"
#include "ghostsim/rng.hpp"

namespace ghostsim {

/// Gaussian thermal spectrum: mean photons per momentum mode
///   n_th(q) = n_max exp(-q^2 / (2 delta_q^2)).
/// Coherence length convention: l_coh = 2 pi / delta_q.
struct ThermalSpectrum {
  double n_max;
  double delta_q;

  ThermalSpectrum(double n_max, double delta_q);

  double photons_per_mode(double q) const;
  double coherence_length() const;
};

/// Parametric gain with Gaussian profile gbar(q) = g exp(-q^2 / (2 delta_q^2)):
///   U(q) = cosh(gbar), V(q) = sinh(gbar), so U^2 - V^2 = 1 identically.
/// Mean photons per mode in each output beam is V(q)^2.
struct PdcGain {
  double g;
  double delta_q;

  PdcGain(double g, double delta_q);

  double profile(double q) const;
  double u(double q) const;
  double v(double q) const;
  double mean_photons(double q) const;
};

/// Lossless splitter with commuting output arms: |r|^2 + |t|^2 = 1 and
/// Re(r conj(t)) = 0. Default is r = 1/sqrt2, t = i/sqrt2.
class BeamSplitter {
 public:
  BeamSplitter(cplx r, cplx t);
  static BeamSplitter balanced();

  cplx r() const { return r_; }
  cplx t() const { return t_; }
  double rt_squared() const;  // |r t|^2

 private:
  cplx r_, t_;
};

/// Independent thermal mode draws on the momentum lattice. Per-mode variance
/// <|b(q)|^2> is n_th(q) for P ordering, n_th(q) + 1/2 for Wigner.
ComplexField sample_thermal(const TransverseGrid& grid, const ThermalSpectrum& spectrum,
                            Ordering ordering, PhiloxStream& rng);

/// Vacuum: identically zero in P; i.i.d. variance-1/2 modes in Wigner.
ComplexField sample_vacuum(const TransverseGrid& grid, Ordering ordering,
                           PhiloxStream& rng);

/// Beam-splitter input/output map: b1 = r a + t v, b2 = t a + r v.
std::pair<ComplexField, ComplexField> split(const ComplexField& a, const ComplexField& v,
                                            const BeamSplitter& bs);

/// Signal/idler pair on the momentum lattice (Wigner ordering):
///   b1(q) = U(q) a1(q) + V(q) conj(a2(-q))
///   b2(q) = U(q) a2(q) + V(q) conj(a1(-q))
/// with a1, a2 independent Wigner vacua and -q realized as the lattice
/// reflection k -> (N - k) mod N.
std::pair<ComplexField, ComplexField> sample_pdc_pair(const TransverseGrid& grid,
                                                      const PdcGain& gain,
                                                      PhiloxStream& rng_a1,
                                                      PhiloxStream& rng_a2);

}  // namespace ghostsim
