#include "ghostsim/sources.hpp"

#include <cmath>
#include <numbers>

namespace ghostsim {

namespace {
constexpr double kUnitaryTol = 1e-12;
}

ThermalSpectrum::ThermalSpectrum(double n_max, double delta_q)
    : n_max(n_max), delta_q(delta_q) {
  if (n_max < 0.0) throw ConfigError("thermal n_max must be >= 0");
  if (!(delta_q > 0.0)) throw ConfigError("thermal delta_q must be > 0");
}

double ThermalSpectrum::photons_per_mode(double q) const {
  return n_max * std::exp(-q * q / (2.0 * delta_q * delta_q));
}

double ThermalSpectrum::coherence_length() const {
  return 2.0 * std::numbers::pi / delta_q;
}

PdcGain::PdcGain(double g, double delta_q) : g(g), delta_q(delta_q) {
  if (!(g > 0.0)) throw ConfigError("pdc gain g must be > 0");
  if (!(delta_q > 0.0)) throw ConfigError("pdc delta_q must be > 0");
}

double PdcGain::profile(double q) const {
  return g * std::exp(-q * q / (2.0 * delta_q * delta_q));
}

double PdcGain::u(double q) const { return std::cosh(profile(q)); }
double PdcGain::v(double q) const { return std::sinh(profile(q)); }
double PdcGain::mean_photons(double q) const {
  const double vq = v(q);
  return vq * vq;
}

BeamSplitter::BeamSplitter(cplx r, cplx t) : r_(r), t_(t) {
  const double unit = std::norm(r) + std::norm(t);
  if (std::abs(unit - 1.0) > kUnitaryTol)
    throw ConfigError("beam splitter not lossless: |r|^2 + |t|^2 != 1");
  // Commuting-arms phase convention; rejects e.g. r = t = 1/sqrt2.
  if (std::abs((r * std::conj(t)).real()) > kUnitaryTol)
    throw ConfigError("beam splitter violates Re(r conj(t)) = 0 phase convention");
}

BeamSplitter BeamSplitter::balanced() {
  const double s = 1.0 / std::sqrt(2.0);
  return BeamSplitter{cplx{s, 0.0}, cplx{0.0, s}};
}

double BeamSplitter::rt_squared() const { return std::norm(r_) * std::norm(t_); }

ComplexField sample_thermal(const TransverseGrid& grid, const ThermalSpectrum& spectrum,
                            Ordering ordering, PhiloxStream& rng) {
  ComplexField field = zero_field(grid, Domain::Momentum, ordering);
  const double offset = (ordering == Ordering::Wigner) ? 0.5 : 0.0;
  for (int k = 0; k < grid.n_points(); ++k) {
    const double variance = spectrum.photons_per_mode(grid.q(k)) + offset;
    field.values[k] = rng.next_complex_normal(variance);
  }
  return field;
}

ComplexField sample_vacuum(const TransverseGrid& grid, Ordering ordering,
                           PhiloxStream& rng) {
  ComplexField field = zero_field(grid, Domain::Momentum, ordering);
  if (ordering == Ordering::Wigner) {
    for (auto& v : field.values) v = rng.next_complex_normal(0.5);
  }
  return field;
}

std::pair<ComplexField, ComplexField> split(const ComplexField& a, const ComplexField& v,
                                            const BeamSplitter& bs) {
  if (!(a.grid == v.grid)) throw ConfigError("split: grids differ");
  if (a.domain != v.domain) throw DomainMismatchError("split: domains differ");
  if (a.ordering != v.ordering) throw ConfigError("split: orderings differ");

  ComplexField b1 = a;
  ComplexField b2 = a;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    b1.values[i] = bs.r() * a.values[i] + bs.t() * v.values[i];
    b2.values[i] = bs.t() * a.values[i] + bs.r() * v.values[i];
  }
  return {std::move(b1), std::move(b2)};
}

std::pair<ComplexField, ComplexField> sample_pdc_pair(const TransverseGrid& grid,
                                                      const PdcGain& gain,
                                                      PhiloxStream& rng_a1,
                                                      PhiloxStream& rng_a2) {
  const int n = grid.n_points();
  std::vector<cplx> a1(n), a2(n);
  for (int k = 0; k < n; ++k) a1[k] = rng_a1.next_complex_normal(0.5);
  for (int k = 0; k < n; ++k) a2[k] = rng_a2.next_complex_normal(0.5);

  ComplexField b1 = zero_field(grid, Domain::Momentum, Ordering::Wigner);
  ComplexField b2 = zero_field(grid, Domain::Momentum, Ordering::Wigner);
  for (int k = 0; k < n; ++k) {
    const double q = grid.q(k);
    const double uq = gain.u(q);
    const double vq = gain.v(q);
    const int kr = grid.reflect(k);
    b1.values[k] = uq * a1[k] + vq * std::conj(a2[kr]);
    b2.values[k] = uq * a2[k] + vq * std::conj(a1[kr]);
  }
  return {std::move(b1), std::move(b2)};
}

}  // namespace ghostsim
