#include "ghostsim/lattice.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace ghostsim {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// One FFTW plan pair per transform size, shared across threads. Plans are
// created once under a lock with FFTW_UNALIGNED so they can be replayed on
// any caller-owned buffers via the new-array execute interface.
class PlanCache {
 public:
  struct Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
  };

  static const Plans& get(int n) {
    static PlanCache cache;
    std::scoped_lock lock(cache.mutex_);
    auto it = cache.plans_.find(n);
    if (it == cache.plans_.end()) {
      std::vector<cplx> in(n), out(n);
      auto* fin = reinterpret_cast<fftw_complex*>(in.data());
      auto* fout = reinterpret_cast<fftw_complex*>(out.data());
      Plans p;
      p.forward = fftw_plan_dft_1d(n, fin, fout, FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
      p.backward = fftw_plan_dft_1d(n, fin, fout, FFTW_BACKWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
      it = cache.plans_.emplace(n, p).first;
    }
    return it->second;
  }

 private:
  PlanCache() = default;
  std::mutex mutex_;
  std::map<int, Plans> plans_;
};

// Centered unitary transform via plain FFT plus (-1)^j / (-1)^k phases:
//   sum_j e^{-2pi i (k-N/2)(j-N/2)/N} f_j
//     = (-1)^k (-1)^{N/2} FFT[(-1)^j f_j]_k
ComplexField centered_transform(const ComplexField& field, bool forward) {
  const int n = field.grid.n_points();
  const auto& plans = PlanCache::get(n);

  std::vector<cplx> in(n), out(n);
  for (int j = 0; j < n; ++j) in[j] = (j & 1) ? -field.values[j] : field.values[j];

  auto* fin = reinterpret_cast<fftw_complex*>(in.data());
  auto* fout = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(forward ? plans.forward : plans.backward, fin, fout);

  const double edge_sign = ((n / 2) & 1) ? -1.0 : 1.0;
  const double scale = edge_sign / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) out[k] *= (k & 1) ? -scale : scale;

  ComplexField result = field;
  result.values = std::move(out);
  result.domain = forward ? Domain::Momentum : Domain::Position;
  return result;
}

}  // namespace

TransverseGrid::TransverseGrid(int n_points, double dx, double wavelength)
    : n_(n_points), dx_(dx), wavelength_(wavelength) {
  if (!is_power_of_two(n_points) || n_points < 2)
    throw ConfigError("grid n_points must be a power of two >= 2, got " +
                      std::to_string(n_points));
  if (!(dx > 0.0)) throw ConfigError("grid dx must be positive");
  if (!(wavelength > 0.0)) throw ConfigError("grid wavelength must be positive");
}

double TransverseGrid::dq() const { return 2.0 * std::numbers::pi / (n_ * dx_); }

double TransverseGrid::q(int k) const { return (k - n_ / 2) * dq(); }

std::vector<double> TransverseGrid::position_lattice() const {
  std::vector<double> xs(n_);
  for (int j = 0; j < n_; ++j) xs[j] = x(j);
  return xs;
}

std::vector<double> TransverseGrid::momentum_lattice() const {
  std::vector<double> qs(n_);
  for (int k = 0; k < n_; ++k) qs[k] = q(k);
  return qs;
}

double ComplexField::power() const {
  double p = 0.0;
  for (const cplx& v : values) p += std::norm(v);
  return p;
}

ComplexField zero_field(const TransverseGrid& grid, Domain domain, Ordering ordering) {
  return ComplexField{grid, std::vector<cplx>(grid.n_points(), cplx{0.0, 0.0}),
                      domain, ordering};
}

ComplexField to_momentum(const ComplexField& field) {
  if (field.domain != Domain::Position)
    throw DomainMismatchError("to_momentum requires a position-domain field");
  return centered_transform(field, /*forward=*/true);
}

ComplexField to_position(const ComplexField& field) {
  if (field.domain != Domain::Momentum)
    throw DomainMismatchError("to_position requires a momentum-domain field");
  return centered_transform(field, /*forward=*/false);
}

}  // namespace ghostsim
