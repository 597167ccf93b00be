#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <limits>

namespace ghostsim {

/// Counter-based random stream (Philox-4x32-10).
///
/// A stream is keyed by (master_seed, shot_index, role); draws within a
/// stream advance only a local block counter, so shot results never depend
/// on thread scheduling or on how many values other shots consumed.
class PhiloxStream {
 public:
  enum class Role : std::uint32_t {
    Thermal = 0,
    Vacuum = 1,
    Pdc1 = 2,
    Pdc2 = 3,
    Detector = 4,
  };

  PhiloxStream(std::uint64_t master_seed, std::uint64_t shot_index, Role role);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();
  /// Uniform in (0, 1]; safe as a log() argument.
  double next_unit_open();
  /// Circularly symmetric complex Gaussian with <|z|^2> = variance
  /// (|z|^2 exactly exponential, phase uniform).
  std::complex<double> next_complex_normal(double variance);

  /// Raw Philox-4x32-10 block function (exposed for known-answer tests).
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                            std::array<std::uint32_t, 2> key);

  // UniformRandomBitGenerator interface for std:: distributions.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_id_;  // shot index low word, high word | role
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;  // empty
};

}  // namespace ghostsim
