#pragma once

#include <cstdint>
#include <random>

#include "rindlerqt/fano.hpp"
#include "rindlerqt/linalg.hpp"
#include "rindlerqt/rindler.hpp"

namespace rindlerqt {

/// Reproducible sampler. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; doubles are formed from the top 53 bits
/// so no implementation-defined distribution is involved.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in (0, pi/4].
  RindlerParam rindler_param();

  /// Entries of s, t, c uniform in [-1, 1). Not necessarily physical.
  FanoParams fano_params();
  /// G G^dagger / tr(G G^dagger) with G entries uniform in the unit square.
  ComplexMatrix density_matrix(std::size_t n);
  /// Product of random Givens-type plane rotations with random phases.
  ComplexMatrix unitary(std::size_t n);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a user seed with a stream tag so independent consumers of one seed
/// draw unrelated sequences.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace rindlerqt
