#include "rindlerqt/random.hpp"

#include <cmath>
#include <numbers>

namespace rindlerqt {

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

RindlerParam Sampler::rindler_param() {
  return RindlerParam((1.0 - uniform()) * RindlerParam::kMax);
}

FanoParams Sampler::fano_params() {
  FanoParams p;
  for (auto& x : p.s) x = uniform(-1.0, 1.0);
  for (auto& x : p.t) x = uniform(-1.0, 1.0);
  for (auto& row : p.c) {
    for (auto& x : row) x = uniform(-1.0, 1.0);
  }
  return p;
}

ComplexMatrix Sampler::density_matrix(std::size_t n) {
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      g(i, j) = Complex{re, im};
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetry.
  for (std::size_t i = 0; i < n; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

ComplexMatrix Sampler::unitary(std::size_t n) {
  ComplexMatrix u = ComplexMatrix::identity(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double theta = uniform(0.0, 2.0 * std::numbers::pi);
      const double phi = uniform(0.0, 2.0 * std::numbers::pi);
      const Complex phase = std::polar(1.0, phi);
      ComplexMatrix g = ComplexMatrix::identity(n);
      g(p, p) = std::cos(theta);
      g(q, q) = std::cos(theta);
      g(p, q) = -std::sin(theta) * std::conj(phase);
      g(q, p) = std::sin(theta) * phase;
      u = g * u;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
    for (std::size_t j = 0; j < n; ++j) u(k, j) *= phase;
  }
  return u;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace rindlerqt
