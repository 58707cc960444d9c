#pragma once

#include <vector>

#include "rindlerqt/state.hpp"

namespace rindlerqt {

struct NegativityResult {
  /// ||rho^{T_A}||_1 - 1, i.e. twice the magnitude of the negative part of
  /// the partial-transpose spectrum. 1 for a maximally entangled 2 x d state.
  double negativity = 0.0;
  /// Spectrum of rho^{T_A}, ascending.
  std::vector<double> eigenvalues;
};

/// Partial transpose is taken on the qubit factor. Throws
/// UnphysicalStateError for states that fail validation.
NegativityResult negativity(const BipartiteState& state);

/// Peres-Horodecki test: min eigenvalue of rho^{T_A} >= -tolerances::ppt.
bool is_ppt(const BipartiteState& state);

}  // namespace rindlerqt
