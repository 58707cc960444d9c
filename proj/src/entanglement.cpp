#include "rindlerqt/entanglement.hpp"

#include "rindlerqt/fano.hpp"

namespace rindlerqt {

NegativityResult negativity(const BipartiteState& state) {
  require_physical(state, "negativity");
  NegativityResult result;
  result.eigenvalues =
      hermitian_eigenvalues(partial_transpose(state.rho(), state.dims(), Factor::A));
  double negative_mass = 0.0;
  for (double lambda : result.eigenvalues) {
    if (lambda < 0.0) negative_mass -= lambda;
  }
  result.negativity = 2.0 * negative_mass;
  return result;
}

bool is_ppt(const BipartiteState& state) {
  return negativity(state).eigenvalues.front() >= -tolerances::ppt;
}

}  // namespace rindlerqt
