#pragma once

#include <stdexcept>
#include <string>

#include "rindlerqt/linalg.hpp"

namespace rindlerqt {

/// Density matrix of a qubit (factor A) and a qutrit, or of a qubit and the
/// four-level accelerated qutrit mode (factor B).
///
/// Construction only checks the shape. Physicality (trace, hermiticity,
/// positivity) is established by validate_state().
class BipartiteState {
 public:
  BipartiteState(ComplexMatrix rho, Dims dims) : rho_(std::move(rho)), dims_(dims) {
    if (dims_.a != 2 || (dims_.b != 3 && dims_.b != 4)) {
      throw std::invalid_argument("BipartiteState: dims must be (2,3) or (2,4), got (" +
                                  std::to_string(dims_.a) + "," + std::to_string(dims_.b) + ")");
    }
    if (!rho_.is_square() || rho_.rows() != dims_.total()) {
      throw std::invalid_argument("BipartiteState: matrix side must equal dimA*dimB");
    }
  }

  const ComplexMatrix& rho() const noexcept { return rho_; }
  Dims dims() const noexcept { return dims_; }

 private:
  ComplexMatrix rho_;
  Dims dims_;
};

inline constexpr Dims kQubitQutrit{2, 3};
inline constexpr Dims kQubitAcceleratedQutrit{2, 4};

}  // namespace rindlerqt
