#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "rindlerqt/linalg.hpp"
#include "rindlerqt/state.hpp"

namespace rindlerqt {

/// Bloch-vector expansion of a qubit-qutrit state:
///   rho = (1/6) [ I + sum_i s_i sigma_i (x) I + sum_j t_j I (x) tau_j
///                   + sum_ij c_ij sigma_i (x) tau_j ].
/// Indices are zero-based here; c[i][j] multiplies sigma_{i+1} (x) tau_{j+1}.
struct FanoParams {
  std::array<double, 3> s{};
  std::array<double, 8> t{};
  std::array<std::array<double, 8>, 3> c{};

  friend bool operator==(const FanoParams&, const FanoParams&) = default;
};

/// Largest |x - y| over all 3 + 8 + 24 parameters.
double max_abs_diff(const FanoParams& x, const FanoParams& y);

/// Qubit generators sigma_1..3 and qutrit generators tau_1..8.
///
/// sigma_1 = |0><1| + |1><0|, sigma_2 = i(|0><1| - |1><0|),
/// sigma_3 = |1><1| - |0><0|; tau_1..tau_8 are the Gell-Mann matrices.
struct GeneratorSet {
  std::array<ComplexMatrix, 3> sigma;
  std::array<ComplexMatrix, 8> tau;
};

const GeneratorSet& generators();

/// Assembles rho from its Bloch vectors. Always Hermitian with unit trace;
/// positivity is not guaranteed.
BipartiteState fano_to_density(const FanoParams& p);

/// Builds rho entry by entry from the 36 closed-form element expressions of
/// the appendix table, typos included. Kept as an independent construction
/// to compare against fano_to_density.
BipartiteState appendix_a_density(const FanoParams& p);

/// s_i = tr(rho sigma_i (x) I), t_j = (3/2) tr(rho I (x) tau_j),
/// c_ij = (3/2) tr(rho sigma_i (x) tau_j).
/// Throws std::invalid_argument unless the state is 2x3 and Hermitian.
FanoParams density_to_fano(const BipartiteState& state);

struct ValidationReport {
  bool hermitian = false;
  double hermiticity_defect = 0.0;
  double trace_deviation = 0.0;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue = 0.0;
  bool is_physical = false;

  std::string describe() const;
};

ValidationReport validate_state(const ComplexMatrix& m, double tol_trace = tolerances::trace,
                                double tol_psd = tolerances::psd_slack);

/// Thrown by operations whose precondition is a physical state.
class UnphysicalStateError : public std::domain_error {
 public:
  UnphysicalStateError(const std::string& where, ValidationReport report)
      : std::domain_error(where + ": unphysical state (" + report.describe() + ")"),
        report_(report) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Throws UnphysicalStateError if the state fails validate_state().
void require_physical(const BipartiteState& state, const char* where);

}  // namespace rindlerqt
