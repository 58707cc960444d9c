#pragma once

// Every numerical threshold used by the library lives here.

namespace rindlerqt::tolerances {

/// max |M[i][j] - conj(M[j][i])| for a matrix to count as Hermitian.
inline constexpr double hermiticity = 1e-12;

/// Smallest eigenvalue allowed for a state to count as positive semidefinite.
inline constexpr double psd_slack = 1e-10;

/// |trace - 1| allowed for a normalized state.
inline constexpr double trace = 1e-10;

/// Off-diagonal Frobenius norm (relative to max(1, ||H||_F)) at which the
/// Jacobi eigensolver stops.
inline constexpr double eigen_offdiag = 1e-13;

/// Generator hermiticity / tracelessness / orthogonality.
inline constexpr double generator = 1e-14;

/// Partial-transpose eigenvalue threshold used by the PPT test.
inline constexpr double ppt = 1e-10;

}  // namespace rindlerqt::tolerances
