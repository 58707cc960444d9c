#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rindlerqt/tolerances.hpp"

namespace rindlerqt {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for the small operators in this
/// library (at most a few dozen rows), so there is no sparsity and no
/// expression templates.
class ComplexMatrix {
 public:
  /// Empty 0x0 matrix; only useful as a placeholder.
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |ket><bra| for real or complex column vectors.
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Factor dimensions of a bipartite operator: A is the left tensor factor.
struct Dims {
  std::size_t a;
  std::size_t b;
  std::size_t total() const noexcept { return a * b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Factor { A, B };

/// Kronecker product: entry (i1*b.rows+i2, j1*b.cols+j2) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out `traced`. Tracing B yields a dA x dA matrix.
/// Throws std::invalid_argument if m is not square with side dA*dB.
ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Factor traced);

/// Transposes the `transposed` factor only.
/// Throws std::invalid_argument if m is not square with side dA*dB.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Factor transposed);

/// Reorders the tensor factors of the row space. `dims` lists the factor
/// dimensions in the current order; output factor k is input factor perm[k].
ComplexMatrix permute_row_factors(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                  std::span<const std::size_t> perm);

/// All eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic Jacobi sweeps on the real symmetric embedding [[Re, -Im], [Im, Re]],
/// whose spectrum is that of h with every eigenvalue doubled. Iterates until
/// the off-diagonal norm is below tolerances::eigen_offdiag * max(1, ||h||_F).
/// Throws std::invalid_argument if h is not square or not Hermitian within tol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          double tol = tolerances::hermiticity);

/// max |a(i,j) - b(i,j)|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |m(i,j) - conj(m(j,i))|; throws if m is not square.
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = tolerances::hermiticity);

}  // namespace rindlerqt
