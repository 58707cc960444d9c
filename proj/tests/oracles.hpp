#pragma once

// Independent reference implementations used only by the tests. They are
// written from index formulas rather than from the library routines so that
// a shared mistake is unlikely.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "rindlerqt/linalg.hpp"
#include "rindlerqt/random.hpp"

namespace oracle {

using rindlerqt::Complex;
using rindlerqt::ComplexMatrix;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

// <i k| m^{T_A} |j l> = <j k| m |i l>
inline ComplexMatrix transpose_a(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = m(j * db + k, i * db + l);
  return out;
}

inline ComplexMatrix trace_b(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  return out;
}

inline ComplexMatrix trace_a(const ComplexMatrix& m, std::size_t da, std::size_t db) {
  ComplexMatrix out(db, db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

/// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

inline double negativity(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  double sum = 0.0;
  for (double l : eigenvalues(transpose_a(rho, da, db))) sum += std::abs(l);
  return sum - 1.0;
}

// Kraus operators <m|_II V for the qubit mode: K_0 = diag(c, 1), K_1 = s|1><0|.
inline std::vector<ComplexMatrix> qubit_kraus(double r) {
  const double c = std::cos(r), s = std::sin(r);
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0(0, 0) = c;
  k0(1, 1) = 1.0;
  k1(1, 0) = s;
  return {k0, k1};
}

// Kraus operators for the qutrit mode, region-I basis {0, D, U, P}, one per
// region-II basis state {0, D, U, P}. Input levels 0, 1, 2 = vacuum, D, U.
inline std::vector<ComplexMatrix> qutrit_kraus(double r) {
  const double c = std::cos(r), s = std::sin(r);
  std::vector<ComplexMatrix> k(4, ComplexMatrix(4, 3));
  // region II = 0
  k[0](0, 0) = c * c;
  k[0](1, 1) = c;
  k[0](2, 2) = c;
  // region II = D
  k[1](2, 0) = s * c;
  k[1](3, 1) = -s;
  // region II = U
  k[2](1, 0) = s * c;
  k[2](3, 2) = s;
  // region II = P
  k[3](3, 0) = s * s;
  return k;
}

inline ComplexMatrix apply_kraus(const std::vector<ComplexMatrix>& ks, const ComplexMatrix& rho) {
  ComplexMatrix out(ks.front().rows(), ks.front().rows());
  for (const auto& k : ks) out += k * rho * k.adjoint();
  return out;
}

/// Lifts single-side Kraus sets to the bipartite space.
inline std::vector<ComplexMatrix> on_a(const std::vector<ComplexMatrix>& ks, std::size_t db) {
  std::vector<ComplexMatrix> out;
  for (const auto& k : ks) out.push_back(kron(k, ComplexMatrix::identity(db)));
  return out;
}

inline std::vector<ComplexMatrix> on_b(const std::vector<ComplexMatrix>& ks) {
  std::vector<ComplexMatrix> out;
  for (const auto& k : ks) out.push_back(kron(ComplexMatrix::identity(2), k));
  return out;
}

inline ComplexMatrix random_hermitian(rindlerqt::Sampler& s, std::size_t n) {
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = s.uniform(-1.0, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = Complex(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

inline ComplexMatrix random_matrix(rindlerqt::Sampler& s, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Complex(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
  return m;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace oracle
