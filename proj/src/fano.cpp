#include "rindlerqt/fano.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rindlerqt {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix ket_bra(std::size_t n, std::size_t row, std::size_t col) {
  ComplexMatrix m(n, n);
  m(row, col) = 1.0;
  return m;
}

GeneratorSet make_generators() {
  auto e2 = [](std::size_t r, std::size_t c) { return ket_bra(2, r, c); };
  auto e3 = [](std::size_t r, std::size_t c) { return ket_bra(3, r, c); };
  GeneratorSet g;
  g.sigma[0] = e2(0, 1) + e2(1, 0);
  g.sigma[1] = kI * (e2(0, 1) - e2(1, 0));
  g.sigma[2] = e2(1, 1) - e2(0, 0);

  g.tau[0] = e3(0, 1) + e3(1, 0);
  g.tau[1] = kI * (e3(1, 0) - e3(0, 1));
  g.tau[2] = e3(0, 0) - e3(1, 1);
  g.tau[3] = e3(0, 2) + e3(2, 0);
  g.tau[4] = kI * (e3(2, 0) - e3(0, 2));
  g.tau[5] = e3(1, 2) + e3(2, 1);
  g.tau[6] = kI * (e3(2, 1) - e3(1, 2));
  g.tau[7] = (e3(0, 0) + e3(1, 1) - 2.0 * e3(2, 2)) * (1.0 / std::sqrt(3.0));
  return g;
}

}  // namespace

double max_abs_diff(const FanoParams& x, const FanoParams& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(x.s[i] - y.s[i]));
  for (std::size_t j = 0; j < 8; ++j) worst = std::max(worst, std::abs(x.t[j] - y.t[j]));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 8; ++j) worst = std::max(worst, std::abs(x.c[i][j] - y.c[i][j]));
  }
  return worst;
}

const GeneratorSet& generators() {
  static const GeneratorSet set = make_generators();
  return set;
}

BipartiteState fano_to_density(const FanoParams& p) {
  const auto& g = generators();
  const auto i2 = ComplexMatrix::identity(2);
  const auto i3 = ComplexMatrix::identity(3);
  ComplexMatrix rho = ComplexMatrix::identity(6);
  for (std::size_t i = 0; i < 3; ++i) rho += p.s[i] * tensor(g.sigma[i], i3);
  for (std::size_t j = 0; j < 8; ++j) rho += p.t[j] * tensor(i2, g.tau[j]);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (p.c[i][j] != 0.0) rho += p.c[i][j] * tensor(g.sigma[i], g.tau[j]);
    }
  }
  rho *= 1.0 / 6.0;
  return BipartiteState(std::move(rho), kQubitQutrit);
}

BipartiteState appendix_a_density(const FanoParams& p) {
  // One-based accessors so each line reads like the printed table.
  auto s = [&](int i) { return p.s[i - 1]; };
  auto t = [&](int j) { return p.t[j - 1]; };
  auto c = [&](int ij) { return p.c[ij / 10 - 1][ij % 10 - 1]; };
  const double r3 = std::sqrt(3.0);
  const Complex i = kI;

  std::array<Complex, 37> a{};
  a[1] = (1 + s(3) + t(3) - c(33) + t(8) / r3 - c(38) / r3) / 6.0;
  a[2] = (t(1) - i * t(2) - c(31) + i * c(32)) / 6.0;
  a[3] = (t(4) - i * t(5) - c(34) + i * c(35)) / 6.0;
  a[4] = (s(1) + i * s(2) + c(13) + i * c(23) + c(18) / r3 + i * c(28) / r3) / 6.0;
  a[5] = (c(11) - c(22) + i * c(21) - i * c(12)) / 6.0;
  a[6] = (c(14) + c(25) + i * c(24) - i * c(15)) / 6.0;
  a[7] = (t(1) + i * t(2) - c(31) - i * c(32)) / 6.0;
  a[8] = (1 - s(3) - t(3) + t(8) / r3 + c(33) - c(38) / r3) / 6.0;
  a[9] = (t(6) - i * t(7) - c(36) + i * c(37)) / 6.0;
  a[10] = (c(11) - c(22) + i * c(12) - i * c(21)) / 6.0;
  // Printed as "-c13 + -i c23".
  a[11] = (s(1) + i * s(2) - c(13) - i * c(23) + c(18) / r3 + i * c(28) / r3) / 6.0;
  a[12] = (c(16) + c(27) + i * c(26) - i * c(17)) / 6.0;
  a[13] = (t(4) + i * t(5) - c(34) - i * c(35)) / 6.0;
  a[14] = (t(6) + i * t(7) - c(36) - i * c(37)) / 6.0;
  a[15] = (1 - s(3) - 2 * t(8) / r3 + 2 * c(38) / r3) / 6.0;
  a[16] = (c(14) - c(25) + i * c(15) + i * c(24)) / 6.0;
  a[17] = (c(16) - c(27) + i * c(17) + i * c(26)) / 6.0;
  a[18] = (s(1) + i * s(2) - 2 * c(28) / r3 - 2 * c(18) / r3) / 6.0;
  a[19] = (s(1) + i * s(2) + c(13) - i * c(23) + c(18) / r3 - i * c(28) / r3) / 6.0;
  a[20] = (c(11) - c(22) - i * c(12) - i * c(21)) / 6.0;
  a[21] = (c(14) - c(25) - i * c(15) - i * c(24)) / 6.0;
  a[22] = (1 + s(3) + t(3) + t(8) / r3 + c(33) + c(38) / r3) / 6.0;
  a[23] = (t(1) - i * t(2) + c(31) - i * c(32)) / 6.0;
  a[24] = (t(4) - i * t(5) + c(34) - i * c(35)) / 6.0;
  a[25] = (c(11) + c(22) + i * c(12) - i * c(21)) / 6.0;
  a[26] = (s(1) - i * s(2) - c(13) + i * c(23) + c(18) / r3 - i * c(28) / r3) / 6.0;
  a[27] = (c(16) - c(27) - i * c(17) - i * c(26)) / 6.0;
  a[28] = -(t(1) + i * t(2) + c(31) + i * c(32)) / 6.0;
  a[29] = (1 + s(3) - t(3) + t(8) / r3 - c(33) + c(38) / r3) / 6.0;
  a[30] = (t(6) - i * t(7) + c(36) - i * c(37)) / 6.0;
  a[31] = (c(14) + c(25) + i * c(15) + i * c(24)) / 6.0;
  a[32] = (c(16) + c(27) + i * c(17) - i * c(26)) / 6.0;
  a[33] = (s(1) - i * s(2) + 2.0 * i * c(28) / r3 - 2 * c(18) / r3) / 6.0;
  a[34] = (t(6) + i * t(7) + c(36) + i * c(37)) / 6.0;
  a[35] = (t(4) + i * t(5) + c(34) + i * c(35)) / 6.0;
  a[36] = (1 + s(3) - 2 * t(8) / r3 - 2 * c(38) / r3) / 6.0;

  // Row-major placement: element l sits at ((l-1)/6, (l-1)%6) in the basis
  // 00, 01, 02, 10, 11, 12.
  ComplexMatrix rho(6, 6);
  for (std::size_t l = 1; l <= 36; ++l) rho((l - 1) / 6, (l - 1) % 6) = a[l];
  return BipartiteState(std::move(rho), kQubitQutrit);
}

FanoParams density_to_fano(const BipartiteState& state) {
  if (state.dims() != kQubitQutrit) {
    throw std::invalid_argument("density_to_fano: state must be a 2x3 qubit-qutrit state");
  }
  if (!is_hermitian(state.rho())) {
    throw std::invalid_argument("density_to_fano: state is not Hermitian");
  }
  const auto& g = generators();
  const auto i2 = ComplexMatrix::identity(2);
  const auto i3 = ComplexMatrix::identity(3);
  auto expectation = [&](const ComplexMatrix& op) { return (state.rho() * op).trace().real(); };
  // tr(sigma_i sigma_k) = 2 delta_ik and tr(tau_j tau_l) = 2 delta_jl, so the
  // qutrit-side coefficients carry a factor 6 / (2 * 2).
  FanoParams p;
  for (std::size_t i = 0; i < 3; ++i) p.s[i] = expectation(tensor(g.sigma[i], i3));
  for (std::size_t j = 0; j < 8; ++j) p.t[j] = 1.5 * expectation(tensor(i2, g.tau[j]));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      p.c[i][j] = 1.5 * expectation(tensor(g.sigma[i], g.tau[j]));
    }
  }
  return p;
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os.precision(6);
  os << "hermitian=" << (hermitian ? "yes" : "no") << " defect=" << hermiticity_defect
     << " |trace-1|=" << trace_deviation << " min_eigenvalue=" << min_eigenvalue
     << " physical=" << (is_physical ? "yes" : "no");
  return os.str();
}

ValidationReport validate_state(const ComplexMatrix& m, double tol_trace, double tol_psd) {
  if (!m.is_square()) throw std::invalid_argument("validate_state: matrix is not square");
  ValidationReport report;
  report.hermiticity_defect = hermiticity_defect(m);
  report.hermitian = report.hermiticity_defect <= tolerances::hermiticity;
  report.trace_deviation = std::abs(m.trace() - Complex{1.0, 0.0});

  ComplexMatrix hermitian_part = (m + m.adjoint()) * Complex{0.5};
  report.min_eigenvalue = hermitian_eigenvalues(hermitian_part).front();
  report.is_physical = report.hermitian && report.trace_deviation <= tol_trace &&
                       report.min_eigenvalue >= -tol_psd;
  return report;
}

void require_physical(const BipartiteState& state, const char* where) {
  auto report = validate_state(state.rho());
  if (!report.is_physical) throw UnphysicalStateError(where, report);
}

}  // namespace rindlerqt
