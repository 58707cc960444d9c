#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rindlerqt/entanglement.hpp"
#include "rindlerqt/families.hpp"
#include "rindlerqt/random.hpp"
#include "rindlerqt/rindler.hpp"

using namespace rindlerqt;

namespace {

BipartiteState pure(const std::vector<Complex>& psi, Dims d) {
  double norm = 0.0;
  for (const auto& a : psi) norm += std::norm(a);
  std::vector<Complex> v = psi;
  for (auto& a : v) a /= std::sqrt(norm);
  return BipartiteState(ComplexMatrix::outer(v, v), d);
}

}  // namespace

TEST_CASE("maximally entangled qubit-qutrit state has negativity one") {
  // (|00> + |11>)/sqrt(2)
  const BipartiteState bell = pure({1, 0, 0, 0, 1, 0}, kQubitQutrit);
  const NegativityResult n = negativity(bell);
  CHECK(n.negativity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(n.eigenvalues.front() == doctest::Approx(-0.5));
  CHECK_FALSE(is_ppt(bell));
  CHECK(std::is_sorted(n.eigenvalues.begin(), n.eigenvalues.end()));
}

TEST_CASE("pure state negativity equals 2 sqrt(l0 l1) of the Schmidt weights") {
  // cos(x)|00> + sin(x)|12>: negativity = 2 |sin x cos x| = |sin 2x|
  for (double x : {0.0, 0.1, 0.4, 0.7}) {
    const BipartiteState st =
        pure({std::cos(x), 0, 0, 0, 0, std::sin(x)}, kQubitQutrit);
    CHECK(negativity(st).negativity == doctest::Approx(std::abs(std::sin(2 * x))).epsilon(1e-13));
  }
}

TEST_CASE("product states are PPT with zero negativity") {
  Sampler s(31);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteState st(tensor(s.density_matrix(2), s.density_matrix(3)), kQubitQutrit);
    CHECK(std::abs(negativity(st).negativity) < 1e-13);
    CHECK(is_ppt(st));
    const BipartiteState st4(tensor(s.density_matrix(2), s.density_matrix(4)),
                             kQubitAcceleratedQutrit);
    CHECK(std::abs(negativity(st4).negativity) < 1e-13);
  }
}

TEST_CASE("negativity agrees with the reference spectrum") {
  Sampler s(32);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix rho = s.density_matrix(6);
    const NegativityResult n = negativity(BipartiteState(rho, kQubitQutrit));
    CHECK(std::abs(n.negativity - oracle::negativity(rho, 2, 3)) < 1e-12);
    CHECK(oracle::max_diff(n.eigenvalues, oracle::eigenvalues(oracle::transpose_a(rho, 2, 3))) <
          1e-12);
    const ComplexMatrix rho8 = s.density_matrix(8);
    CHECK(std::abs(negativity(BipartiteState(rho8, kQubitAcceleratedQutrit)).negativity -
                   oracle::negativity(rho8, 2, 4)) < 1e-12);
  }
}

TEST_CASE("negativity is invariant under local unitaries") {
  Sampler s(33);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = s.density_matrix(6);
    const ComplexMatrix u = tensor(s.unitary(2), s.unitary(3));
    const ComplexMatrix rotated = u * rho * u.adjoint();
    CHECK(negativity(BipartiteState(rotated, kQubitQutrit)).negativity ==
          doctest::Approx(negativity(BipartiteState(rho, kQubitQutrit)).negativity)
              .epsilon(1e-11));
  }
}

TEST_CASE("negativity does not increase under the acceleration channels") {
  Sampler s(34);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteState st(s.density_matrix(6), kQubitQutrit);
    const RindlerParam rq = s.rindler_param();
    const RindlerParam rt = s.rindler_param();
    const double before = negativity(st).negativity;
    CHECK(negativity(accelerate_qubit(st, rq)).negativity <= before + 1e-12);
    CHECK(negativity(accelerate_qutrit(st, rt)).negativity <= before + 1e-12);
    CHECK(negativity(accelerate_both(st, rq, rt)).negativity <= before + 1e-12);
  }
}

TEST_CASE("negativity rejects unphysical states") {
  const double diag[] = {0.6, 0.6, -0.2, 0.0, 0.0, 0.0};
  const BipartiteState bad(ComplexMatrix::diagonal(diag), kQubitQutrit);
  CHECK_THROWS_AS(negativity(bad), UnphysicalStateError);
  CHECK_THROWS_AS(is_ppt(bad), UnphysicalStateError);
}

TEST_CASE("family reference values") {
  CHECK(negativity(one_parameter(0.0)).negativity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(negativity(one_parameter(0.5)).negativity == doctest::Approx(0.5).epsilon(1e-14));
}
