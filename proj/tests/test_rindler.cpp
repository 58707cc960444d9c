#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rindlerqt/rindler.hpp"
#include "rindlerqt/fano.hpp"
#include "rindlerqt/random.hpp"

using namespace rindlerqt;

namespace {

ComplexMatrix embed_qutrit(const ComplexMatrix& rho) {
  // Places a (2,3) operator into (2,4) with the new level left empty.
  ComplexMatrix out(8, 8);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) out((i / 3) * 4 + i % 3, (j / 3) * 4 + j % 3) = rho(i, j);
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).front(); }

}  // namespace

TEST_CASE("Rindler parameter range") {
  CHECK_NOTHROW(RindlerParam(0.0));
  CHECK_NOTHROW(RindlerParam(RindlerParam::kMax));
  CHECK_THROWS_AS(RindlerParam(-1e-9), std::invalid_argument);
  CHECK_THROWS_AS(RindlerParam(0.8), std::invalid_argument);
  CHECK_THROWS_AS(RindlerParam(std::nan("")), std::invalid_argument);
  const RindlerParam r(0.3);
  CHECK(r.cos() == std::cos(0.3));
  CHECK(r.sin() == std::sin(0.3));
}

TEST_CASE("Rindler parameter from frequency and acceleration") {
  // tan r = exp(-pi omega c / a)
  const RindlerParam r = rindler_param_from_physical(1.0, 2.0, 1.0);
  CHECK(std::tan(r.value()) == doctest::Approx(std::exp(-std::numbers::pi / 2.0)));
  CHECK(rindler_param_from_physical(1.0, 1e12, 1.0).value() ==
        doctest::Approx(RindlerParam::kMax).epsilon(1e-10));
  CHECK(rindler_param_from_physical(1.0, 1e-3, 1.0).value() < 1e-100);
  CHECK_THROWS_AS(rindler_param_from_physical(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(rindler_param_from_physical(1.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("mode isometries are isometries") {
  for (double r : {0.0, 0.2, 0.5, RindlerParam::kMax}) {
    const ComplexMatrix v = qubit_isometry(RindlerParam(r));
    const ComplexMatrix w = qutrit_isometry(RindlerParam(r));
    CHECK(v.rows() == 4);
    CHECK(w.rows() == 16);
    CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(2)) < 1e-15);
    CHECK(max_abs_diff(w.adjoint() * w, ComplexMatrix::identity(3)) < 1e-15);
  }
}

TEST_CASE("isometry columns") {
  const RindlerParam r(0.4);
  const double c = r.cos(), s = r.sin();
  const ComplexMatrix v = qubit_isometry(r);
  CHECK(v(0, 0) == Complex(c));  // |00>
  CHECK(v(3, 0) == Complex(s));  // |11>
  CHECK(v(2, 1) == Complex(1.0));
  const ComplexMatrix w = qutrit_isometry(r);
  auto row = [](std::size_t i, std::size_t ii) { return i * 4 + ii; };
  CHECK(w(row(0, 0), 0).real() == doctest::Approx(c * c));
  CHECK(w(row(2, 1), 0).real() == doctest::Approx(s * c));
  CHECK(w(row(1, 2), 0).real() == doctest::Approx(s * c));
  CHECK(w(row(3, 3), 0).real() == doctest::Approx(s * s));
  CHECK(w(row(1, 0), 1).real() == doctest::Approx(c));
  CHECK(w(row(3, 1), 1).real() == doctest::Approx(-s));
  CHECK(w(row(2, 0), 2).real() == doctest::Approx(c));
  CHECK(w(row(3, 2), 2).real() == doctest::Approx(s));
}

TEST_CASE("channels agree with Kraus-operator sums") {
  Sampler s(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix rho = s.density_matrix(6);
    const RindlerParam rq = s.rindler_param();
    const RindlerParam rt = s.rindler_param();
    const auto kq = oracle::qubit_kraus(rq.value());
    const auto kt = oracle::qutrit_kraus(rt.value());

    const ComplexMatrix q = oracle::apply_kraus(oracle::on_a(kq, 3), rho);
    CHECK(max_abs_diff(apply_qubit_channel(rho, 3, rq), q) < 1e-15);

    const ComplexMatrix t = oracle::apply_kraus(oracle::on_b(kt), rho);
    CHECK(max_abs_diff(apply_qutrit_channel(rho, rt), t) < 1e-15);

    std::vector<ComplexMatrix> joint;
    for (const auto& a : kq)
      for (const auto& b : kt) joint.push_back(oracle::kron(a, b));
    const ComplexMatrix both = oracle::apply_kraus(joint, rho);
    CHECK(max_abs_diff(apply_both_channel(rho, rq, rt), both) < 1e-15);

    const ComplexMatrix rho8 = s.density_matrix(8);
    const ComplexMatrix q8 = oracle::apply_kraus(oracle::on_a(kq, 4), rho8);
    CHECK(max_abs_diff(apply_qubit_channel(rho8, 4, rq), q8) < 1e-15);
  }
}

TEST_CASE("channels preserve trace and positivity") {
  Sampler s(22);
  for (int trial = 0; trial < 30; ++trial) {
    const BipartiteState st(s.density_matrix(6), kQubitQutrit);
    const RindlerParam rq = s.rindler_param();
    const RindlerParam rt = s.rindler_param();
    for (const ChannelMode& mode :
         {ChannelMode::qubit_only(rq), ChannelMode::qutrit_only(rt), ChannelMode::both(rq, rt)}) {
      const BipartiteState out = accelerate(st, mode);
      CHECK(out.dims() == output_dims(mode.kind()));
      CHECK(std::abs(out.rho().trace() - 1.0) < 1e-13);
      CHECK(is_hermitian(out.rho()));
      CHECK(min_eigenvalue(out.rho()) >= -tolerances::psd_slack);
    }
  }
}

TEST_CASE("zero acceleration is the identity or the level embedding") {
  Sampler s(23);
  const ComplexMatrix rho = s.density_matrix(6);
  const RindlerParam zero(0.0);
  CHECK(max_abs_diff(apply_qubit_channel(rho, 3, zero), rho) < 1e-16);
  CHECK(max_abs_diff(apply_qutrit_channel(rho, zero), embed_qutrit(rho)) < 1e-16);
  CHECK(max_abs_diff(apply_both_channel(rho, zero, zero), embed_qutrit(rho)) < 1e-16);
}

TEST_CASE("joint channel factorizes in either order") {
  Sampler s(24);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteState st(s.density_matrix(6), kQubitQutrit);
    const RindlerParam rq = s.rindler_param();
    const RindlerParam rt = s.rindler_param();
    const ComplexMatrix both = accelerate_both(st, rq, rt).rho();
    const ComplexMatrix qt = accelerate_qubit(accelerate_qutrit(st, rt), rq).rho();
    const ComplexMatrix tq = accelerate_qutrit(accelerate_qubit(st, rq), rt).rho();
    CHECK(max_abs_diff(both, qt) < 1e-15);
    CHECK(max_abs_diff(both, tq) < 1e-15);
  }
}

TEST_CASE("qubit channel on |00><00|") {
  ComplexMatrix rho(6, 6);
  rho(0, 0) = 1.0;
  const RindlerParam r(0.6);
  const ComplexMatrix out = apply_qubit_channel(rho, 3, r);
  CHECK(out(0, 0).real() == doctest::Approx(r.cos() * r.cos()));
  CHECK(out(3, 3).real() == doctest::Approx(r.sin() * r.sin()));
  CHECK(std::abs(out(0, 3)) == 0.0);
}

TEST_CASE("Choi matrices certify complete positivity and trace preservation") {
  for (double r : {0.0, 0.3, RindlerParam::kMax}) {
    const RindlerParam p(r);
    for (const ChannelMode& mode :
         {ChannelMode::qubit_only(p), ChannelMode::qutrit_only(p), ChannelMode::both(p, p)}) {
      const ComplexMatrix choi = choi_matrix(mode);
      const std::size_t out = mode.kind() == Channel::Qubit ? 6 : 8;
      REQUIRE(choi.rows() == 6 * out);
      CHECK(std::abs(choi.trace() - 1.0) < 1e-14);
      CHECK(min_eigenvalue(choi) >= -tolerances::psd_slack);
      // Tracing the output leaves I/6 on the input side.
      const ComplexMatrix in = partial_trace(choi, Dims{6, out}, Factor::B);
      CHECK(max_abs_diff(in, ComplexMatrix::identity(6) * Complex(1.0 / 6.0)) < 1e-15);
      const auto ev = oracle::eigenvalues(choi);
      CHECK(ev.front() >= -1e-12);
    }
  }
}

TEST_CASE("state-level channels reject unphysical input") {
  const double diag[] = {0.6, 0.6, -0.2, 0.0, 0.0, 0.0};
  const BipartiteState bad(ComplexMatrix::diagonal(diag), kQubitQutrit);
  const RindlerParam r(0.1);
  CHECK_THROWS_AS(accelerate_qubit(bad, r), UnphysicalStateError);
  CHECK_THROWS_AS(accelerate_qutrit(bad, r), UnphysicalStateError);
  CHECK_THROWS_AS(accelerate_both(bad, r, r), UnphysicalStateError);
  const BipartiteState eight(ComplexMatrix::identity(8) * Complex(0.125), kQubitAcceleratedQutrit);
  CHECK_THROWS_AS(accelerate_qutrit(eight, r), std::invalid_argument);
  CHECK_NOTHROW(accelerate_qubit(eight, r));
}

TEST_CASE("channel names") {
  CHECK(channel_name(Channel::Qubit) == "qubit");
  CHECK(channel_name(Channel::Qutrit) == "qutrit");
  CHECK(channel_name(Channel::Both) == "both");
}
