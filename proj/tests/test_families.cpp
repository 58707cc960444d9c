#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rindlerqt/entanglement.hpp"
#include "rindlerqt/families.hpp"

using namespace rindlerqt;

TEST_CASE("one-parameter family is a physical state on its whole range") {
  for (double p : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    const BipartiteState st = one_parameter(p);
    CHECK(std::abs(st.rho().trace() - 1.0) < 1e-15);
    CHECK(validate_state(st.rho()).is_physical);
    CHECK(st.rho()(0, 5).real() == doctest::Approx(p / 2));
    CHECK(st.rho()(2, 3).real() == doctest::Approx((1 - 2 * p) / 2));
  }
  CHECK_THROWS_AS(one_parameter(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(one_parameter(0.51), std::invalid_argument);
  CHECK_THROWS_AS(one_parameter(std::nan("")), std::invalid_argument);
}

TEST_CASE("one-parameter negativity from the swapped coherences") {
  // Partial transposition moves each coherence into the other pair's block:
  // eigenvalues (1-2p)/2 +- p/2 and p/2 +- (1-2p)/2, so E = |1 - 3p|.
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5}) {
    CHECK(negativity(one_parameter(p)).negativity ==
          doctest::Approx(std::abs(1.0 - 3.0 * p)).epsilon(1e-13).scale(1.0));
    CHECK(std::abs(negativity(one_parameter(p)).negativity -
                   oracle::negativity(one_parameter(p).rho(), 2, 3)) < 1e-13);
  }
}

TEST_CASE("two-parameter family follows its constraint") {
  const TwoParameter f{0.1, 0.2};
  CHECK(f.gamma + 2 * f.alpha + 3 * f.beta() == doctest::Approx(1.0));
  const BipartiteState st = two_parameter(0.1, 0.2);
  CHECK(std::abs(st.rho().trace() - 1.0) < 1e-15);
  CHECK(validate_state(st.rho()).is_physical);
  CHECK(st.rho()(1, 3).real() == doctest::Approx((f.beta() - f.gamma) / 2));
}

TEST_CASE("two-parameter negativity is max(0, |beta - gamma| - 2 beta)") {
  for (double alpha = 0.0; alpha <= 0.5; alpha += 0.05) {
    for (double gamma = 0.0; gamma <= 1.0 - 2 * alpha + 1e-12; gamma += 0.05) {
      const TwoParameter f{alpha, gamma};
      if (f.beta() < 0.0) continue;
      const double expected = std::max(0.0, std::abs(f.beta() - f.gamma) - 2 * f.beta());
      CHECK(negativity(two_parameter(alpha, gamma)).negativity ==
            doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("two-parameter rejects unphysical parameters with the failed condition") {
  try {
    two_parameter(0.5, -1.5);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(beta+gamma)/2 = -0.5 < 0") != std::string::npos);
  }
  // alpha = beta = 1/2 forces gamma = -3/2.
  CHECK_THROWS_AS(two_parameter(0.5, 1.0 - 2 * 0.5 - 3 * 0.5), std::invalid_argument);
  CHECK_THROWS_AS(two_parameter(0.6, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(two_parameter(-0.1, 0.5), std::invalid_argument);
}

TEST_CASE("example-one state is physical only at zero polarization") {
  CHECK(validate_state(family_state(ExampleOne{0.0, 0.0}).rho()).is_physical);
  for (double s3 : {-1.0, -0.3, 0.0, 0.3, 1.0}) {
    for (double t3 : {-1.0, -0.3, 0.0, 0.3, 1.0}) {
      if (s3 == 0.0 && t3 == 0.0) continue;
      CHECK_FALSE(validate_state(family_state(ExampleOne{s3, t3}).rho()).is_physical);
    }
  }
  const FanoParams p = example_one(0.2, -0.4);
  CHECK(p.s[2] == 0.2);
  CHECK(p.t[2] == -0.4);
  CHECK(p.c[0][0] == 1.0);
  CHECK(p.c[1][1] == -1.0);
  CHECK(p.c[2][2] == 1.0);
}

TEST_CASE("family names and descriptions") {
  CHECK(family_name(OneParameter{0.5}) == "one-parameter");
  CHECK(family_name(TwoParameter{}) == "two-parameter");
  CHECK(family_name(ExampleOne{}) == "example-one");
  CHECK(describe(OneParameter{0.25}) == "one-parameter(p=0.25)");
  CHECK(describe(TwoParameter{0.0, 1.0}).find("beta=0") != std::string::npos);
}
