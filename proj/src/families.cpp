#include "rindlerqt/families.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rindlerqt {

namespace {

constexpr std::size_t idx(std::size_t qubit, std::size_t qutrit) { return qubit * 3 + qutrit; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

FanoParams example_one(double s3, double t3) {
  FanoParams p;
  p.s[2] = s3;
  p.t[2] = t3;
  p.c[0][0] = 1.0;
  p.c[1][1] = -1.0;
  p.c[2][2] = 1.0;
  return p;
}

BipartiteState one_parameter(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::invalid_argument("one_parameter: p must lie in [0, 1/2], got " + fmt(p));
  }
  const double a = p / 2.0;
  const double b = (1.0 - 2.0 * p) / 2.0;
  ComplexMatrix rho(6, 6);
  rho(idx(0, 0), idx(0, 0)) = a;
  rho(idx(0, 1), idx(0, 1)) = a;
  rho(idx(1, 1), idx(1, 1)) = a;
  rho(idx(1, 2), idx(1, 2)) = a;
  rho(idx(0, 2), idx(0, 2)) = b;
  rho(idx(1, 0), idx(1, 0)) = b;
  rho(idx(0, 0), idx(1, 2)) = a;
  rho(idx(1, 2), idx(0, 0)) = a;
  rho(idx(0, 2), idx(1, 0)) = b;
  rho(idx(1, 0), idx(0, 2)) = b;
  return BipartiteState(std::move(rho), kQubitQutrit);
}

BipartiteState two_parameter(double alpha, double gamma) {
  const TwoParameter family{alpha, gamma};
  const double beta = family.beta();
  const double mixed = (beta + gamma) / 2.0;
  const double coherence = (beta - gamma) / 2.0;
  const double slack = tolerances::psd_slack;

  auto reject = [&](const std::string& what) {
    throw std::invalid_argument("two_parameter(alpha=" + fmt(alpha) + ", gamma=" + fmt(gamma) +
                                ", beta=" + fmt(beta) + "): " + what);
  };
  if (!std::isfinite(alpha) || !std::isfinite(gamma)) reject("parameters must be finite");
  if (beta < -slack) reject("beta = " + fmt(beta) + " < 0");
  if (alpha < -slack) reject("alpha = " + fmt(alpha) + " < 0");
  if (mixed < -slack) reject("(beta+gamma)/2 = " + fmt(mixed) + " < 0");
  if (std::abs(coherence) > mixed + slack) {
    reject("|beta-gamma|/2 = " + fmt(std::abs(coherence)) + " > (beta+gamma)/2 = " + fmt(mixed));
  }

  ComplexMatrix rho(6, 6);
  rho(idx(0, 0), idx(0, 0)) = beta;
  rho(idx(0, 1), idx(0, 1)) = mixed;
  rho(idx(0, 2), idx(0, 2)) = alpha;
  rho(idx(1, 0), idx(1, 0)) = mixed;
  rho(idx(1, 1), idx(1, 1)) = beta;
  rho(idx(1, 2), idx(1, 2)) = alpha;
  rho(idx(0, 1), idx(1, 0)) = coherence;
  rho(idx(1, 0), idx(0, 1)) = coherence;
  return BipartiteState(std::move(rho), kQubitQutrit);
}

BipartiteState family_state(const FamilySpec& family) {
  return std::visit(overloaded{
                        [](const ExampleOne& f) { return fano_to_density(example_one(f.s3, f.t3)); },
                        [](const OneParameter& f) { return one_parameter(f.p); },
                        [](const TwoParameter& f) { return two_parameter(f.alpha, f.gamma); },
                    },
                    family);
}

std::string family_name(const FamilySpec& family) {
  return std::visit(overloaded{
                        [](const ExampleOne&) { return std::string("example-one"); },
                        [](const OneParameter&) { return std::string("one-parameter"); },
                        [](const TwoParameter&) { return std::string("two-parameter"); },
                    },
                    family);
}

std::string describe(const FamilySpec& family) {
  return std::visit(
      overloaded{
          [](const ExampleOne& f) { return "example-one(s3=" + fmt(f.s3) + ", t3=" + fmt(f.t3) + ")"; },
          [](const OneParameter& f) { return "one-parameter(p=" + fmt(f.p) + ")"; },
          [](const TwoParameter& f) {
            return "two-parameter(alpha=" + fmt(f.alpha) + ", gamma=" + fmt(f.gamma) +
                   ", beta=" + fmt(f.beta()) + ")";
          },
      },
      family);
}

}  // namespace rindlerqt
