#include "rindlerqt/rindler.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "rindlerqt/fano.hpp"

namespace rindlerqt {

namespace {

// Qutrit-mode labels inside one Rindler region.
constexpr std::size_t kVac = 0;
constexpr std::size_t kDown = 1;
constexpr std::size_t kUp = 2;
constexpr std::size_t kPair = 3;

// (system, region II) isometry rows -> lifted operator -> trace region II.
ComplexMatrix dilate_and_trace(const ComplexMatrix& lift, const ComplexMatrix& m,
                               Dims system_and_env) {
  ComplexMatrix lifted = lift * m * lift.adjoint();
  return partial_trace(lifted, system_and_env, Factor::B);
}

void require_input(const ComplexMatrix& m, std::size_t side, const char* who) {
  if (!m.is_square() || m.rows() != side) {
    throw std::invalid_argument(std::string(who) + ": expected a square operator of side " +
                                std::to_string(side));
  }
}

}  // namespace

RindlerParam::RindlerParam(double r) : r_(r) {
  if (!std::isfinite(r) || r < 0.0 || r > kMax) {
    throw std::invalid_argument("RindlerParam: r must lie in [0, pi/4], got " + std::to_string(r));
  }
}

double RindlerParam::cos() const { return std::cos(r_); }
double RindlerParam::sin() const { return std::sin(r_); }

RindlerParam rindler_param_from_physical(double omega, double acceleration, double speed_of_light) {
  if (!(omega > 0.0) || !(acceleration > 0.0) || !(speed_of_light > 0.0)) {
    throw std::invalid_argument("rindler_param_from_physical: omega, a and c must be positive");
  }
  const double r = std::atan(std::exp(-std::numbers::pi * omega * speed_of_light / acceleration));
  return RindlerParam(std::min(r, RindlerParam::kMax));
}

std::string_view channel_name(Channel channel) {
  switch (channel) {
    case Channel::Qubit: return "qubit";
    case Channel::Qutrit: return "qutrit";
    case Channel::Both: return "both";
  }
  return "unknown";
}

ComplexMatrix qubit_isometry(RindlerParam r) {
  ComplexMatrix v(4, 2);
  v(0b00, 0) = r.cos();
  v(0b11, 0) = r.sin();
  v(0b10, 1) = 1.0;
  return v;
}

ComplexMatrix qutrit_isometry(RindlerParam r) {
  const double c = r.cos();
  const double s = r.sin();
  auto row = [](std::size_t region1, std::size_t region2) { return region1 * 4 + region2; };
  ComplexMatrix w(16, 3);
  w(row(kVac, kVac), 0) = c * c;
  w(row(kUp, kDown), 0) = s * c;
  w(row(kDown, kUp), 0) = s * c;
  w(row(kPair, kPair), 0) = s * s;
  w(row(kDown, kVac), 1) = c;
  w(row(kPair, kDown), 1) = -s;
  w(row(kUp, kVac), 2) = c;
  w(row(kPair, kUp), 2) = s;
  return w;
}

ComplexMatrix apply_qubit_channel(const ComplexMatrix& m, std::size_t dim_b, RindlerParam r_q) {
  if (dim_b != 3 && dim_b != 4) {
    throw std::invalid_argument("apply_qubit_channel: qutrit-side dimension must be 3 or 4");
  }
  require_input(m, 2 * dim_b, "apply_qubit_channel");
  // (V (x) I) has rows ordered (qubit I, qubit II, other); move region II last.
  const std::array<std::size_t, 3> dims{2, 2, dim_b};
  const std::array<std::size_t, 3> perm{0, 2, 1};
  const ComplexMatrix lift =
      permute_row_factors(tensor(qubit_isometry(r_q), ComplexMatrix::identity(dim_b)), dims, perm);
  return dilate_and_trace(lift, m, Dims{2 * dim_b, 2});
}

ComplexMatrix apply_qutrit_channel(const ComplexMatrix& m, RindlerParam r_t) {
  require_input(m, 6, "apply_qutrit_channel");
  // Rows of (I (x) W) are already ordered (qubit, qutrit I, qutrit II).
  const ComplexMatrix lift = tensor(ComplexMatrix::identity(2), qutrit_isometry(r_t));
  return dilate_and_trace(lift, m, Dims{8, 4});
}

ComplexMatrix apply_both_channel(const ComplexMatrix& m, RindlerParam r_q, RindlerParam r_t) {
  require_input(m, 6, "apply_both_channel");
  // (V (x) W) rows: (qubit I, qubit II, qutrit I, qutrit II) -> (qubit I, qutrit I, qubit II, qutrit II).
  const std::array<std::size_t, 4> dims{2, 2, 4, 4};
  const std::array<std::size_t, 4> perm{0, 2, 1, 3};
  const ComplexMatrix lift =
      permute_row_factors(tensor(qubit_isometry(r_q), qutrit_isometry(r_t)), dims, perm);
  return dilate_and_trace(lift, m, Dims{8, 8});
}

ComplexMatrix apply_channel(const ComplexMatrix& m, const ChannelMode& mode) {
  switch (mode.kind()) {
    case Channel::Qubit: return apply_qubit_channel(m, 3, *mode.r_q());
    case Channel::Qutrit: return apply_qutrit_channel(m, *mode.r_t());
    case Channel::Both: return apply_both_channel(m, *mode.r_q(), *mode.r_t());
  }
  throw std::logic_error("apply_channel: unknown mode");
}

Dims output_dims(Channel channel) {
  return channel == Channel::Qubit ? kQubitQutrit : kQubitAcceleratedQutrit;
}

BipartiteState accelerate_qubit(const BipartiteState& state, RindlerParam r_q) {
  require_physical(state, "accelerate_qubit");
  return BipartiteState(apply_qubit_channel(state.rho(), state.dims().b, r_q), state.dims());
}

BipartiteState accelerate_qutrit(const BipartiteState& state, RindlerParam r_t) {
  if (state.dims() != kQubitQutrit) {
    throw std::invalid_argument("accelerate_qutrit: input must be a (2,3) state");
  }
  require_physical(state, "accelerate_qutrit");
  return BipartiteState(apply_qutrit_channel(state.rho(), r_t), kQubitAcceleratedQutrit);
}

BipartiteState accelerate_both(const BipartiteState& state, RindlerParam r_q, RindlerParam r_t) {
  if (state.dims() != kQubitQutrit) {
    throw std::invalid_argument("accelerate_both: input must be a (2,3) state");
  }
  require_physical(state, "accelerate_both");
  return BipartiteState(apply_both_channel(state.rho(), r_q, r_t), kQubitAcceleratedQutrit);
}

BipartiteState accelerate(const BipartiteState& state, const ChannelMode& mode) {
  switch (mode.kind()) {
    case Channel::Qubit: return accelerate_qubit(state, *mode.r_q());
    case Channel::Qutrit: return accelerate_qutrit(state, *mode.r_t());
    case Channel::Both: return accelerate_both(state, *mode.r_q(), *mode.r_t());
  }
  throw std::logic_error("accelerate: unknown mode");
}

ComplexMatrix choi_matrix(const ChannelMode& mode) {
  constexpr std::size_t kIn = 6;
  const std::size_t out = output_dims(mode.kind()).total();
  ComplexMatrix choi(kIn * out, kIn * out);
  for (std::size_t i = 0; i < kIn; ++i) {
    for (std::size_t j = 0; j < kIn; ++j) {
      ComplexMatrix unit(kIn, kIn);
      unit(i, j) = 1.0;
      const ComplexMatrix image = apply_channel(unit, mode);
      for (std::size_t k = 0; k < out; ++k) {
        for (std::size_t l = 0; l < out; ++l) choi(i * out + k, j * out + l) = image(k, l) / double(kIn);
      }
    }
  }
  return choi;
}

}  // namespace rindlerqt
