#pragma once

#include <numbers>
#include <optional>
#include <string>

#include "rindlerqt/linalg.hpp"
#include "rindlerqt/state.hpp"

namespace rindlerqt {

/// Acceleration angle r with tan r = exp(-pi omega c / a), 0 <= r <= pi/4.
class RindlerParam {
 public:
  static constexpr double kMax = std::numbers::pi / 4.0;

  /// Throws std::invalid_argument outside [0, pi/4] or for non-finite r.
  explicit RindlerParam(double r);

  double value() const noexcept { return r_; }
  double cos() const;
  double sin() const;

  friend bool operator==(const RindlerParam&, const RindlerParam&) = default;

 private:
  double r_;
};

/// r = arctan(exp(-pi * omega * c / a)). All inputs must be positive.
RindlerParam rindler_param_from_physical(double omega, double acceleration, double speed_of_light);

enum class Channel { Qubit, Qutrit, Both };

std::string_view channel_name(Channel channel);

/// Which subsystems are accelerated, with one parameter per accelerated side.
class ChannelMode {
 public:
  static ChannelMode qubit_only(RindlerParam r_q) { return {Channel::Qubit, r_q, std::nullopt}; }
  static ChannelMode qutrit_only(RindlerParam r_t) { return {Channel::Qutrit, std::nullopt, r_t}; }
  static ChannelMode both(RindlerParam r_q, RindlerParam r_t) { return {Channel::Both, r_q, r_t}; }

  Channel kind() const noexcept { return kind_; }
  const std::optional<RindlerParam>& r_q() const noexcept { return r_q_; }
  const std::optional<RindlerParam>& r_t() const noexcept { return r_t_; }

 private:
  ChannelMode(Channel kind, std::optional<RindlerParam> rq, std::optional<RindlerParam> rt)
      : kind_(kind), r_q_(rq), r_t_(rt) {}

  Channel kind_;
  std::optional<RindlerParam> r_q_;
  std::optional<RindlerParam> r_t_;
};

/// 4x2 isometry for a fermionic qubit mode. Output basis is
/// (region I) x (region II) = {00, 01, 10, 11}:
///   |0> -> cos r |00> + sin r |11>,   |1> -> |10>.
ComplexMatrix qubit_isometry(RindlerParam r);

/// 16x3 isometry for the qutrit mode with the phase fixed to zero. Region I
/// and region II are each spanned by {vacuum, D, U, P} (indices 0..3) and the
/// qutrit levels 0, 1, 2 are identified with vacuum, D, U:
///   |0> -> cos^2 r |0,0> + sin r cos r (|U,D> + |D,U>) + sin^2 r |P,P>
///   |1> -> cos r |D,0> - sin r |P,D>
///   |2> -> cos r |U,0> + sin r |P,U>
ComplexMatrix qutrit_isometry(RindlerParam r);

// Linear maps on raw operators. They accept any matrix of the right size
// (including non-Hermitian basis operators, which the Choi construction
// needs) and perform no physicality checks.

/// Qubit channel on factor A of a (2, dim_b) operator; dim_b is 3 or 4.
ComplexMatrix apply_qubit_channel(const ComplexMatrix& m, std::size_t dim_b, RindlerParam r_q);
/// Qutrit channel on factor B of a (2,3) operator; result is (2,4).
ComplexMatrix apply_qutrit_channel(const ComplexMatrix& m, RindlerParam r_t);
/// Joint channel from the combined isometry V (x) W; result is (2,4).
ComplexMatrix apply_both_channel(const ComplexMatrix& m, RindlerParam r_q, RindlerParam r_t);
/// Dispatches on the mode; input must be (2,3).
ComplexMatrix apply_channel(const ComplexMatrix& m, const ChannelMode& mode);

/// Output dims of `mode` applied to a (2,3) state.
Dims output_dims(Channel channel);

// State-level channels. Each validates its input and throws
// UnphysicalStateError if it is not a physical state.

/// Accepts (2,3) or (2,4) states; the qutrit-side factor is untouched.
BipartiteState accelerate_qubit(const BipartiteState& state, RindlerParam r_q);
BipartiteState accelerate_qutrit(const BipartiteState& state, RindlerParam r_t);
BipartiteState accelerate_both(const BipartiteState& state, RindlerParam r_q, RindlerParam r_t);
BipartiteState accelerate(const BipartiteState& state, const ChannelMode& mode);

/// Normalized Choi matrix (id (x) Phi)(|Omega><Omega|) of the channel acting
/// on the whole (2,3) input, with |Omega> = sum_i |i>|i> / sqrt(6).
/// 36x36 for the qubit channel, 48x48 otherwise.
ComplexMatrix choi_matrix(const ChannelMode& mode);

}  // namespace rindlerqt
