#pragma once

#include <string>
#include <variant>

#include "rindlerqt/fano.hpp"
#include "rindlerqt/state.hpp"

namespace rindlerqt {

/// Both subsystems polarized along the third axis with c11 = 1, c22 = -1,
/// c33 = 1. Only (0, 0) yields a positive semidefinite state.
struct ExampleOne {
  double s3 = 0.0;
  double t3 = 0.0;
};

/// One-parameter family, 0 <= p <= 1/2.
struct OneParameter {
  double p = 0.0;
};

/// Two-parameter family with gamma + 2 alpha + 3 beta = 1.
struct TwoParameter {
  double alpha = 0.0;
  double gamma = 0.0;
  double beta() const { return (1.0 - gamma - 2.0 * alpha) / 3.0; }
};

using FamilySpec = std::variant<ExampleOne, OneParameter, TwoParameter>;

FanoParams example_one(double s3, double t3);

/// Nonzero elements: p/2 on 00, 01, 11, 12; (1-2p)/2 on 02, 10; coherences
/// (00,12) = p/2 and (02,10) = (1-2p)/2.
/// Throws std::invalid_argument for p outside [0, 1/2].
BipartiteState one_parameter(double p);

/// Diagonal (beta, (beta+gamma)/2, alpha, (beta+gamma)/2, beta, alpha) on
/// 00..12 and coherence (01,10) = (beta-gamma)/2.
/// Throws std::invalid_argument naming the first violated positivity
/// condition.
BipartiteState two_parameter(double alpha, double gamma);

/// State of any family. ExampleOne is returned unvalidated.
BipartiteState family_state(const FamilySpec& family);

std::string family_name(const FamilySpec& family);
/// Short human-readable description including parameter values.
std::string describe(const FamilySpec& family);

}  // namespace rindlerqt
