#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rindlerqt/families.hpp"
#include "rindlerqt/rindler.hpp"

namespace rindlerqt {

inline constexpr std::size_t kMaxSweepPoints = 100000;

struct SweepConfig {
  FamilySpec family = OneParameter{0.5};
  /// Requested channels; duplicates are ignored and output follows the
  /// order qubit, qutrit, both.
  std::vector<Channel> modes = {Channel::Qubit, Channel::Qutrit, Channel::Both};
  /// Grid over [0, pi/4] with both endpoints included.
  std::size_t points = 64;
  /// Independent r_q x r_t grid for the joint channel instead of r_q = r_t.
  bool grid2d = false;
  /// Notes on parameter substitutions, copied into the metadata.
  std::vector<std::string> substitutions;
  std::string label = "sweep";
};

struct CurveRow {
  double r_q = 0.0;
  double r_t = 0.0;
  std::optional<double> e_qubit;
  std::optional<double> e_qutrit;
  std::optional<double> e_both;
};

/// `points` values from 0 to pi/4; the last one is exactly pi/4.
std::vector<double> sweep_grid(std::size_t points);

/// Throws std::invalid_argument for a bad grid or empty mode set and
/// UnphysicalStateError when the family state is not physical.
std::vector<CurveRow> run_sweep(const SweepConfig& config);

/// Header `r,E_qubit,...` (1-D) or `r_q,r_t,E_both` (2-D), 17 significant
/// digits, '.' decimal separator, '\n' line endings.
std::string format_csv(const SweepConfig& config, const std::vector<CurveRow>& rows);
/// Metadata sidecar in JSON.
std::string format_metadata(const SweepConfig& config, const std::vector<CurveRow>& rows,
                            std::string_view csv_name);
/// gnuplot command file plotting the CSV.
std::string format_gnuplot(const SweepConfig& config, std::string_view csv_name);

/// 17 significant digits, general format, independent of the locale.
std::string format_double(double x);

struct Preset {
  std::string name;
  SweepConfig config;
};

std::vector<std::string> preset_names();
/// Throws std::invalid_argument for an unknown name.
Preset make_preset(std::string_view name);

/// Two-parameter state used in place of the unphysical alpha = beta = 1/2:
/// the (alpha, gamma) with the largest negativity at r = 0 on a 0.05 grid
/// over alpha in [0, 1/2], gamma in [0, 1]; first maximum in scan order.
struct TwoParameterSubstitute {
  TwoParameter params;
  double negativity = 0.0;
  std::size_t candidates = 0;
};
TwoParameterSubstitute fig3_substitute();

}  // namespace rindlerqt
