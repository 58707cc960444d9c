#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rindlerqt/families.hpp"
#include "rindlerqt/fano.hpp"
#include "rindlerqt/linalg.hpp"
#include "rindlerqt/rindler.hpp"

namespace rindlerqt {

/// The printed element tables that can be re-derived.
///
///   AppendixA  initial-state elements from the Bloch parameters
///   Eq7        general state, qubit accelerated
///   Eq10       general state, qutrit accelerated
///   Eq11B      general state, both accelerated (coefficients B1..B52)
///   Eq14       example-one state, qubit accelerated
///   Eq15       example-one state, qutrit accelerated
///   Ex1Both    example-one state, both accelerated
///   Eq17       one-parameter family, qubit accelerated
///   Eq18       one-parameter family, qutrit accelerated
///   Fam1Both   one-parameter family, both accelerated
///   Eq20       two-parameter family, qubit accelerated
///   Eq21       two-parameter family, qutrit accelerated
///   Eq22       two-parameter family, both accelerated
enum class PaperTableId {
  AppendixA,
  Eq7,
  Eq10,
  Eq11B,
  Eq14,
  Eq15,
  Ex1Both,
  Eq17,
  Eq18,
  Fam1Both,
  Eq20,
  Eq21,
  Eq22,
};

inline constexpr PaperTableId kAllTables[] = {
    PaperTableId::AppendixA, PaperTableId::Eq7,   PaperTableId::Eq10,     PaperTableId::Eq11B,
    PaperTableId::Eq14,      PaperTableId::Eq15,  PaperTableId::Ex1Both,  PaperTableId::Eq17,
    PaperTableId::Eq18,      PaperTableId::Fam1Both, PaperTableId::Eq20,  PaperTableId::Eq21,
    PaperTableId::Eq22,
};

/// CLI spelling, e.g. "APPENDIX_A", "EQ7", "EX1_BOTH".
std::string_view table_name(PaperTableId id);
std::optional<PaperTableId> parse_table_id(std::string_view name);

/// Tables whose full agreement gates the `check` exit code.
bool is_regression_anchor(PaperTableId id);

/// Input to a table: Bloch parameters, a family, or a raw 6x6 state. Which
/// alternatives a table accepts depends on the table.
using TableInput = std::variant<FanoParams, FamilySpec, ComplexMatrix>;

struct PrintedElement {
  std::string row;
  std::string col;
  std::size_t i = 0;
  std::size_t j = 0;
  Complex value;
};

struct PaperTableValue {
  /// Printed elements placed in position; unprinted elements whose mirror is
  /// printed are filled with the conjugate, everything else is zero.
  ComplexMatrix matrix;
  /// One entry per printed formula, in printed order, using the first reading.
  std::vector<PrintedElement> printed;
  std::size_t hermitian_completions = 0;
};

/// Evaluates the printed formulas verbatim. Throws std::invalid_argument for
/// an input/table mismatch or a missing acceleration parameter.
PaperTableValue evaluate_paper_table(PaperTableId id, const TableInput& input,
                                     std::optional<RindlerParam> r_q = std::nullopt,
                                     std::optional<RindlerParam> r_t = std::nullopt);

struct DiscrepancyEntry {
  std::string row;
  std::string col;
  Complex paper;
  Complex derived;
  double abs_diff = 0.0;
  /// Which reading of an ambiguous formula was closest; "printed" otherwise.
  std::string reading;
  bool match = false;
  /// Position of the formula in the printed table (stable tiebreak).
  std::size_t order = 0;
  /// Trial that produced the largest difference (aggregated reports only).
  std::size_t trial = 0;
};

struct DiscrepancyReport {
  PaperTableId table = PaperTableId::AppendixA;
  double tolerance = 0.0;
  /// Sorted by descending abs_diff, ties by printed order.
  std::vector<DiscrepancyEntry> entries;
  double max_abs_diff = 0.0;
  std::size_t match_count = 0;
  std::size_t total_count = 0;
  std::size_t hermitian_completions = 0;
  std::size_t trials = 1;
  bool input_physical = true;
  /// Trace one and positive semidefinite for every trusted-path output.
  bool derived_physical = true;

  bool all_match() const noexcept { return match_count == total_count; }
};

/// Compares every printed element with the isometry-derived state.
DiscrepancyReport compare(PaperTableId id, const TableInput& input,
                          std::optional<RindlerParam> r_q, std::optional<RindlerParam> r_t,
                          double tol);

/// The trusted-path output for a table's input: the initial state for
/// AppendixA, otherwise the appropriate channel applied to it.
ComplexMatrix derived_state(PaperTableId id, const TableInput& input,
                            std::optional<RindlerParam> r_q, std::optional<RindlerParam> r_t);

/// Runs `trials` seeded random comparisons and keeps, per element, the
/// worst trial. The random stream depends only on (seed, id).
DiscrepancyReport check_table(PaperTableId id, std::size_t trials, std::uint64_t seed,
                              double tol);

}  // namespace rindlerqt
