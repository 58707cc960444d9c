#pragma once

// Transcriptions of the printed element tables. Internal to the crosscheck
// implementation.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rindlerqt/crosscheck.hpp"

namespace rindlerqt::detail {

struct TableContext {
  /// Initial 6x6 state, basis 00 01 02 10 11 12.
  ComplexMatrix in;
  double cq = 1.0, sq = 0.0, ct = 1.0, st = 0.0;
  double p = 0.0, alpha = 0.0, beta = 0.0, gamma = 0.0;
  /// Earlier printed table referenced by this one (8x8), if any.
  ComplexMatrix ref;

  Complex r(std::string_view row, std::string_view col) const;
  /// Appendix coefficient l = element ((l-1)/6, (l-1)%6) of the input.
  Complex A(int l) const;
  Complex T(std::string_view row, std::string_view col) const;
};

using Formula = std::function<Complex(const TableContext&)>;

struct Reading {
  std::string note;
  Formula formula;
};

struct TableFormula {
  std::string row;
  std::string col;
  /// First entry is the primary reading; more than one only where the
  /// printed symbol is ambiguous (missing subscript, garbled index).
  std::vector<Reading> readings;
};

struct TableLayout {
  std::size_t dim = 6;
  std::vector<TableFormula> formulas;
};

/// Not defined for PaperTableId::AppendixA, whose formulas live in
/// appendix_a_density().
const TableLayout& table_layout(PaperTableId id);

/// "00".."12" in dimension 6; "00","0D","0U","0P","10",.."1P" in dimension 8.
std::size_t label_index(std::string_view label, std::size_t dim);
std::string index_label(std::size_t index, std::size_t dim);

}  // namespace rindlerqt::detail
