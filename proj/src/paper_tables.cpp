#include "paper_tables.hpp"

#include <array>
#include <stdexcept>

namespace rindlerqt::detail {

namespace {

constexpr std::array<std::string_view, 6> kLabels6 = {"00", "01", "02", "10", "11", "12"};
constexpr std::array<std::string_view, 8> kLabels8 = {"00", "0D", "0U", "0P", "10", "1D", "1U", "1P"};

// Formula bodies read like the printed tables: cq2 is cos^2 r_q, st4 is
// sin^4 r_t, r("00","01") is an initial-state element, A(l) an appendix
// coefficient and T(..) an element of the referenced table.
#define RQT_F(expr)                                                                  \
  [](const TableContext& x) -> Complex {                                             \
    [[maybe_unused]] const double cq = x.cq, cq2 = cq * cq, cq3 = cq2 * cq;          \
    [[maybe_unused]] const double sq = x.sq, sq2 = sq * sq;                          \
    [[maybe_unused]] const double ct = x.ct, ct2 = ct * ct, ct3 = ct2 * ct,          \
                                  ct4 = ct2 * ct2;                                   \
    [[maybe_unused]] const double st = x.st, st2 = st * st, st3 = st2 * st,          \
                                  st4 = st2 * st2;                                   \
    [[maybe_unused]] const double p = x.p, alpha = x.alpha, beta = x.beta,           \
                                  gamma = x.gamma;                                   \
    [[maybe_unused]] auto r = [&x](std::string_view a, std::string_view b) {         \
      return x.r(a, b);                                                              \
    };                                                                               \
    [[maybe_unused]] auto A = [&x](int l) { return x.A(l); };                        \
    [[maybe_unused]] auto T = [&x](std::string_view a, std::string_view b) {         \
      return x.T(a, b);                                                              \
    };                                                                               \
    return Complex(expr);                                                            \
  }

TableFormula one(std::string row, std::string col, Formula f) {
  return {std::move(row), std::move(col), {{"printed", std::move(f)}}};
}

TableFormula alt(std::string row, std::string col, std::vector<Reading> readings) {
  return {std::move(row), std::move(col), std::move(readings)};
}

TableFormula zero(std::string row, std::string col) {
  return one(std::move(row), std::move(col), RQT_F(0.0));
}

TableLayout eq7() {
  // Regular pattern: qubit 0 on both sides picks up c^2, mixed sides c, and
  // qubit 1 on both sides gains the s^2-weighted qubit-0 block.
  TableLayout t{6, {}};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const std::size_t qi = i / 3, qj = j / 3, bi = i % 3, bj = j % 3;
      Formula f;
      if (qi == 0 && qj == 0) {
        f = [i, j](const TableContext& x) { return x.cq * x.cq * x.in(i, j); };
      } else if (qi != qj) {
        f = [i, j](const TableContext& x) { return x.cq * x.in(i, j); };
      } else {
        f = [i, j, bi, bj](const TableContext& x) {
          return x.sq * x.sq * x.in(bi, bj) + x.in(i, j);
        };
      }
      t.formulas.push_back(one(std::string(kLabels6[i]), std::string(kLabels6[j]), std::move(f)));
    }
  }
  return t;
}

TableLayout eq10() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(ct4 * r("00", "00"))));
  f.push_back(one("00", "0D", RQT_F(ct3 * r("00", "01"))));
  f.push_back(one("00", "0U", RQT_F(ct2 * r("00", "02"))));
  f.push_back(zero("00", "0P"));
  f.push_back(one("00", "10", RQT_F(ct4 * r("00", "10"))));
  f.push_back(one("00", "1D", RQT_F(ct3 * r("00", "11"))));
  f.push_back(one("00", "1U", RQT_F(ct2 * r("00", "12"))));
  f.push_back(zero("00", "1P"));

  f.push_back(one("0D", "00", RQT_F(ct4 * r("01", "00"))));
  f.push_back(one("0D", "0D", RQT_F(ct2 * (st2 * r("00", "00") + r("01", "01")))));
  f.push_back(one("0D", "0U", RQT_F(ct2 * r("01", "02"))));
  f.push_back(one("0D", "0P", RQT_F(ct * st2 * r("00", "02"))));
  f.push_back(one("0D", "10", RQT_F(ct4 * r("01", "10"))));
  f.push_back(one("0D", "1D", RQT_F(ct2 * (st2 * r("00", "10") + r("01", "11")))));
  f.push_back(one("0D", "1U", RQT_F(ct2 * r("01", "12"))));
  f.push_back(one("0D", "1P", RQT_F(ct * st2 * r("00", "12"))));

  f.push_back(one("0U", "00", RQT_F(ct3 * r("02", "00"))));
  f.push_back(one("0U", "0D", RQT_F(ct3 * r("02", "01"))));
  f.push_back(one("0U", "0U", RQT_F(ct2 * (st2 * r("00", "01") + r("02", "02")))));
  f.push_back(one("0U", "0P", RQT_F(-ct * st2 * r("02", "10"))));
  f.push_back(one("0U", "10", RQT_F(ct3 * r("02", "10"))));
  f.push_back(one("0U", "1D", RQT_F(ct2 * r("02", "11"))));
  f.push_back(one("0U", "1U", RQT_F(ct2 * (st2 * r("02", "10") + r("02", "12")))));
  f.push_back(one("0U", "1P", RQT_F(-ct * st2 * r("00", "11"))));

  f.push_back(zero("0P", "00"));
  f.push_back(one("0P", "0D", RQT_F(ct * st2 * r("02", "00"))));
  f.push_back(one("0P", "0U", RQT_F(-ct * st2 * r("01", "00"))));
  f.push_back(one("0P", "0P", RQT_F(st2 * (st2 * r("00", "00") + r("01", "02")))));
  f.push_back(zero("0P", "10"));
  f.push_back(one("0P", "1D", RQT_F(ct * st2 * r("02", "10"))));
  f.push_back(one("0P", "1U", RQT_F(-ct * st2 * r("01", "10"))));
  f.push_back(one("0P", "1P", RQT_F(st4 * r("00", "10"))));

  f.push_back(one("10", "00", RQT_F(ct4 * r("10", "00"))));
  f.push_back(one("10", "0D", RQT_F(ct3 * r("10", "01"))));
  f.push_back(one("10", "0U", RQT_F(ct2 * r("10", "02"))));
  f.push_back(zero("10", "0P"));
  f.push_back(one("10", "10", RQT_F(ct4 * r("10", "10"))));
  f.push_back(one("10", "1D", RQT_F(ct3 * r("10", "11"))));
  f.push_back(one("10", "1U", RQT_F(ct2 * r("10", "12"))));
  f.push_back(zero("10", "1P"));

  f.push_back(one("1D", "00", RQT_F(ct3 * r("11", "00"))));
  f.push_back(one("1D", "0D", RQT_F(ct2 * r("11", "01"))));
  f.push_back(one("1D", "0U", RQT_F(ct2 * r("11", "02"))));
  f.push_back(one("1D", "0P", RQT_F(ct * st2 * r("10", "02"))));
  f.push_back(one("1D", "10", RQT_F(ct3 * r("11", "10"))));
  f.push_back(one("1D", "1D", RQT_F(ct2 * st2 * r("11", "11"))));
  f.push_back(one("1D", "1U", RQT_F(ct2 * r("11", "12"))));
  f.push_back(one("1D", "1P", RQT_F(ct2 * st2 * r("10", "12"))));

  f.push_back(one("1U", "00", RQT_F(ct2 * r("12", "00"))));
  f.push_back(one("1U", "0D", RQT_F(ct2 * r("12", "01"))));
  f.push_back(one("1U", "0U", RQT_F(ct2 * r("12", "02"))));
  f.push_back(one("1U", "0P", RQT_F(-ct * st2 * r("10", "01"))));
  f.push_back(one("1U", "10", RQT_F(ct2 * r("12", "10"))));
  f.push_back(one("1U", "1D", RQT_F(ct2 * r("12", "11"))));
  f.push_back(one("1U", "1U", RQT_F(ct2 * st2 * r("10", "10"))));
  f.push_back(alt("1U", "1P",
                  {{"index 112 read as 12", RQT_F(-ct2 * st * r("10", "12"))},
                   {"index 112 read as 11", RQT_F(-ct2 * st * r("10", "11"))}}));

  f.push_back(zero("1P", "00"));
  f.push_back(one("1P", "0D", RQT_F(ct2 * st2 * r("12", "00"))));
  f.push_back(one("1P", "0U", RQT_F(-ct * st2 * r("11", "00"))));
  f.push_back(one("1P", "0P", RQT_F(st2 * (r("11", "01") + r("12", "02")))));
  f.push_back(zero("1P", "10"));
  f.push_back(one("1P", "1D", RQT_F(ct2 * r("12", "11"))));
  f.push_back(one("1P", "1U", RQT_F(-ct * st2 * r("11", "10"))));
  f.push_back(one("1P", "1P", RQT_F(st2 * (r("11", "12") + r("12", "12")))));
  return t;
}

TableLayout eq11b() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  // Row 00: B1..B5.
  f.push_back(one("00", "00", RQT_F(cq2 * ct4 * A(1))));
  f.push_back(one("00", "0D", RQT_F(cq2 * A(2))));
  f.push_back(one("00", "0U", RQT_F(cq2 * A(3) + cq * A(6))));
  f.push_back(one("00", "10", RQT_F(cq * ct4 * A(4))));
  f.push_back(one("00", "1D", RQT_F(cq * ct3 * A(5))));
  f.push_back(zero("00", "1U"));
  f.push_back(zero("00", "1P"));

  // Row 0D: B6..B13.
  f.push_back(one("0D", "00", RQT_F(cq2 * ct3 * A(6))));
  f.push_back(one("0D", "0D", RQT_F(cq2 * ct2 * (A(8) + st2 * A(1)))));
  f.push_back(alt("0D", "0U",
                  {{"c^q read as c_q", RQT_F(cq * ct2 * A(9))},
                   {"c^q read as c_q^2", RQT_F(cq2 * ct2 * A(9))}}));
  f.push_back(one("0D", "0P", RQT_F(cq2 * ct * st2 * A(3))));
  f.push_back(one("0D", "10", RQT_F(cq * ct3 * A(10))));
  f.push_back(one("0D", "1D", RQT_F(cq * ct2 * (A(11) + st2 * A(4)))));
  f.push_back(one("0D", "1U", RQT_F(cq * ct2 * A(12))));
  f.push_back(one("0D", "1P", RQT_F(cq * st2 * A(6))));

  // Row 0U: B14..B21.
  f.push_back(one("0U", "00", RQT_F(cq2 * ct3 * A(13))));
  f.push_back(one("0U", "0D", RQT_F(cq2 * ct2 * A(14))));
  f.push_back(alt("0U", "0U",
                  {{"c^q read as c_q", RQT_F(cq * ct2 * (A(15) + st2 * A(1)))},
                   {"c^q read as c_q^2", RQT_F(cq2 * ct2 * (A(15) + st2 * A(1)))}}));
  f.push_back(one("0U", "0P", RQT_F(-cq2 * ct * st2 * A(2))));
  f.push_back(one("0U", "10", RQT_F(cq * ct3 * A(16))));
  f.push_back(one("0U", "1D", RQT_F(cq * ct2 * A(19))));
  f.push_back(one("0U", "1U", RQT_F(cq * (A(18) + ct2 * st2 * A(4)))));
  f.push_back(one("0U", "1P", RQT_F(-cq * ct2 * st2 * A(5))));

  // Row 0P: zeros, then B22..B27.
  f.push_back(zero("0P", "00"));
  f.push_back(zero("0P", "10"));
  f.push_back(one("0P", "0D", RQT_F(cq2 * ct * st2 * A(13))));
  f.push_back(one("0P", "0U", RQT_F(-cq2 * ct * st2 * A(7))));
  f.push_back(alt("0P", "0P",
                  {{"printed", RQT_F(cq2 * (sq2 * A(15) + st2 * A(8) + st4 * A(1)))},
                   {"s_q^2 on A15 read as s_t^2",
                    RQT_F(cq2 * (st2 * A(15) + st2 * A(8) + st4 * A(1)))}}));
  f.push_back(one("0P", "1D", RQT_F(cq * ct * st2 * A(16))));
  f.push_back(one("0P", "1U", RQT_F(-cq * ct * st2 * A(10))));
  f.push_back(one("0P", "1P", RQT_F(cq * (st4 * A(1) + st2 * A(18) + st2 * A(11)))));

  // Row 10: zeros, then B28..B33.
  f.push_back(zero("10", "0P"));
  f.push_back(zero("10", "1P"));
  f.push_back(one("10", "00", RQT_F(cq * ct3 * (ct * A(19) + A(25)))));
  f.push_back(one("10", "0D", RQT_F(cq * ct3 * A(20))));
  f.push_back(one("10", "0U", RQT_F(cq * ct3 * A(21))));
  f.push_back(one("10", "10", RQT_F(ct4 * (sq2 * A(1) + A(22)))));
  f.push_back(one("10", "1D", RQT_F(ct3 * (sq2 * A(2) + A(23)))));
  f.push_back(one("10", "1U", RQT_F(ct3 * (sq2 * A(3) + A(24)))));

  // Row 1D: zero, then B34..B40.
  f.push_back(zero("1D", "00"));
  f.push_back(one("1D", "0D", RQT_F(cq * ct2 * (sq2 * A(19) + A(26)))));
  f.push_back(one("1D", "0U", RQT_F(cq * ct2 * A(27))));
  f.push_back(one("1D", "0P", RQT_F(cq * ct * st2 * A(21))));
  f.push_back(one("1D", "10", RQT_F(ct3 * (sq2 * A(7) + A(28)))));
  f.push_back(one("1D", "1D",
                  RQT_F(cq2 * st2 * A(22) + ct2 * A(29) + sq2 * ct2 * A(8) +
                        sq2 * ct2 * st2 * A(1))));
  f.push_back(one("1D", "1U", RQT_F(ct2 * (sq2 * A(9) + A(30)))));
  f.push_back(one("1D", "1P", RQT_F(ct * st2 * (sq2 * A(3) + A(24)))));

  // Row 1U: B41..B47. Seven labels are printed for eight columns; the
  // placement follows the formulas (B44 carries the c s^2 of a P column).
  f.push_back(one("1U", "00", RQT_F(cq * ct3 * A(31))));
  f.push_back(one("1U", "0D", RQT_F(cq * ct2 * A(32))));
  f.push_back(one("1U", "0U", RQT_F(cq * ct2 * (st2 * A(19) + A(33)))));
  f.push_back(one("1U", "0P", RQT_F(-cq * ct * st2 * A(20))));
  f.push_back(one("1U", "10", RQT_F(ct3 * (sq2 * A(13) + A(34)))));
  f.push_back(one("1U", "1D", RQT_F(ct * (ct * A(35) + st2 * A(14)))));
  f.push_back(alt("1U", "1U",
                  {{"c^2 s^2 read as c_t^2 s_t^2, c^2 as c_t^2",
                    RQT_F(ct2 * st2 * A(22) + ct2 * A(36) + sq2 * ct2 * A(15) +
                          sq2 * ct2 * st2 * A(1))},
                   {"c^2 s^2 read as c_q^2 s_q^2, c^2 as c_q^2",
                    RQT_F(cq2 * sq2 * A(22) + cq2 * A(36) + sq2 * ct2 * A(15) +
                          sq2 * ct2 * st2 * A(1))},
                   {"c^2 s^2 read as c_q^2 s_t^2, c^2 as c_t^2",
                    RQT_F(cq2 * st2 * A(22) + ct2 * A(36) + sq2 * ct2 * A(15) +
                          sq2 * ct2 * st2 * A(1))}}));

  // Row 1P.
  f.push_back(zero("1P", "00"));
  f.push_back(zero("1P", "0U"));
  f.push_back(zero("1P", "10"));
  f.push_back(one("1P", "0D", RQT_F(cq * ct * sq2 * (A(31) - A(25)))));
  f.push_back(alt("1P", "0P",
                  {{"s^2 read as s_t^2",
                    RQT_F(cq * st2 * (st2 * A(19) + sq2 * A(26) + A(33)))},
                   {"s^2 read as s_q^2",
                    RQT_F(cq * st2 * (sq2 * A(19) + sq2 * A(26) + A(33)))}}));
  f.push_back(one("1P", "1D", RQT_F(ct * st2 * (sq2 * A(13) + A(34)))));
  f.push_back(one("1P", "1U", RQT_F(-ct * st2 * (sq2 * A(7) + A(28)))));
  f.push_back(alt("1P", "1P",
                  {{"s^2 read as s_t^2",
                    RQT_F(st2 * A(29) + sq2 * st2 * (A(8) + A(15)) + sq2 * st4 * A(1) +
                          st3 * A(22) + st2 * A(36))},
                   {"s^2 read as s_q^2",
                    RQT_F(sq2 * A(29) + sq2 * st2 * (A(8) + A(15)) + sq2 * st4 * A(1) +
                          st3 * A(22) + sq2 * A(36))}}));
  return t;
}

TableLayout eq14() {
  TableLayout t{6, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(cq2 * r("00", "00"))));
  f.push_back(one("00", "11", RQT_F(cq * r("00", "11"))));
  f.push_back(one("01", "01", RQT_F(cq2 * r("01", "01"))));
  f.push_back(one("01", "10", RQT_F(cq * r("01", "10"))));
  f.push_back(one("02", "02", RQT_F(cq2 * r("02", "02"))));
  f.push_back(one("10", "01", RQT_F(cq * r("00", "01"))));
  f.push_back(one("10", "10", RQT_F(r("10", "10") + sq2 * r("00", "00"))));
  f.push_back(one("11", "00", RQT_F(cq * r("11", "00"))));
  f.push_back(one("11", "11", RQT_F(r("11", "11") + sq2 * r("01", "01"))));
  f.push_back(one("12", "12", RQT_F(r("12", "12") + sq2 * r("01", "02"))));
  return t;
}

TableLayout eq15() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(ct4 * r("00", "00"))));
  f.push_back(one("00", "1D", RQT_F(ct3 * r("00", "11"))));
  f.push_back(one("0D", "0D", RQT_F(ct2 * r("01", "01") + ct2 * st2)));
  f.push_back(one("0D", "10", RQT_F(ct3 * r("01", "10"))));
  f.push_back(one("0P", "0P", RQT_F(st4 * r("00", "00") + st2 * (r("01", "01") + r("02", "02")))));
  f.push_back(one("0P", "1U", RQT_F(-ct * st2 * r("01", "10"))));
  f.push_back(one("0U", "1P", RQT_F(-ct2 * st2 * r("00", "11"))));
  f.push_back(one("0U", "0U", RQT_F(ct2 * st2 * r("00", "00") + ct2 * r("02", "02"))));
  f.push_back(one("10", "0D", RQT_F(ct3 * r("10", "01"))));
  f.push_back(one("10", "10", RQT_F(ct4 * r("10", "10"))));
  f.push_back(one("1D", "00", RQT_F(ct2 * r("11", "00"))));
  f.push_back(alt("1D", "1D",
                  {{"s read as s_t", RQT_F(ct2 * r("11", "11") + ct2 * st * r("10", "10"))},
                   {"s read as s_t^2", RQT_F(ct2 * r("11", "11") + ct2 * st2 * r("10", "10"))}}));
  f.push_back(one("1U", "1U", RQT_F(ct2 * r("12", "12") + ct2 * st2 * r("10", "10"))));
  f.push_back(one("1U", "0P", RQT_F(-ct * st2 * r("10", "01"))));
  f.push_back(one("1P", "0U", RQT_F(-ct * st2 * r("11", "00"))));
  f.push_back(one("1P", "1P", RQT_F(st4 * r("10", "10") + st2 * (r("11", "11") + r("12", "12")))));
  return t;
}

TableLayout ex1_both() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(ct4 * cq2 * r("00", "00"))));
  f.push_back(one("0D", "0D", RQT_F(cq2 * ct2 * (r("01", "01") + st2))));
  f.push_back(one("10", "0D", RQT_F(cq * ct3 * (r("10", "01") + r("02", "01")))));
  f.push_back(one("0U", "0U", RQT_F(cq2 * ct2 * (r("02", "02") + r("00", "00") * st2))));
  f.push_back(one("1P", "0U", RQT_F(-cq * ct * st2 * r("11", "00"))));
  f.push_back(one("0P", "0P",
                  RQT_F(cq2 * st2 * (sq2 * r("00", "00") + r("01", "01") + r("02", "02")))));
  f.push_back(one("1U", "0P", RQT_F(-cq * ct * st2 * r("10", "01"))));
  f.push_back(one("0D", "10", RQT_F(cq * ct3 * r("01", "10"))));
  f.push_back(one("10", "10", RQT_F(ct4 * (sq2 * r("00", "00") + ct4 * r("10", "10")))));
  f.push_back(one("00", "1D", RQT_F(cq * ct3 * r("00", "11"))));
  f.push_back(one("1D", "1D",
                  RQT_F(sq2 * ct2 * (sq2 + r("01", "01")) +
                        ct2 * (r("11", "11") + st2 * r("10", "10")))));
  f.push_back(one("0P", "1U", RQT_F(-cq * ct * st2 * r("01", "10"))));
  f.push_back(one("1U", "1U",
                  RQT_F(sq2 * ct2 * (r("02", "02") + st2 * r("00", "00")) +
                        ct2 * (r("12", "12") + st2 * r("10", "10")))));
  f.push_back(one("0U", "1P", RQT_F(-cq * ct * st2 * r("00", "11"))));
  f.push_back(alt("1P", "1P",
                  {{"s^2 read as s_t^2",
                    RQT_F(sq2 * st2 * (r("00", "00") * st2 + r("01", "01") + r("02", "02")) +
                          st2 * (st2 * r("10", "10") + r("11", "11") + r("11", "01")))},
                   {"s^2 read as s_q^2",
                    RQT_F(sq2 * st2 * (r("00", "00") * sq2 + r("01", "01") + r("02", "02")) +
                          st2 * (st2 * r("10", "10") + r("11", "11") + r("11", "01")))}}));
  return t;
}

TableLayout eq17() {
  TableLayout t{6, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(p / 2 * cq2)));
  f.push_back(one("00", "12", RQT_F(p / 2 * cq)));
  f.push_back(one("01", "01", RQT_F(p / 2 * cq2)));
  f.push_back(one("12", "00", RQT_F(p / 2 * cq)));
  f.push_back(one("02", "02", RQT_F((1 - 2 * p) / 2 * cq2)));
  f.push_back(one("10", "02", RQT_F((1 - 2 * p) / 2 * cq)));
  f.push_back(one("10", "10", RQT_F((1 - 2 * p) / 2 + p / 2 * sq2)));
  f.push_back(one("02", "10", RQT_F((1 - 2 * p) / 2 * cq)));
  f.push_back(one("11", "11", RQT_F(p / 2 * (1 + sq2))));
  f.push_back(one("12", "12", RQT_F((1 - 2 * p) / 2 * sq2 + p / 2)));
  return t;
}

TableLayout eq18() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(p / 2 * ct4)));
  f.push_back(one("1U", "00", RQT_F(p / 2 * ct3)));
  f.push_back(one("0D", "0D", RQT_F(p / 2 * ct2 * (1 + st2))));
  f.push_back(one("1P", "0D", RQT_F(p / 2 * ct * st2)));
  f.push_back(one("0U", "0U", RQT_F(ct2 * ((1 - 2 * p) / 2 + p / 2 * st2))));
  f.push_back(one("10", "0U", RQT_F((1 - 2 * p) / 2 * ct3)));
  f.push_back(one("0P", "0P", RQT_F(st2 * (p / 2 * (1 + st2) + (1 - 2 * p) / 2))));
  f.push_back(one("1D", "0P", RQT_F((1 - 2 * p) / 2 * ct * st2)));
  f.push_back(one("10", "10", RQT_F((1 - 2 * p) / 2 * ct4)));
  f.push_back(one("0U", "10", RQT_F((1 - 2 * p) / 2 * ct3)));
  f.push_back(one("1D", "1D", RQT_F((1 - 2 * p) / 2 * ct2 * st2)));
  f.push_back(one("0P", "1D", RQT_F((1 - 2 * p) / 2 * ct * st2)));
  f.push_back(one("00", "1U", RQT_F(p / 2 * ct3)));
  f.push_back(one("1U", "1U", RQT_F(ct2 * (p / 2 + (1 - 2 * p) / p * st2))));
  f.push_back(one("0D", "1P", RQT_F(p / 2 * ct * st2)));
  f.push_back(one("1P", "1P", RQT_F(st2 * (p + (1 - 2 * p) / 2 * st2))));
  return t;
}

TableLayout fam1_both() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(cq2 * T("00", "00"))));
  f.push_back(one("1D", "00", RQT_F(p / 2 * cq * ct3)));
  f.push_back(one("0D", "0D", RQT_F(cq2 * T("0D", "0D"))));
  f.push_back(one("1P", "0D", RQT_F(cq * T("1P", "0D"))));
  f.push_back(one("0U", "0U", RQT_F(cq2 * T("0U", "0U"))));
  f.push_back(one("10", "0U", RQT_F(cq * T("10", "0U"))));
  f.push_back(one("0P", "0P", RQT_F(cq2 * T("0P", "0P"))));
  f.push_back(one("1D", "0P", RQT_F(cq * T("1D", "0P"))));
  f.push_back(one("10", "10", RQT_F(T("10", "10") + p / 2 * ct4 * sq2)));
  f.push_back(one("0D", "10", RQT_F(cq * T("10", "0U"))));
  f.push_back(one("1D", "1D", RQT_F(T("1D", "1D") + ct2 * p / 2 * (1 + sq2 + sq2 * st2))));
  f.push_back(one("0P", "1D", RQT_F(cq * T("0P", "1D"))));
  f.push_back(one("1U", "1U",
                  RQT_F(T("1U", "1U") + ct2 * (p / 2 * (1 + st2 * sq2) + (1 - 2 * p) / 2 * sq2))));
  f.push_back(one("00", "1U", RQT_F(cq * T("00", "1U"))));
  f.push_back(one("1P", "1P", RQT_F(T("1P", "1P") + sq2 * st2 * (p / 2 * st2 + (1 - p) / 2))));
  f.push_back(one("0D", "1P", RQT_F(cq * T("0D", "1P"))));
  return t;
}

TableLayout eq20() {
  TableLayout t{6, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(beta * cq2)));
  f.push_back(one("01", "01", RQT_F((beta + gamma) / 2 * cq2)));
  f.push_back(one("10", "01", RQT_F((beta - gamma) / 2 * cq)));
  f.push_back(one("02", "02", RQT_F(alpha * cq2)));
  f.push_back(one("01", "10", RQT_F((beta - gamma) / 2 * cq)));
  f.push_back(one("10", "10", RQT_F(beta * sq2)));
  f.push_back(one("11", "11", RQT_F(beta + (beta + gamma) / 2 * sq2)));
  f.push_back(one("12", "12", RQT_F(alpha * (1 + sq2))));
  return t;
}

TableLayout eq21() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(beta * ct4)));
  f.push_back(one("0D", "0D", RQT_F(ct2 * (beta * st2 + (beta + gamma) / 2))));
  f.push_back(one("10", "0D", RQT_F((beta - gamma) / 2 * ct3)));
  f.push_back(one("0U", "0U", RQT_F(ct2 * (alpha + beta * st2))));
  f.push_back(one("0P", "0P", RQT_F(st2 * (alpha + (3 * beta + gamma) / 2 * st2))));
  f.push_back(one("1U", "0P", RQT_F(-(beta - gamma) / 2 * ct * st2)));
  f.push_back(one("0D", "10", RQT_F((beta - gamma) / 2 * ct3)));
  f.push_back(one("10", "10", RQT_F((beta + gamma) / 2 * ct4)));
  f.push_back(one("1D", "1D", RQT_F(ct2 * (beta + (beta + gamma) / 2 * st2))));
  f.push_back(one("0P", "1U", RQT_F(-(beta - gamma) / 2 * ct * st2)));
  f.push_back(one("1U", "1U", RQT_F(ct2 * (alpha + (beta + gamma) / 2 * st2))));
  f.push_back(one("1P", "1P", RQT_F(st2 * (alpha + (3 * beta + gamma) / 2 * st2))));
  return t;
}

TableLayout eq22() {
  TableLayout t{8, {}};
  auto& f = t.formulas;
  f.push_back(one("00", "00", RQT_F(cq2 * T("00", "00"))));
  f.push_back(one("0D", "0D", RQT_F(cq2 * T("0D", "0D"))));
  f.push_back(one("10", "0D", RQT_F(cq * T("10", "0D"))));
  f.push_back(one("0U", "0U", RQT_F(cq2 * T("0U", "0U"))));
  f.push_back(one("0P", "0P", RQT_F(cq2 * T("0P", "0P"))));
  f.push_back(one("1U", "0P", RQT_F(cq * T("1U", "0P"))));
  f.push_back(one("0D", "10", RQT_F(cq * T("0D", "10"))));
  f.push_back(one("10", "10", RQT_F(sq2 * T("10", "10"))));
  f.push_back(one("1D", "1D", RQT_F(T("1D", "1D") + sq2 * T("0D", "0D"))));
  // Printed as equal to the (1U,0P) element of this same table.
  f.push_back(one("0P", "1U", RQT_F(cq * T("1U", "0P"))));
  f.push_back(one("1U", "1U", RQT_F(T("1U", "1U") + sq2 * T("0U", "0U"))));
  f.push_back(one("1P", "1P", RQT_F(T("1P", "1P") + sq2 * T("0P", "0P"))));
  return t;
}

#undef RQT_F

}  // namespace

Complex TableContext::r(std::string_view row, std::string_view col) const {
  return in(label_index(row, 6), label_index(col, 6));
}

Complex TableContext::A(int l) const {
  if (l < 1 || l > 36) throw std::out_of_range("appendix coefficient index out of range");
  const auto k = static_cast<std::size_t>(l - 1);
  return in(k / 6, k % 6);
}

Complex TableContext::T(std::string_view row, std::string_view col) const {
  if (ref.empty()) throw std::logic_error("table has no referenced table");
  return ref(label_index(row, 8), label_index(col, 8));
}

const TableLayout& table_layout(PaperTableId id) {
  static const TableLayout k7 = eq7();
  static const TableLayout k10 = eq10();
  static const TableLayout k11 = eq11b();
  static const TableLayout k14 = eq14();
  static const TableLayout k15 = eq15();
  static const TableLayout kEx1 = ex1_both();
  static const TableLayout k17 = eq17();
  static const TableLayout k18 = eq18();
  static const TableLayout kFam1 = fam1_both();
  static const TableLayout k20 = eq20();
  static const TableLayout k21 = eq21();
  static const TableLayout k22 = eq22();
  switch (id) {
    case PaperTableId::Eq7: return k7;
    case PaperTableId::Eq10: return k10;
    case PaperTableId::Eq11B: return k11;
    case PaperTableId::Eq14: return k14;
    case PaperTableId::Eq15: return k15;
    case PaperTableId::Ex1Both: return kEx1;
    case PaperTableId::Eq17: return k17;
    case PaperTableId::Eq18: return k18;
    case PaperTableId::Fam1Both: return kFam1;
    case PaperTableId::Eq20: return k20;
    case PaperTableId::Eq21: return k21;
    case PaperTableId::Eq22: return k22;
    case PaperTableId::AppendixA: break;
  }
  throw std::logic_error("table_layout: no formula layout for this table");
}

std::size_t label_index(std::string_view label, std::size_t dim) {
  if (dim == 6) {
    for (std::size_t k = 0; k < kLabels6.size(); ++k) {
      if (kLabels6[k] == label) return k;
    }
  } else if (dim == 8) {
    for (std::size_t k = 0; k < kLabels8.size(); ++k) {
      if (kLabels8[k] == label) return k;
    }
  }
  throw std::invalid_argument("unknown basis label '" + std::string(label) + "'");
}

std::string index_label(std::size_t index, std::size_t dim) {
  if (dim == 6 && index < 6) return std::string(kLabels6[index]);
  if (dim == 8 && index < 8) return std::string(kLabels8[index]);
  throw std::out_of_range("index_label: index out of range");
}

}  // namespace rindlerqt::detail
