#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "rindlerqt/crosscheck.hpp"
#include "rindlerqt/random.hpp"

using namespace rindlerqt;

namespace {

const DiscrepancyEntry& entry(const DiscrepancyReport& r, std::string_view row,
                              std::string_view col) {
  for (const auto& e : r.entries) {
    if (e.row == row && e.col == col) return e;
  }
  throw std::logic_error("no such entry");
}

ComplexMatrix pure(const std::vector<Complex>& psi) {
  double norm = 0.0;
  for (const auto& a : psi) norm += std::norm(a);
  std::vector<Complex> v = psi;
  for (auto& a : v) a /= std::sqrt(norm);
  return ComplexMatrix::outer(v, v);
}

}  // namespace

TEST_CASE("table names round trip") {
  for (PaperTableId id : kAllTables) {
    const auto parsed = parse_table_id(table_name(id));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
  }
  CHECK(table_name(PaperTableId::AppendixA) == "APPENDIX_A");
  CHECK(table_name(PaperTableId::Ex1Both) == "EX1_BOTH");
  CHECK_FALSE(parse_table_id("eq7").has_value());
  CHECK_FALSE(parse_table_id("EQ99").has_value());
  CHECK(is_regression_anchor(PaperTableId::AppendixA));
  CHECK(is_regression_anchor(PaperTableId::Eq7));
  CHECK_FALSE(is_regression_anchor(PaperTableId::Eq10));
}

TEST_CASE("qubit table on |00> reproduces the vacuum split") {
  ComplexMatrix rho(6, 6);
  rho(0, 0) = 1.0;
  const RindlerParam r(0.5);
  const PaperTableValue v = evaluate_paper_table(PaperTableId::Eq7, rho, r, std::nullopt);
  CHECK(v.matrix(0, 0).real() == doctest::Approx(r.cos() * r.cos()));
  CHECK(v.matrix(3, 3).real() == doctest::Approx(r.sin() * r.sin()));
  CHECK(v.printed.size() == 36);
  CHECK(v.hermitian_completions == 0);
}

TEST_CASE("qubit table matches the channel on general states") {
  Sampler s(41);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix rho = s.density_matrix(6);
    const RindlerParam r = s.rindler_param();
    const DiscrepancyReport rep = compare(PaperTableId::Eq7, rho, r, std::nullopt, 1e-12);
    CHECK(rep.all_match());
    CHECK(rep.input_physical);
    CHECK(rep.derived_physical);
    // Independent route: Kraus sum.
    const ComplexMatrix k = oracle::apply_kraus(oracle::on_a(oracle::qubit_kraus(r.value()), 3), rho);
    CHECK(max_abs_diff(evaluate_paper_table(PaperTableId::Eq7, rho, r).matrix, k) < 1e-14);
  }
}

TEST_CASE("one-parameter qubit table matches") {
  const DiscrepancyReport rep = check_table(PaperTableId::Eq17, 50, 7, 1e-12);
  CHECK(rep.all_match());
  CHECK(rep.total_count == 10);
}

TEST_CASE("two-parameter qubit table omits the pumped population at (10,10)") {
  // At r_q = 0 the printed element vanishes while the state still has
  // (beta + gamma)/2 there.
  const FamilySpec fam = TwoParameter{0.1, 0.3};
  const DiscrepancyReport rep = compare(PaperTableId::Eq20, fam, RindlerParam(0.0), std::nullopt,
                                        1e-12);
  const auto& e = entry(rep, "10", "10");
  CHECK_FALSE(e.match);
  CHECK(e.paper.real() == doctest::Approx(0.0));
  const double beta = std::get<TwoParameter>(fam).beta();
  CHECK(e.derived.real() == doctest::Approx((beta + 0.3) / 2));
  CHECK(rep.match_count == rep.total_count - 1);
}

TEST_CASE("appendix table at zero parameters is the maximally mixed state") {
  const DiscrepancyReport rep = compare(PaperTableId::AppendixA, FanoParams{}, std::nullopt,
                                        std::nullopt, 1e-12);
  CHECK(rep.all_match());
  CHECK(rep.total_count == 36);
  const PaperTableValue v = evaluate_paper_table(PaperTableId::AppendixA, FanoParams{});
  CHECK(max_abs_diff(v.matrix, ComplexMatrix::identity(6) * Complex(1.0 / 6.0)) < 1e-16);
}

TEST_CASE("appendix table mismatches for generic parameters") {
  const DiscrepancyReport rep = check_table(PaperTableId::AppendixA, 20, 1, 1e-12);
  CHECK(rep.match_count == 27);
  CHECK_FALSE(rep.all_match());
}

TEST_CASE("qutrit table element (0U,0U) is flagged exactly when rho(00,00) != rho(00,01)") {
  // The printed formula reads rho(00,01) where the channel feeds rho(00,00).
  const RindlerParam rt(0.6);
  const ComplexMatrix equal = pure({1, 1, 0, 0, 0, 0});
  const auto ok = compare(PaperTableId::Eq10, equal, std::nullopt, rt, 1e-12);
  CHECK(entry(ok, "0U", "0U").match);

  const ComplexMatrix differ = pure({1, 0, 0, 0, 0, 1});
  const auto bad = compare(PaperTableId::Eq10, differ, std::nullopt, rt, 1e-12);
  const auto& e = entry(bad, "0U", "0U");
  CHECK_FALSE(e.match);
  const double c2 = rt.cos() * rt.cos(), s2 = rt.sin() * rt.sin();
  CHECK(e.derived.real() == doctest::Approx(c2 * s2 * 0.5));
  CHECK(e.paper.real() == doctest::Approx(0.0));
}

TEST_CASE("element counts per table") {
  const std::map<PaperTableId, std::size_t> expected = {
      {PaperTableId::AppendixA, 36}, {PaperTableId::Eq7, 36},     {PaperTableId::Eq10, 64},
      {PaperTableId::Eq11B, 62},     {PaperTableId::Eq14, 10},    {PaperTableId::Eq15, 16},
      {PaperTableId::Ex1Both, 15},   {PaperTableId::Eq17, 10},    {PaperTableId::Eq18, 16},
      {PaperTableId::Fam1Both, 16},  {PaperTableId::Eq20, 8},     {PaperTableId::Eq21, 12},
      {PaperTableId::Eq22, 12},
  };
  for (PaperTableId id : kAllTables) {
    const DiscrepancyReport rep = check_table(id, 3, 5, 1e-12);
    CAPTURE(table_name(id));
    CHECK(rep.total_count == expected.at(id));
    CHECK(rep.trials == 3);
    if (rep.input_physical) CHECK(rep.derived_physical);
    for (std::size_t k = 1; k < rep.entries.size(); ++k) {
      const auto& a = rep.entries[k - 1];
      const auto& b = rep.entries[k];
      CHECK((a.abs_diff > b.abs_diff || (a.abs_diff == b.abs_diff && a.order < b.order)));
    }
  }
}

TEST_CASE("example-one inputs are reported as unphysical") {
  const DiscrepancyReport rep = check_table(PaperTableId::Eq14, 5, 3, 1e-12);
  CHECK_FALSE(rep.input_physical);
}

TEST_CASE("hermitian completion of unprinted mirror elements") {
  Sampler s(42);
  const PaperTableValue v = evaluate_paper_table(PaperTableId::Eq11B, s.density_matrix(6),
                                                 s.rindler_param(), s.rindler_param());
  CHECK(v.hermitian_completions == 2);
  CHECK(v.printed.size() == 62);
}

TEST_CASE("table input and angles are validated") {
  const ComplexMatrix rho = ComplexMatrix::identity(6) * Complex(1.0 / 6.0);
  const RindlerParam r(0.2);
  CHECK_THROWS_AS(evaluate_paper_table(PaperTableId::AppendixA, rho), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_paper_table(PaperTableId::Eq7, rho), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_paper_table(PaperTableId::Eq10, rho, r, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_paper_table(PaperTableId::Eq17, rho, r), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_paper_table(PaperTableId::Eq17, FamilySpec{TwoParameter{}}, r),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_paper_table(PaperTableId::Eq7, ComplexMatrix::identity(8), r),
                  std::invalid_argument);
  CHECK_NOTHROW(evaluate_paper_table(PaperTableId::Eq7, FamilySpec{OneParameter{0.2}}, r));
  CHECK_THROWS_AS(check_table(PaperTableId::Eq7, 0, 1, 1e-12), std::invalid_argument);
}

TEST_CASE("check_table is deterministic in the seed") {
  const auto a = check_table(PaperTableId::Eq10, 10, 99, 1e-12);
  const auto b = check_table(PaperTableId::Eq10, 10, 99, 1e-12);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    CHECK(a.entries[k].row == b.entries[k].row);
    CHECK(a.entries[k].col == b.entries[k].col);
    CHECK(a.entries[k].abs_diff == b.entries[k].abs_diff);
    CHECK(a.entries[k].trial == b.entries[k].trial);
  }
  const auto c = check_table(PaperTableId::Eq10, 10, 100, 1e-12);
  CHECK(c.max_abs_diff != a.max_abs_diff);
}

TEST_CASE("derived state is the channel output") {
  Sampler s(43);
  const ComplexMatrix rho = s.density_matrix(6);
  const RindlerParam rq = s.rindler_param(), rt = s.rindler_param();
  CHECK(max_abs_diff(derived_state(PaperTableId::Eq11B, rho, rq, rt),
                     apply_both_channel(rho, rq, rt)) == 0.0);
  CHECK(max_abs_diff(derived_state(PaperTableId::Eq10, rho, rq, rt),
                     apply_qutrit_channel(rho, rt)) == 0.0);
}
