#include "rindlerqt/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paper_tables.hpp"
#include "rindlerqt/random.hpp"

namespace rindlerqt {

namespace {

using detail::TableContext;

enum class InputKind { Fano, General, ExampleOne, OneParameter, TwoParameter };

struct TableTraits {
  PaperTableId id;
  std::string_view name;
  InputKind input;
  std::optional<Channel> channel;
  std::optional<PaperTableId> references;
};

constexpr TableTraits kTraits[] = {
    {PaperTableId::AppendixA, "APPENDIX_A", InputKind::Fano, std::nullopt, std::nullopt},
    {PaperTableId::Eq7, "EQ7", InputKind::General, Channel::Qubit, std::nullopt},
    {PaperTableId::Eq10, "EQ10", InputKind::General, Channel::Qutrit, std::nullopt},
    {PaperTableId::Eq11B, "EQ11B", InputKind::General, Channel::Both, std::nullopt},
    {PaperTableId::Eq14, "EQ14", InputKind::ExampleOne, Channel::Qubit, std::nullopt},
    {PaperTableId::Eq15, "EQ15", InputKind::ExampleOne, Channel::Qutrit, std::nullopt},
    {PaperTableId::Ex1Both, "EX1_BOTH", InputKind::ExampleOne, Channel::Both, std::nullopt},
    {PaperTableId::Eq17, "EQ17", InputKind::OneParameter, Channel::Qubit, std::nullopt},
    {PaperTableId::Eq18, "EQ18", InputKind::OneParameter, Channel::Qutrit, std::nullopt},
    {PaperTableId::Fam1Both, "FAM1_BOTH", InputKind::OneParameter, Channel::Both,
     PaperTableId::Eq18},
    {PaperTableId::Eq20, "EQ20", InputKind::TwoParameter, Channel::Qubit, std::nullopt},
    {PaperTableId::Eq21, "EQ21", InputKind::TwoParameter, Channel::Qutrit, std::nullopt},
    {PaperTableId::Eq22, "EQ22", InputKind::TwoParameter, Channel::Both, PaperTableId::Eq21},
};

const TableTraits& traits(PaperTableId id) {
  for (const auto& t : kTraits) {
    if (t.id == id) return t;
  }
  throw std::logic_error("unknown table id");
}

std::size_t table_index(PaperTableId id) {
  return static_cast<std::size_t>(&traits(id) - kTraits);
}

[[noreturn]] void mismatch(PaperTableId id, std::string_view expected) {
  throw std::invalid_argument(std::string(table_name(id)) + " requires " + std::string(expected));
}

// Initial 6x6 state plus family parameters, checked against the table.
TableContext make_context(PaperTableId id, const TableInput& input) {
  const TableTraits& t = traits(id);
  TableContext ctx;
  switch (t.input) {
    case InputKind::Fano:
      if (!std::holds_alternative<FanoParams>(input)) mismatch(id, "Bloch parameters");
      ctx.in = fano_to_density(std::get<FanoParams>(input)).rho();
      break;
    case InputKind::General:
      if (const auto* m = std::get_if<ComplexMatrix>(&input)) {
        if (m->rows() != 6 || m->cols() != 6) mismatch(id, "a 6x6 state");
        ctx.in = *m;
      } else if (const auto* f = std::get_if<FanoParams>(&input)) {
        ctx.in = fano_to_density(*f).rho();
      } else {
        ctx.in = family_state(std::get<FamilySpec>(input)).rho();
      }
      break;
    case InputKind::ExampleOne: {
      const auto* fam = std::get_if<FamilySpec>(&input);
      const auto* e = fam ? std::get_if<ExampleOne>(fam) : nullptr;
      if (!e) mismatch(id, "the example-one family");
      ctx.in = family_state(*fam).rho();
      break;
    }
    case InputKind::OneParameter: {
      const auto* fam = std::get_if<FamilySpec>(&input);
      const auto* o = fam ? std::get_if<OneParameter>(fam) : nullptr;
      if (!o) mismatch(id, "the one-parameter family");
      ctx.in = family_state(*fam).rho();
      ctx.p = o->p;
      break;
    }
    case InputKind::TwoParameter: {
      const auto* fam = std::get_if<FamilySpec>(&input);
      const auto* w = fam ? std::get_if<TwoParameter>(fam) : nullptr;
      if (!w) mismatch(id, "the two-parameter family");
      ctx.in = family_state(*fam).rho();
      ctx.alpha = w->alpha;
      ctx.gamma = w->gamma;
      ctx.beta = w->beta();
      break;
    }
  }
  return ctx;
}

void set_angles(PaperTableId id, TableContext& ctx, std::optional<RindlerParam> r_q,
                std::optional<RindlerParam> r_t) {
  const auto channel = traits(id).channel;
  if (!channel) return;
  const bool need_q = *channel != Channel::Qutrit;
  const bool need_t = *channel != Channel::Qubit;
  if (need_q && !r_q) mismatch(id, "r_q");
  if (need_t && !r_t) mismatch(id, "r_t");
  if (need_q) {
    ctx.cq = r_q->cos();
    ctx.sq = r_q->sin();
  }
  if (need_t) {
    ctx.ct = r_t->cos();
    ctx.st = r_t->sin();
  }
}

struct Evaluated {
  PaperTableValue value;
  TableContext ctx;
};

Evaluated evaluate(PaperTableId id, const TableInput& input, std::optional<RindlerParam> r_q,
                   std::optional<RindlerParam> r_t) {
  TableContext ctx = make_context(id, input);
  set_angles(id, ctx, r_q, r_t);
  if (const auto ref = traits(id).references) {
    ctx.ref = evaluate(*ref, input, r_q, r_t).value.matrix;
  }

  PaperTableValue out;
  if (id == PaperTableId::AppendixA) {
    const ComplexMatrix a = appendix_a_density(std::get<FanoParams>(input)).rho();
    out.matrix = a;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        out.printed.push_back(
            {detail::index_label(i, 6), detail::index_label(j, 6), i, j, a(i, j)});
      }
    }
    return {std::move(out), std::move(ctx)};
  }

  const auto& layout = detail::table_layout(id);
  const std::size_t n = layout.dim;
  out.matrix = ComplexMatrix(n, n);
  std::vector<bool> printed(n * n, false);
  for (const auto& f : layout.formulas) {
    const std::size_t i = detail::label_index(f.row, n);
    const std::size_t j = detail::label_index(f.col, n);
    const Complex v = f.readings.front().formula(ctx);
    out.matrix(i, j) = v;
    printed[i * n + j] = true;
    out.printed.push_back({f.row, f.col, i, j, v});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && printed[i * n + j] && !printed[j * n + i]) {
        out.matrix(j, i) = std::conj(out.matrix(i, j));
        ++out.hermitian_completions;
      }
    }
  }
  return {std::move(out), std::move(ctx)};
}

void sort_entries(std::vector<DiscrepancyEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const DiscrepancyEntry& a, const DiscrepancyEntry& b) {
                     if (a.abs_diff != b.abs_diff) return a.abs_diff > b.abs_diff;
                     return a.order < b.order;
                   });
}

void summarize(DiscrepancyReport& report) {
  report.max_abs_diff = 0.0;
  report.match_count = 0;
  for (const auto& e : report.entries) {
    report.max_abs_diff = std::max(report.max_abs_diff, e.abs_diff);
    if (e.match) ++report.match_count;
  }
  report.total_count = report.entries.size();
  sort_entries(report.entries);
}

struct TrialInput {
  TableInput input;
  RindlerParam r_q;
  RindlerParam r_t;
};

TrialInput draw_trial(PaperTableId id, Sampler& s) {
  TableInput input = ComplexMatrix();
  switch (traits(id).input) {
    case InputKind::Fano:
      input = s.fano_params();
      break;
    case InputKind::General:
      input = s.density_matrix(6);
      break;
    case InputKind::ExampleOne: {
      const double s3 = s.uniform(-1.0, 1.0);
      const double t3 = s.uniform(-1.0, 1.0);
      input = FamilySpec{ExampleOne{s3, t3}};
      break;
    }
    case InputKind::OneParameter:
      // (0, 1/2]: the printed qutrit table divides by p.
      input = FamilySpec{OneParameter{0.5 * (1.0 - s.uniform())}};
      break;
    case InputKind::TwoParameter: {
      // Weights of gamma + 2 alpha + 3 beta = 1, all non-negative.
      const double u = s.uniform(), v = s.uniform(), w = s.uniform();
      const double total = u + v + w;
      const double two_alpha = u / total;
      const double gamma = v / total;
      input = FamilySpec{TwoParameter{two_alpha / 2.0, gamma}};
      break;
    }
  }
  const RindlerParam r_q = s.rindler_param();
  const RindlerParam r_t = s.rindler_param();
  return {std::move(input), r_q, r_t};
}

}  // namespace

std::string_view table_name(PaperTableId id) { return traits(id).name; }

std::optional<PaperTableId> parse_table_id(std::string_view name) {
  for (const auto& t : kTraits) {
    if (t.name == name) return t.id;
  }
  return std::nullopt;
}

bool is_regression_anchor(PaperTableId id) {
  return id == PaperTableId::AppendixA || id == PaperTableId::Eq7;
}

PaperTableValue evaluate_paper_table(PaperTableId id, const TableInput& input,
                                     std::optional<RindlerParam> r_q,
                                     std::optional<RindlerParam> r_t) {
  return evaluate(id, input, r_q, r_t).value;
}

ComplexMatrix derived_state(PaperTableId id, const TableInput& input,
                            std::optional<RindlerParam> r_q, std::optional<RindlerParam> r_t) {
  TableContext ctx = make_context(id, input);
  set_angles(id, ctx, r_q, r_t);
  const auto channel = traits(id).channel;
  if (!channel) return ctx.in;
  switch (*channel) {
    case Channel::Qubit: return apply_qubit_channel(ctx.in, 3, *r_q);
    case Channel::Qutrit: return apply_qutrit_channel(ctx.in, *r_t);
    case Channel::Both: return apply_both_channel(ctx.in, *r_q, *r_t);
  }
  throw std::logic_error("derived_state: unknown channel");
}

DiscrepancyReport compare(PaperTableId id, const TableInput& input,
                          std::optional<RindlerParam> r_q, std::optional<RindlerParam> r_t,
                          double tol) {
  const Evaluated ev = evaluate(id, input, r_q, r_t);
  const ComplexMatrix derived = derived_state(id, input, r_q, r_t);

  DiscrepancyReport report;
  report.table = id;
  report.tolerance = tol;
  report.hermitian_completions = ev.value.hermitian_completions;
  report.input_physical = validate_state(ev.ctx.in).is_physical;
  report.derived_physical = validate_state(derived).is_physical;

  if (id == PaperTableId::AppendixA) {
    for (std::size_t k = 0; k < ev.value.printed.size(); ++k) {
      const auto& pe = ev.value.printed[k];
      const Complex d = derived(pe.i, pe.j);
      const double diff = std::abs(pe.value - d);
      report.entries.push_back({pe.row, pe.col, pe.value, d, diff, "printed", diff <= tol, k, 0});
    }
    summarize(report);
    return report;
  }

  const auto& layout = detail::table_layout(id);
  for (std::size_t k = 0; k < layout.formulas.size(); ++k) {
    const auto& f = layout.formulas[k];
    const auto& pe = ev.value.printed[k];
    const Complex d = derived(pe.i, pe.j);
    // Closest reading wins; the first one on ties.
    std::size_t best = 0;
    Complex best_value = pe.value;
    double best_diff = std::abs(pe.value - d);
    for (std::size_t q = 1; q < f.readings.size(); ++q) {
      const Complex v = f.readings[q].formula(ev.ctx);
      const double diff = std::abs(v - d);
      if (diff < best_diff) {
        best = q;
        best_value = v;
        best_diff = diff;
      }
    }
    report.entries.push_back({pe.row, pe.col, best_value, d, best_diff, f.readings[best].note,
                              best_diff <= tol, k, 0});
  }
  summarize(report);
  return report;
}

DiscrepancyReport check_table(PaperTableId id, std::size_t trials, std::uint64_t seed,
                              double tol) {
  if (trials == 0) throw std::invalid_argument("check_table: trials must be positive");
  Sampler sampler(derive_seed(seed, table_index(id)));

  DiscrepancyReport agg;
  std::vector<DiscrepancyEntry> worst;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const TrialInput t = draw_trial(id, sampler);
    DiscrepancyReport one = compare(id, t.input, t.r_q, t.r_t, tol);
    if (trial == 0) {
      agg = one;
      agg.entries.clear();
      worst.resize(one.entries.size());
    }
    agg.input_physical = agg.input_physical && one.input_physical;
    agg.derived_physical = agg.derived_physical && one.derived_physical;
    for (auto& e : one.entries) {
      e.trial = trial;
      DiscrepancyEntry& w = worst[e.order];
      if (trial == 0 || e.abs_diff > w.abs_diff) w = e;
    }
  }
  agg.trials = trials;
  agg.entries = std::move(worst);
  summarize(agg);
  return agg;
}

}  // namespace rindlerqt
