#include "rindlerqt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rindlerqt/crosscheck.hpp"
#include "rindlerqt/entanglement.hpp"
#include "rindlerqt/fano.hpp"
#include "rindlerqt/families.hpp"
#include "rindlerqt/rindler.hpp"
#include "rindlerqt/sweep.hpp"

namespace rindlerqt {

namespace {

namespace fs = std::filesystem;

// Thrown for inconsistent flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string family;
  double p = 0.0, alpha = 0.0, gamma = 0.0, s3 = 0.0, t3 = 0.0;
  CLI::Option* p_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* s3_opt = nullptr;
  CLI::Option* t3_opt = nullptr;
  CLI::Option* family_opt = nullptr;

  void add_to(CLI::App& app) {
    family_opt = app.add_option("--family", family, "State family")
                     ->check(CLI::IsMember({"example-one", "one-parameter", "two-parameter"}));
    p_opt = app.add_option("--p", p, "One-parameter family weight, 0 <= p <= 1/2");
    alpha_opt = app.add_option("--alpha", alpha, "Two-parameter family alpha");
    gamma_opt = app.add_option("--gamma", gamma, "Two-parameter family gamma");
    s3_opt = app.add_option("--s3", s3, "Example-one qubit polarization");
    t3_opt = app.add_option("--t3", t3, "Example-one qutrit polarization");
  }

  bool given() const {
    return family_opt->count() + p_opt->count() + alpha_opt->count() + gamma_opt->count() +
               s3_opt->count() + t3_opt->count() >
           0;
  }

  FamilySpec spec() const {
    auto need = [](const CLI::Option* o, const char* what) {
      if (o->count() == 0) throw UsageError(std::string("missing ") + what);
    };
    auto forbid = [](const CLI::Option* o, const std::string& fam) {
      if (o->count() != 0) throw UsageError(o->get_name() + " does not apply to " + fam);
    };
    if (family.empty()) throw UsageError("--family is required");
    if (family == "example-one") {
      for (auto* o : {p_opt, alpha_opt, gamma_opt}) forbid(o, family);
      return ExampleOne{s3, t3};
    }
    if (family == "one-parameter") {
      for (auto* o : {alpha_opt, gamma_opt, s3_opt, t3_opt}) forbid(o, family);
      need(p_opt, "--p");
      return OneParameter{p};
    }
    for (auto* o : {p_opt, s3_opt, t3_opt}) forbid(o, family);
    need(alpha_opt, "--alpha");
    need(gamma_opt, "--gamma");
    return TwoParameter{alpha, gamma};
  }
};

Channel parse_channel(const std::string& name) {
  if (name == "qubit") return Channel::Qubit;
  if (name == "qutrit") return Channel::Qutrit;
  return Channel::Both;
}

std::vector<Channel> parse_channels(const std::vector<std::string>& names) {
  std::vector<Channel> out;
  for (const auto& n : names) {
    const Channel c = parse_channel(n);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string fixed(double x, int precision) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -precision)) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

std::string sci(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 3);
  return std::string(buf, res.ptr);
}

std::string complex_text(Complex z) {
  std::string s = fixed(z.real(), 6);
  const std::string im = fixed(z.imag(), 6);
  if (im == "0.000000") return s;
  s += (im.front() == '-') ? im : "+" + im;
  return s + "i";
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, const std::vector<std::string>& labels) {
  std::size_t width = 4;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, complex_text(m(i, j)).size());
  }
  width += 2;
  out << "    ";
  for (const auto& l : labels) out << pad_left(l, width);
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << pad_left(labels[i], 4);
    for (std::size_t j = 0; j < m.cols(); ++j) out << pad_left(complex_text(m(i, j)), width);
    out << '\n';
  }
}

std::vector<std::string> basis_labels(std::size_t dim_b) {
  static const char* qutrit[] = {"0", "1", "2"};
  static const char* rindler[] = {"0", "D", "U", "P"};
  std::vector<std::string> labels;
  for (int a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) {
      labels.push_back(std::to_string(a) + (dim_b == 3 ? qutrit[b] : rindler[b]));
    }
  }
  return labels;
}

void print_values(std::ostream& out, const std::vector<double>& v) {
  out << '[';
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << fixed(v[k], 9);
  out << "]\n";
}

void print_fano(std::ostream& out, const FanoParams& f) {
  out << "s = [";
  for (std::size_t i = 0; i < 3; ++i) out << (i ? ", " : "") << fixed(f.s[i], 6);
  out << "]\nt = [";
  for (std::size_t i = 0; i < 8; ++i) out << (i ? ", " : "") << fixed(f.t[i], 6);
  out << "]\nc (nonzero):";
  bool any = false;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (std::abs(f.c[i][j]) > 1e-12) {
        out << " c" << i + 1 << j + 1 << '=' << fixed(f.c[i][j], 6);
        any = true;
      }
    }
  }
  out << (any ? "\n" : " none\n");
}

nlohmann::ordered_json complex_json(Complex z) { return {z.real(), z.imag()}; }

nlohmann::ordered_json report_json(const DiscrepancyReport& r, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["table"] = std::string(table_name(r.table));
  j["seed"] = seed;
  j["trials"] = r.trials;
  j["tolerance"] = r.tolerance;
  j["match_count"] = r.match_count;
  j["total_count"] = r.total_count;
  j["max_abs_diff"] = r.max_abs_diff;
  j["hermitian_completions"] = r.hermitian_completions;
  j["input_physical"] = r.input_physical;
  j["derived_physical"] = r.derived_physical;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"row", e.row},
                       {"col", e.col},
                       {"paper", complex_json(e.paper)},
                       {"derived", complex_json(e.derived)},
                       {"abs_diff", e.abs_diff},
                       {"reading", e.reading},
                       {"match", e.match},
                       {"trial", e.trial}});
  }
  j["entries"] = entries;
  return j;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const std::string& preset_name, const FamilyFlags& fam,
              const std::vector<std::string>& modes, const CLI::Option* points_opt,
              std::size_t points, bool grid2d, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  SweepConfig config;
  if (!preset_name.empty()) {
    if (fam.given()) throw UsageError("family flags cannot be combined with a preset");
    config = make_preset(preset_name).config;
  } else {
    if (!fam.given()) throw UsageError("give a preset or --family");
    config.family = fam.spec();
    config.label = family_name(config.family);
  }
  if (!modes.empty()) config.modes = parse_channels(modes);
  if (grid2d) {
    config.grid2d = true;
    if (modes.empty()) config.modes = {Channel::Both};
  }
  if (points_opt->count() > 0) config.points = points;

  std::vector<CurveRow> rows;
  try {
    rows = run_sweep(config);
  } catch (const UnphysicalStateError& e) {
    err << "error: " << describe(config.family) << " is not a physical state\n";
    err << "validation report: " << e.report().describe() << '\n';
    return kExitValidation;
  }

  const fs::path csv = out_path.empty() ? fs::path(config.label + ".csv") : fs::path(out_path);
  fs::path meta = csv;
  meta.replace_extension(".json");
  fs::path gp = csv;
  gp.replace_extension(".gp");
  const std::string csv_name = csv.filename().string();
  write_file(csv, format_csv(config, rows));
  write_file(meta, format_metadata(config, rows, csv_name));
  write_file(gp, format_gnuplot(config, csv_name));
  out << "sweep " << config.label << ": " << describe(config.family) << ", " << rows.size()
      << " rows\n";
  out << "wrote " << csv.string() << ", " << meta.string() << ", " << gp.string() << '\n';
  for (const auto& s : config.substitutions) out << "substitution: " << s << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- check

int cmd_check(const std::vector<std::string>& names, std::size_t trials, std::uint64_t seed,
              double tol, const std::string& out_dir, std::ostream& out) {
  std::vector<PaperTableId> tables;
  if (names.empty()) {
    tables.assign(std::begin(kAllTables), std::end(kAllTables));
  } else {
    for (const auto& n : names) {
      const auto id = parse_table_id(n);
      if (!id) throw UsageError("unknown table id '" + n + "'");
      if (std::find(tables.begin(), tables.end(), *id) == tables.end()) tables.push_back(*id);
    }
  }
  if (!out_dir.empty()) fs::create_directories(out_dir);

  out << "table       trials  matched  max_abs_diff  completions  input_physical\n";
  bool anchors_ok = true;
  std::vector<DiscrepancyReport> reports;
  for (PaperTableId id : tables) {
    DiscrepancyReport r = check_table(id, trials, seed, tol);
    if (is_regression_anchor(id) && !r.all_match()) anchors_ok = false;
    std::string name(table_name(id));
    out << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ')
        << pad_left(std::to_string(r.trials), 6) << "  "
        << pad_left(std::to_string(r.match_count) + "/" + std::to_string(r.total_count), 7)
        << "  " << pad_left(sci(r.max_abs_diff), 12) << "  "
        << pad_left(std::to_string(r.hermitian_completions), 11) << "  "
        << (r.input_physical ? "yes" : "no") << (is_regression_anchor(id) ? "  [anchor]" : "")
        << '\n';
    if (!out_dir.empty()) {
      write_file(fs::path(out_dir) / (name + ".json"), report_json(r, seed).dump(2) + "\n");
    }
    reports.push_back(std::move(r));
  }

  for (const auto& r : reports) {
    if (r.all_match()) continue;
    out << '\n' << table_name(r.table) << " mismatches (worst over trials):\n";
    std::size_t shown = 0;
    for (const auto& e : r.entries) {
      if (e.match) continue;
      if (shown == 8) {
        out << "  ... " << (r.total_count - r.match_count - shown) << " more\n";
        break;
      }
      out << "  (" << e.row << ',' << e.col << ")  diff " << sci(e.abs_diff) << "  paper "
          << complex_text(e.paper) << "  derived " << complex_text(e.derived);
      if (e.reading != "printed") out << "  [" << e.reading << ']';
      out << '\n';
      ++shown;
    }
  }
  out << "\nregression anchors: " << (anchors_ok ? "pass" : "FAIL") << '\n';
  return anchors_ok ? kExitOk : kExitValidation;
}

// ---------------------------------------------------------------- inspect

int cmd_inspect(const FamilyFlags& fam, const std::vector<std::string>& modes,
                const CLI::Option* rq_opt, double rq, const CLI::Option* rt_opt, double rt,
                std::ostream& out, std::ostream& err) {
  const FamilySpec spec = fam.spec();
  if (modes.size() > 1) throw UsageError("inspect takes at most one --mode");
  std::optional<Channel> channel;
  if (!modes.empty()) {
    channel = parse_channel(modes.front());
  } else if (rq_opt->count() && rt_opt->count()) {
    channel = Channel::Both;
  } else if (rq_opt->count()) {
    channel = Channel::Qubit;
  } else if (rt_opt->count()) {
    channel = Channel::Qutrit;
  }
  if (channel) {
    if (*channel != Channel::Qutrit && !rq_opt->count()) throw UsageError("--rq is required");
    if (*channel != Channel::Qubit && !rt_opt->count()) throw UsageError("--rt is required");
    if (*channel == Channel::Qubit && rt_opt->count()) throw UsageError("--rt needs mode qutrit or both");
    if (*channel == Channel::Qutrit && rq_opt->count()) throw UsageError("--rq needs mode qubit or both");
  }

  const BipartiteState initial = family_state(spec);

  out << "family: " << describe(spec) << '\n';
  print_fano(out, density_to_fano(initial));

  ComplexMatrix m = initial.rho();
  std::size_t dim_b = 3;
  if (channel) {
    std::optional<ChannelMode> mode;
    switch (*channel) {
      case Channel::Qubit: mode = ChannelMode::qubit_only(RindlerParam(rq)); break;
      case Channel::Qutrit: mode = ChannelMode::qutrit_only(RindlerParam(rt)); break;
      case Channel::Both: mode = ChannelMode::both(RindlerParam(rq), RindlerParam(rt)); break;
    }
    out << "mode: " << channel_name(*channel);
    if (mode->r_q()) out << " r_q=" << format_double(mode->r_q()->value());
    if (mode->r_t()) out << " r_t=" << format_double(mode->r_t()->value());
    out << '\n';
    m = apply_channel(initial.rho(), *mode);
    dim_b = output_dims(*channel).b;
  }

  out << "density matrix (" << m.rows() << 'x' << m.cols() << "):\n";
  print_matrix(out, m, basis_labels(dim_b));

  const ValidationReport report = validate_state(initial.rho());
  if (!report.is_physical) {
    err << "error: " << describe(spec) << " is not a physical state\n";
    err << "validation report: " << report.describe() << '\n';
    return kExitValidation;
  }
  const BipartiteState state(m, Dims{2, dim_b});
  out << "spectrum: ";
  print_values(out, hermitian_eigenvalues(m));
  const NegativityResult neg = negativity(state);
  out << "partial transpose spectrum: ";
  print_values(out, neg.eigenvalues);
  out << "negativity: " << format_double(neg.negativity) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit-qutrit entanglement under Rindler acceleration", "rindlerqt"};
  app.require_subcommand(1);
  const std::vector<std::string> mode_names = {"qubit", "qutrit", "both"};
  const auto r_range = CLI::Range(0.0, RindlerParam::kMax);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Negativity against r, written as CSV + metadata");
  std::string preset;
  FamilyFlags sweep_fam;
  std::vector<std::string> sweep_modes;
  std::size_t points = 64;
  bool grid2d = false;
  std::string sweep_out;
  sweep->add_option("preset", preset, "Figure preset")->check(CLI::IsMember(preset_names()));
  sweep_fam.add_to(*sweep);
  sweep->add_option("--mode", sweep_modes, "Accelerated subsystem(s), repeatable")
      ->check(CLI::IsMember(mode_names));
  auto* points_opt = sweep->add_option("--points", points, "Grid points on [0, pi/4]")
                         ->check(CLI::Range(std::size_t{2}, kMaxSweepPoints));
  sweep->add_flag("--grid2d", grid2d, "Independent r_q x r_t grid for the joint channel");
  sweep->add_option("--out", sweep_out, "CSV path; .json and .gp are written beside it");

  // check
  auto* check = app.add_subcommand("check", "Compare printed element tables with the channels");
  std::vector<std::string> tables;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  std::string check_out;
  check->add_option("tables", tables, "Table ids (default: all)");
  check->add_option("--trials", trials, "Random trials per table")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Seed for the random inputs")->required();
  check->add_option("--tol", tol, "Absolute tolerance per element")->check(CLI::NonNegativeNumber);
  check->add_option("--out", check_out, "Directory for per-table JSON reports");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "Print a (possibly accelerated) state");
  FamilyFlags inspect_fam;
  std::vector<std::string> inspect_modes;
  double rq = 0.0, rt = 0.0;
  inspect_fam.add_to(*inspect);
  inspect->add_option("--mode", inspect_modes, "Accelerated subsystem(s)")
      ->check(CLI::IsMember(mode_names));
  auto* rq_opt = inspect->add_option("--rq", rq, "Qubit acceleration angle")->check(r_range);
  auto* rt_opt = inspect->add_option("--rt", rt, "Qutrit acceleration angle")->check(r_range);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      return cmd_sweep(preset, sweep_fam, sweep_modes, points_opt, points, grid2d, sweep_out,
                       out, err);
    }
    if (check->parsed()) return cmd_check(tables, trials, seed, tol, check_out, out);
    return cmd_inspect(inspect_fam, inspect_modes, rq_opt, rq, rt_opt, rt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnphysicalStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace rindlerqt
