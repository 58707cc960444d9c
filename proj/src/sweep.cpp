#include "rindlerqt/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "rindlerqt/entanglement.hpp"
#include "rindlerqt/fano.hpp"

#ifndef RINDLERQT_VERSION
#define RINDLERQT_VERSION "0.0.0"
#endif

namespace rindlerqt {

namespace {

constexpr Channel kChannelOrder[] = {Channel::Qubit, Channel::Qutrit, Channel::Both};

bool wants(const SweepConfig& config, Channel c) {
  return std::find(config.modes.begin(), config.modes.end(), c) != config.modes.end();
}

std::string_view column_name(Channel c) {
  switch (c) {
    case Channel::Qubit: return "E_qubit";
    case Channel::Qutrit: return "E_qutrit";
    case Channel::Both: return "E_both";
  }
  return "";
}

const std::optional<double>& column(const CurveRow& row, Channel c) {
  switch (c) {
    case Channel::Qubit: return row.e_qubit;
    case Channel::Qutrit: return row.e_qutrit;
    case Channel::Both: break;
  }
  return row.e_both;
}

void validate_config(const SweepConfig& config) {
  if (config.points < 2 || config.points > kMaxSweepPoints) {
    throw std::invalid_argument("points must lie in [2, " + std::to_string(kMaxSweepPoints) +
                                "], got " + std::to_string(config.points));
  }
  if (config.modes.empty()) throw std::invalid_argument("at least one mode is required");
  if (config.grid2d && !wants(config, Channel::Both)) {
    throw std::invalid_argument("a 2-D grid sweeps the joint channel; mode 'both' is required");
  }
}

nlohmann::ordered_json family_json(const FamilySpec& family) {
  nlohmann::ordered_json j;
  j["name"] = family_name(family);
  std::visit(
      [&j](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ExampleOne>) {
          j["s3"] = f.s3;
          j["t3"] = f.t3;
        } else if constexpr (std::is_same_v<T, OneParameter>) {
          j["p"] = f.p;
        } else {
          j["alpha"] = f.alpha;
          j["beta"] = f.beta();
          j["gamma"] = f.gamma;
        }
      },
      family);
  return j;
}

}  // namespace

std::vector<double> sweep_grid(std::size_t points) {
  if (points < 2) throw std::invalid_argument("sweep_grid: need at least two points");
  std::vector<double> grid(points);
  const double step = RindlerParam::kMax / static_cast<double>(points - 1);
  for (std::size_t k = 0; k + 1 < points; ++k) grid[k] = step * static_cast<double>(k);
  grid.back() = RindlerParam::kMax;
  return grid;
}

std::vector<CurveRow> run_sweep(const SweepConfig& config) {
  validate_config(config);
  const BipartiteState initial = family_state(config.family);
  require_physical(initial, ("sweep " + describe(config.family)).c_str());

  const std::vector<double> grid = sweep_grid(config.points);
  std::vector<CurveRow> rows;
  if (config.grid2d) {
    rows.reserve(grid.size() * grid.size());
    for (double rq : grid) {
      for (double rt : grid) {
        CurveRow row{rq, rt, {}, {}, {}};
        row.e_both =
            negativity(accelerate_both(initial, RindlerParam(rq), RindlerParam(rt))).negativity;
        rows.push_back(row);
      }
    }
    return rows;
  }

  rows.reserve(grid.size());
  for (double r : grid) {
    const RindlerParam rp(r);
    CurveRow row{r, r, {}, {}, {}};
    if (wants(config, Channel::Qubit)) {
      row.e_qubit = negativity(accelerate_qubit(initial, rp)).negativity;
    }
    if (wants(config, Channel::Qutrit)) {
      row.e_qutrit = negativity(accelerate_qutrit(initial, rp)).negativity;
    }
    if (wants(config, Channel::Both)) {
      row.e_both = negativity(accelerate_both(initial, rp, rp)).negativity;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string format_csv(const SweepConfig& config, const std::vector<CurveRow>& rows) {
  std::string out;
  if (config.grid2d) {
    out += "r_q,r_t,E_both\n";
    for (const auto& row : rows) {
      out += format_double(row.r_q) + ',' + format_double(row.r_t) + ',' +
             format_double(row.e_both.value_or(NAN)) + '\n';
    }
    return out;
  }
  out += "r";
  for (Channel c : kChannelOrder) {
    if (wants(config, c)) out += ',' + std::string(column_name(c));
  }
  out += '\n';
  for (const auto& row : rows) {
    out += format_double(row.r_q);
    for (Channel c : kChannelOrder) {
      if (wants(config, c)) out += ',' + format_double(column(row, c).value_or(NAN));
    }
    out += '\n';
  }
  return out;
}

std::string format_metadata(const SweepConfig& config, const std::vector<CurveRow>& rows,
                            std::string_view csv_name) {
  nlohmann::ordered_json j;
  j["tool"] = "rindlerqt";
  j["version"] = RINDLERQT_VERSION;
  j["label"] = config.label;
  j["data"] = std::string(csv_name);
  j["family"] = family_json(config.family);
  nlohmann::ordered_json modes = nlohmann::ordered_json::array();
  for (Channel c : kChannelOrder) {
    if (wants(config, c)) modes.push_back(std::string(channel_name(c)));
  }
  j["modes"] = modes;
  j["grid"] = {{"r_start", 0.0},
               {"r_end", RindlerParam::kMax},
               {"points", config.points},
               {"layout", config.grid2d ? "r_q x r_t" : "r_q = r_t = r"}};
  j["rows"] = rows.size();
  j["negativity"] =
      "||rho^T_A||_1 - 1 (twice the summed magnitude of negative eigenvalues of the "
      "partial transpose over the qubit)";
  j["generators"] =
      "sigma3 = |1><1| - |0><0|, sigma2 = i(|0><1| - |1><0|); standard Gell-Mann tau";
  j["channels"] =
      "isometries: qubit |0> -> c|00> + s|11>, |1> -> |10>; qutrit |0> -> c^2|00> + "
      "sc(|UD> + |DU>) + s^2|PP>, |1> -> c|D0> - s|PD>, |2> -> c|U0> + s|PU>; region II traced";
  j["substitutions"] = config.substitutions;
  return j.dump(2) + "\n";
}

std::string format_gnuplot(const SweepConfig& config, std::string_view csv_name) {
  const std::string data(csv_name);
  std::string out;
  out += "set datafile separator ','\n";
  out += "set key autotitle columnhead\n";
  if (config.grid2d) {
    out += "set xlabel 'r_q'\nset ylabel 'r_t'\nset zlabel 'E'\n";
    out += "set dgrid3d " + std::to_string(config.points) + "," + std::to_string(config.points) +
           "\n";
    out += "splot '" + data + "' using 1:2:3 with lines\n";
    return out;
  }
  out += "set xlabel 'r'\nset ylabel 'E'\nset xrange [0:pi/4]\nset yrange [0:*]\n";
  std::string plot = "plot";
  int col = 2;
  for (Channel c : kChannelOrder) {
    if (!wants(config, c)) continue;
    if (col > 2) plot += ',';
    plot += " '" + data + "' using 1:" + std::to_string(col) + " with lines";
    ++col;
  }
  out += plot + "\n";
  return out;
}

std::vector<std::string> preset_names() { return {"fig1a", "fig1b", "fig2", "fig3"}; }

TwoParameterSubstitute fig3_substitute() {
  TwoParameterSubstitute best;
  bool found = false;
  for (int ia = 0; ia <= 10; ++ia) {
    for (int ig = 0; ig <= 20; ++ig) {
      const double alpha = 0.05 * ia;
      const double gamma = 0.05 * ig;
      std::optional<BipartiteState> state;
      try {
        state = two_parameter(alpha, gamma);
      } catch (const std::invalid_argument&) {
        continue;
      }
      ++best.candidates;
      const double e = negativity(*state).negativity;
      if (!found || e > best.negativity + 1e-12) {
        best.params = TwoParameter{alpha, gamma};
        best.negativity = e;
        found = true;
      }
    }
  }
  return best;
}

Preset make_preset(std::string_view name) {
  Preset preset;
  preset.name = std::string(name);
  SweepConfig& c = preset.config;
  c.label = preset.name;
  if (name == "fig1a") {
    c.family = ExampleOne{1.0, 1.0};
  } else if (name == "fig1b") {
    c.family = ExampleOne{0.0, 0.0};
  } else if (name == "fig2") {
    c.family = OneParameter{0.5};
  } else if (name == "fig3") {
    const TwoParameterSubstitute sub = fig3_substitute();
    c.family = sub.params;
    c.substitutions.push_back(
        "alpha = beta = 0.5 violates gamma + 2 alpha + 3 beta = 1 with a positive state "
        "((beta+gamma)/2 = -0.5); replaced by alpha = " +
        format_double(sub.params.alpha) + ", gamma = " + format_double(sub.params.gamma) +
        ", beta = " + format_double(sub.params.beta()) + ", the largest r = 0 negativity (" +
        format_double(sub.negativity) + ") over " + std::to_string(sub.candidates) +
        " physical points of a 0.05 grid on alpha in [0, 0.5], gamma in [0, 1]");
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  return preset;
}

}  // namespace rindlerqt
