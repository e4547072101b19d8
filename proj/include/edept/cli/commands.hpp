#pragma once

// The five subcommands and the argv entry point. Every command writes its
// CSV files and a <command>_summary.json into the output directory, then
// prints one line per check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "edept/asymptotics/scan.hpp"
#include "edept/cli/config.hpp"
#include "edept/cli/report.hpp"
#include "edept/field/energy.hpp"
#include "edept/field/maxwell.hpp"
#include "edept/field/sampling.hpp"
#include "edept/io/csv.hpp"
#include "edept/spectrum/export.hpp"
#include "edept/spectrum/validate.hpp"

namespace edept::cli {

namespace fs = std::filesystem;

struct Context {
  RunConfig config;
  fs::path out_dir;
  Report report;
  std::ostream& log;

  std::string path(const std::string& file) {
    const std::string p = (out_dir / file).string();
    report.output(p);
    return p;
  }
  unsigned threads() const { return config.threads; }
  double length() const { return config.params.length_scale(); }
};

namespace detail {

inline std::string fmt(double x) { return io::format_real(x); }

/// Short form for check names: t0, t1, t2.5.
inline std::string tag(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

inline spectrum::SpectrumPlan make_plan(const RunConfig& c) {
  const double L = c.params.length_scale();
  return {spectrum::TransformGrid::uniform(c.spectrum.transform_step * L, c.spectrum.transform_extent * L),
          spectrum::ModeGrid(c.spectrum.dk / L, c.spectrum.k_max / L, c.units[0])};
}

inline Eigen::Vector3d seam_axis(const RunConfig& c) {
  return Eigen::Vector3d(c.spectrum.seam_axis[0], c.spectrum.seam_axis[1], c.spectrum.seam_axis[2]).normalized();
}

inline numerics::CylGrid quadrature_grid(const RunConfig& c) {
  return numerics::CylGrid::defaults(c.params.length_scale(), c.quadrature.n_rho, c.quadrature.n_z);
}

inline void require_spectral_branch(const field::EdeptParams& p) {
  if (p.branch == field::Branch::Analytic)
    throw ConfigError("params.branch", "spectral commands need a real branch (real or imag)");
}

}  // namespace detail

/// Field map over a uniform (rho, z) grid at the configured time.
inline void cmd_fields(Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto p = c.resolved_params();
  const auto units = c.constants();
  const double L = ctx.length();
  const auto rho = numerics::AxisGrid::uniform(0.0, c.fields.rho_max * L, c.fields.n_rho).nodes();
  const auto z = numerics::AxisGrid::uniform(-c.fields.z_max * L, c.fields.z_max * L, c.fields.n_z).nodes();
  struct Row {
    field::CylindricalFields f;
    field::EnergyDensitySample u;
  };
  std::vector<Row> rows(rho.size() * z.size());
  parallel_for(
      rows.size(),
      [&](std::size_t n) {
        const auto pt = field::SpacetimePoint::cylindrical(c.time, rho[n / z.size()], 0.0, z[n % z.size()]);
        const auto s = field::em_fields(p, pt, field::DifferentiationScheme::dual(), units);
        rows[n] = {s.cyl, field::energy_density(s, p.branch, units)};
      },
      ctx.threads());

  auto out = io::open_output(ctx.path("fields.csv"));
  io::CsvWriter w(out, {"t", "rho", "z", "A_theta_re", "A_theta_im", "E_theta_re", "E_theta_im", "B_rho_re",
                        "B_rho_im", "B_z_re", "B_z_im", "u_electric", "u_magnetic", "u_total", "detection_rate"});
  std::size_t bad = 0;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& [f, u] = rows[n];
    const std::vector<io::Cell> cells = {c.time,          rho[n / z.size()], z[n % z.size()],  f.A_theta.real(),
                                         f.A_theta.imag(), f.E_theta.real(),  f.E_theta.imag(), f.B_rho.real(),
                                         f.B_rho.imag(),   f.B_z.real(),      f.B_z.imag(),     u.u_electric,
                                         u.u_magnetic,     u.u_total,         u.detection_rate};
    for (const auto& x : cells)
      if (!std::isfinite(std::get<double>(x))) ++bad;
    w.row(cells);
  }
  ctx.report.add(bound_check("fields.nonfinite_values", static_cast<double>(bad), 0.0,
                             std::to_string(rows.size()) + " points"));
}

namespace detail {

inline std::optional<double> predicted(const asymptotics::Prediction& pr, asymptotics::Quantity q) {
  using asymptotics::Quantity;
  switch (q) {
    case Quantity::AbsA: return pr.potential_exponent;
    case Quantity::DetectionRate: return pr.detection_rate_exponent;
    case Quantity::UElectric: return pr.electric_energy_exponent;
    default: return std::nullopt;
  }
}

inline bool identically_zero(const asymptotics::RadialProfile& prof) {
  return prof.flagged_count() == 0 &&
         std::all_of(prof.values.begin(), prof.values.end(), [](double v) { return v == 0.0; });
}

}  // namespace detail

/// Exponent scan, radial profiles and a fitted-vs-predicted summary.
inline void cmd_falloff(Context& ctx) {
  using asymptotics::Quantity;
  const RunConfig& c = ctx.config;
  const auto& f = c.falloff;
  const auto& tol = c.tolerances;
  const auto units = c.constants();
  asymptotics::ScanConfig sc;
  sc.window = {f.window[0], f.window[1]};
  sc.check_window = {f.check_window[0], f.check_window[1]};
  sc.samples = f.samples;
  sc.r2_floor = f.r2_floor;
  sc.stability = tol.window_stability;
  sc.threads = c.threads;
  std::vector<asymptotics::Direction> dirs;
  for (const auto& d : f.directions) dirs.push_back({d.name, d.theta, d.report_only});

  std::vector<asymptotics::ScanRow> rows;
  for (double t : f.times)
    for (int a : f.alphas) {
      auto p = field::EdeptParams::make(a, c.params.g0, c.params.g1, c.params.g2);
      p.branch = field::branch_from_string(c.branch, a);
      for (const auto& d : dirs) rows.push_back(asymptotics::scan_row(p, t, d, sc, units));
    }

  auto ex = io::open_output(ctx.path("falloff_exponents.csv"));
  io::CsvWriter we(ex, {"alpha", "branch", "t", "direction", "theta", "report_only", "quantity", "status",
                        "exponent", "prefactor", "r_squared", "used", "zeros", "flagged", "check_exponent",
                        "predicted"});
  auto pr = io::open_output(ctx.path("falloff_profiles.csv"));
  io::CsvWriter wp(pr, {"alpha", "branch", "t", "direction", "quantity", "r", "value", "flagged"});
  auto sm = io::open_output(ctx.path("falloff_summary.csv"));
  io::CsvWriter ws(sm, {"alpha", "branch", "t", "direction", "quantity", "fitted", "predicted", "deviation",
                        "tolerance", "historical", "pass"});

  json table = json::array();
  for (const auto& r : rows) {
    const auto pred = asymptotics::predicted_exponents(r.alpha);
    const bool parity = r.branch == pred.branch;
    for (std::size_t i = 0; i < asymptotics::kScanQuantities.size(); ++i) {
      const Quantity q = asymptotics::kScanQuantities[i];
      const auto& cell = r.cells[i];
      const auto& prof = r.profiles[i];
      const std::string status = cell.ok() ? (cell.fit->reliable ? "ok" : "unreliable")
                                 : detail::identically_zero(prof) ? "identically_zero"
                                                                  : "no_fit";
      const auto expect = parity ? detail::predicted(pred, q) : std::nullopt;
      const std::string qn = asymptotics::to_string(q);
      const std::string bn = field::to_string(r.branch);
      auto opt = [](std::optional<double> x) -> io::Cell { return x ? io::Cell(*x) : io::Cell(std::string()); };
      we.row({std::int64_t{r.alpha}, bn, r.t, r.direction.name, r.direction.theta,
              std::int64_t{r.direction.report_only}, qn, status,
              opt(cell.ok() ? std::optional(cell.fit->exponent) : std::nullopt),
              opt(cell.ok() ? std::optional(cell.fit->prefactor) : std::nullopt),
              opt(cell.ok() ? std::optional(cell.fit->r_squared) : std::nullopt),
              std::int64_t(cell.ok() ? cell.fit->used : 0), std::int64_t(cell.ok() ? cell.fit->zeros : 0),
              std::int64_t(prof.flagged_count()),
              opt(cell.check ? std::optional(cell.check->exponent) : std::nullopt), opt(expect)});
      for (std::size_t n = 0; n < prof.size(); ++n)
        wp.row({std::int64_t{r.alpha}, bn, r.t, r.direction.name, qn, prof.radii[n], prof.values[n],
                std::int64_t{prof.flagged[n]}});

      json entry = {{"alpha", r.alpha}, {"branch", bn},   {"t", r.t},
                    {"direction", r.direction.name},      {"quantity", qn},
                    {"status", status}, {"exponent", cell.ok() ? json(cell.fit->exponent) : json(nullptr)},
                    {"predicted", expect ? json(*expect) : json(nullptr)}};
      table.push_back(entry);

      if (!expect) continue;
      const double band = q == Quantity::AbsA ? tol.potential_exponent : tol.rate_exponent;
      const std::string name = "falloff." + qn + ".alpha" + std::to_string(r.alpha) + ".t" + detail::tag(r.t) +
                               "." + r.direction.name;
      const bool zero = status == "identically_zero";
      ws.row({std::int64_t{r.alpha}, bn, r.t, r.direction.name, qn,
              opt(cell.ok() ? std::optional(cell.fit->exponent) : std::nullopt), *expect,
              opt(cell.ok() ? std::optional(cell.fit->exponent - *expect) : std::nullopt), band,
              q == Quantity::AbsA ? io::Cell(std::string()) : io::Cell(asymptotics::Prediction::historical_exponent),
              zero ? std::string("n/a") : std::string(cell.ok() && std::abs(cell.fit->exponent - *expect) <= band
                                                          ? "yes"
                                                          : "no")});
      if (r.direction.report_only) continue;
      if (zero) {
        // The real electric field of some branches vanishes at isolated times.
        ctx.report.add(skipped_check(name, "identically zero at this time"));
      } else if (!cell.ok()) {
        ctx.report.add({name, std::numeric_limits<double>::quiet_NaN(), band, false, false, cell.failure});
      } else {
        auto chk = bound_check(name, std::abs(cell.fit->exponent - *expect), band,
                               "fitted " + detail::fmt(cell.fit->exponent));
        if (!cell.fit->reliable) {
          chk.pass = false;
          chk.detail += ", r^2 below floor";
        }
        if (!cell.stable(tol.window_stability)) {
          chk.pass = false;
          chk.detail += ", window-dependent";
        }
        ctx.report.add(std::move(chk));
      }
    }
  }

  // First differences of the |E| exponents across alpha.
  if (f.alphas.size() >= 3) {
    json lin = json::array();
    for (double t : f.times)
      for (const auto& d : dirs) {
        std::vector<asymptotics::ScanRow> sel;
        for (const auto& r : rows)
          if (r.t == t) sel.push_back(r);
        const auto s = asymptotics::exponent_series(sel, Quantity::AbsE, d.name);
        json diffs = json::array();
        for (const auto& x : s.differences) diffs.push_back(x ? json(*x) : json(nullptr));
        lin.push_back({{"t", t}, {"direction", d.name}, {"differences", diffs}});
        if (d.report_only) continue;
        const std::string name = "falloff.abs_E.linearity.t" + detail::tag(t) + "." + d.name;
        std::string seen;
        for (const auto& x : s.differences) seen += (seen.empty() ? "" : " ") + (x ? detail::fmt(*x) : "none");
        const auto spread = s.difference_spread();
        const bool complete = std::all_of(s.differences.begin(), s.differences.end(), [](auto x) { return x; });
        if (!spread || !complete)
          ctx.report.add({name, spread.value_or(std::numeric_limits<double>::quiet_NaN()), tol.linearity, false,
                          false, "incomplete, differences " + seen});
        else
          ctx.report.add(bound_check(name, *spread, tol.linearity, "differences " + seen));
      }
    ctx.report.extra()["abs_E_differences"] = lin;
  }
  ctx.report.extra()["exponent_table"] = table;
  ctx.report.extra()["historical_exponent"] = asymptotics::Prediction::historical_exponent;
}

/// Spectral export plus norm, energies and the grid-doubling study.
inline void cmd_spectrum(Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto p = c.resolved_params();
  detail::require_spectral_branch(p);
  const auto units = c.constants();
  const auto& tol = c.tolerances;
  const auto plan = detail::make_plan(c);
  const spectrum::ExtractionOptions opt{c.threads, {}};
  const auto a = spectrum::positive_frequency_spectrum(p, c.time, plan, spectrum::FieldKind::Potential, units, opt);
  const auto tr = spectrum::transversality(a, plan.modes(), tol.amplitude_floor);
  ctx.report.add(bound_check("spectrum.transversality", tr.max_residual, tol.transversality,
                             "node (" + std::to_string(tr.node_i) + ", " + std::to_string(tr.node_j) + ")"));
  const auto h = spectrum::helicity_amplitudes(a, plan.modes(), units, std::numeric_limits<double>::infinity(),
                                               tol.amplitude_floor, detail::seam_axis(c));
  {
    auto out = io::open_output(ctx.path("spectrum.csv"));
    spectrum::write_spectrum_csv(out, a, h, plan.modes());
  }
  if (!(h.norm > 0.0) || !std::isfinite(h.norm)) throw DivergenceError("photon norm is not finite and positive");
  const auto position = field::total_energy(p, c.time, detail::quadrature_grid(c), units, c.threads);
  const double parseval = std::abs(h.spectral_energy - position.total) / position.total;
  ctx.report.add(bound_check("spectrum.parseval", parseval, tol.parseval,
                             "spectral " + detail::fmt(h.spectral_energy) + ", position " +
                                 detail::fmt(position.total)));
  json values = {{"norm", h.norm},
                 {"norm_plus", h.norm_plus},
                 {"norm_minus", h.norm_minus},
                 {"spectral_energy", h.spectral_energy},
                 {"position_energy", position.total},
                 {"position_energy_electric", position.electric},
                 {"position_energy_magnetic", position.magnetic},
                 {"infrared_bound", h.infrared_bound}};
  if (c.spectrum.check_convergence) {
    const auto nc = spectrum::converged_norm(p, c.time, plan.modes(), plan.grid(),
                                             std::numeric_limits<double>::infinity(), units, opt);
    ctx.report.add(bound_check("spectrum.norm_convergence", nc.relative_change, tol.norm_convergence,
                               "coarse " + detail::fmt(nc.coarse) + ", fine " + detail::fmt(nc.fine)));
    values["norm_doubled"] = nc.fine;
    values["norm_relative_change"] = nc.relative_change;
  } else {
    ctx.report.add(skipped_check("spectrum.norm_convergence", "disabled in config"));
  }
  ctx.report.extra()["values"] = values;
  ctx.log << "norm " << detail::fmt(h.norm) << "  spectral energy " << detail::fmt(h.spectral_energy)
          << "  position energy " << detail::fmt(position.total) << '\n';
}

/// Maxwell residuals over random points, then the spectral checks.
inline void cmd_validate(Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto& v = c.validation;
  const auto& tol = c.tolerances;
  const auto units = c.constants();
  const double L = ctx.length();
  for (int a : v.alphas) {
    auto p = field::EdeptParams::make(a, c.params.g0, c.params.g1, c.params.g2);
    if (c.branch != "default") p.branch = field::branch_from_string(c.branch, a);
    const auto pts = field::random_points(v.maxwell_points, v.r_min * L, v.r_max * L, v.t_span * L / units.c(),
                                          c.seed + static_cast<unsigned>(a));
    std::vector<field::MaxwellResiduals> res(pts.size());
    parallel_for(
        pts.size(), [&](std::size_t i) { res[i] = field::maxwell_residuals(p, pts[i], {}, units); }, c.threads);
    field::ResidualSet worst;
    for (const auto& r : res)
      for (const auto* s : {&r.complex, &r.real, &r.imag}) {
        worst.wave = std::max(worst.wave, s->wave);
        worst.gauss = std::max(worst.gauss, s->gauss);
        worst.faraday = std::max(worst.faraday, s->faraday);
        worst.ampere = std::max(worst.ampere, s->ampere);
      }
    const std::string base = "maxwell.alpha" + std::to_string(a) + ".";
    ctx.report.add(bound_check(base + "wave", worst.wave, tol.maxwell));
    ctx.report.add(bound_check(base + "gauss", worst.gauss, tol.maxwell));
    ctx.report.add(bound_check(base + "faraday", worst.faraday, tol.maxwell));
    ctx.report.add(bound_check(base + "ampere", worst.ampere, tol.maxwell));
  }

  const auto p = c.resolved_params();
  detail::require_spectral_branch(p);
  const auto plan = detail::make_plan(c);
  spectrum::ValidationOptions vo;
  vo.t1 = c.spectrum.round_trip_time;
  vo.cloud_points = c.spectrum.cloud_points;
  vo.cloud_half_width = c.spectrum.cloud_half_width;
  vo.seed = c.seed;
  vo.tolerances = {tol.transversality, tol.relation, tol.round_trip, tol.positive_frequency, tol.amplitude_floor};
  vo.extraction.threads = c.threads;
  const auto a = spectrum::positive_frequency_spectrum(p, c.time, plan, spectrum::FieldKind::Potential, units,
                                                       vo.extraction);
  const auto h = spectrum::helicity_amplitudes(a, plan.modes(), units, std::numeric_limits<double>::infinity(),
                                               tol.amplitude_floor, detail::seam_axis(c));
  const auto r = spectrum::validate_spectrum(a, h, plan, p, vo, units);
  ctx.report.add(bound_check("spectrum.transversality_A", r.transversality_A, tol.transversality));
  ctx.report.add(bound_check("spectrum.longitudinal_B", r.longitudinal_B, tol.relation));
  ctx.report.add(bound_check("spectrum.electric_relation", r.electric_relation, tol.relation));
  ctx.report.add(bound_check("spectrum.magnetic_relation", r.magnetic_relation, tol.relation));
  ctx.report.add(bound_check("spectrum.round_trip_t0", r.round_trip_t0, tol.round_trip));
  ctx.report.add(bound_check("spectrum.round_trip_t1", r.round_trip_t1, tol.round_trip, "t1 " + detail::fmt(r.t1)));
  ctx.report.add(bound_check("spectrum.positive_frequency", r.positive_frequency_error, tol.positive_frequency));
  ctx.report.extra()["values"] = {{"complex_rate_ratio", r.complex_rate_ratio},
                                  {"norm_plus_fraction", r.norm_plus_fraction},
                                  {"norm", h.norm}};
}

/// Position-space energy at several times, drift, and Parseval per time.
inline void cmd_energy(Context& ctx) {
  const RunConfig& c = ctx.config;
  const auto p = c.resolved_params();
  const auto units = c.constants();
  const auto& tol = c.tolerances;
  const auto grid = detail::quadrature_grid(c);
  const bool spectral = c.energy.spectral && p.branch != field::Branch::Analytic;
  const auto plan = detail::make_plan(c);

  std::vector<field::EnergyIntegrals> pos;
  std::vector<double> spec;
  for (double t : c.energy.times) {
    pos.push_back(field::total_energy(p, t, grid, units, c.threads));
    if (spectral) {
      const auto a = spectrum::positive_frequency_spectrum(p, t, plan, spectrum::FieldKind::Potential, units,
                                                           {c.threads, {}});
      spec.push_back(spectrum::helicity_amplitudes(a, plan.modes(), units, std::numeric_limits<double>::infinity(),
                                                   tol.amplitude_floor, detail::seam_axis(c))
                         .spectral_energy);
    }
  }
  const double u0 = pos.front().total;
  if (!(u0 > 0.0) || !std::isfinite(u0)) throw DivergenceError("position-space energy is not finite and positive");

  auto out = io::open_output(ctx.path("energy.csv"));
  io::CsvWriter w(out, {"t", "electric", "magnetic", "total", "drift", "spectral_energy", "parseval_error"});
  double drift = 0.0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const double t = c.energy.times[i];
    const double d = std::abs(pos[i].total - u0) / u0;
    drift = std::max(drift, d);
    io::Cell se = std::string(), pe = std::string();
    if (spectral) {
      const double err = std::abs(spec[i] - pos[i].total) / pos[i].total;
      se = spec[i];
      pe = err;
      ctx.report.add(bound_check("energy.parseval.t" + detail::tag(t), err, tol.parseval,
                                 "spectral " + detail::fmt(spec[i]) + ", position " + detail::fmt(pos[i].total)));
    }
    w.row({t, pos[i].electric, pos[i].magnetic, pos[i].total, d, se, pe});
  }
  if (!spectral) ctx.report.add(skipped_check("energy.parseval", "spectral comparison off or analytic branch"));
  ctx.report.add(bound_check("energy.conservation", drift, tol.conservation));
}

/// Exit code for an exception escaping a command.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const InvalidArgument*>(&e)) return kExitUsage;
  return kExitNumerical;
}

/// Parses argv, runs one subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               std::optional<bool> color = std::nullopt) {
  CLI::App app{"Focused pulse-train field toolkit", "edept"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<int> alpha;
  std::optional<std::string> branch;
  std::optional<double> time;
  std::optional<std::string> out_dir;
  std::optional<unsigned> threads;
  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--alpha", alpha, "override params.alpha (and the alpha lists)");
  app.add_option("--branch", branch, "override params.branch: real, imag, analytic or default");
  app.add_option("--t", time, "override the time (and falloff.times)");
  app.add_option("--out", out_dir, "override output.directory");
  app.add_option("--threads", threads, "worker threads, 0 for all cores");

  using Command = void (*)(Context&);
  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> commands = {
      {"fields", {"field map CSV over a (rho, z) grid", cmd_fields}},
      {"falloff", {"power-law fall-off exponents and radial profiles", cmd_falloff}},
      {"spectrum", {"positive-frequency spectrum, norm and energies", cmd_spectrum}},
      {"validate", {"Maxwell residuals and spectral consistency checks", cmd_validate}},
      {"energy", {"energy integrals, conservation and Parseval", cmd_energy}}};
  for (const auto& [name, info] : commands) app.add_subcommand(name, info.first)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Command cmd = nullptr;
  for (const auto& [n, info] : commands)
    if (n == name) cmd = info.second;

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    if (alpha) {
      config.params.alpha = *alpha;
      config.falloff.alphas = {*alpha};
      config.validation.alphas = {*alpha};
    }
    if (branch) config.branch = *branch;
    if (time) {
      config.time = *time;
      config.falloff.times = {*time};
    }
    if (out_dir) config.output.directory = *out_dir;
    if (threads) config.threads = *threads;
    validate(config);
    std::error_code ec;
    fs::create_directories(config.output.directory, ec);
    if (ec || !fs::is_directory(config.output.directory))
      throw ConfigError("output.directory", "cannot create '" + config.output.directory + "'");
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Context ctx{config, fs::path(config.output.directory), Report(name, config), out};
  try {
    cmd(ctx);
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << "error: " << name << ": " << e.what() << '\n';
    return code;
  }
  ctx.report.write_summary(ctx.out_dir);
  ctx.report.print(out, color.value_or(use_color(::isatty(STDOUT_FILENO) != 0)));
  const int code = ctx.report.exit_code();
  out << name << ": " << (code == kExitOk ? "all checks pass" : "some checks failed") << '\n';
  return code;
}

}  // namespace edept::cli
