#include "ptwell/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ptwell/analysis.hpp"
#include "ptwell/oracle.hpp"
#include "ptwell/secular.hpp"
#include "ptwell/table.hpp"
#include "ptwell/wavefunc.hpp"

namespace ptwell {

namespace {

struct CommonOptions {
  std::string format = "csv";
  bool meta_time = false;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--meta-time", common.meta_time, "Record the generation time in the meta block");
}

void stamp_meta(Table& table, const std::string& command, const CommonOptions& common) {
  table.meta.insert(table.meta.begin(), {"version", std::string(version)});
  table.meta.insert(table.meta.begin(), {"command", command});
  if (common.meta_time) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    table.meta.emplace_back("generated", ts.str());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// x_i spread evenly on [lo, hi]; exactly antisymmetric when lo = -hi.
double grid_point(double lo, double hi, int i, int samples) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  return mid + half * static_cast<double>(2 * i - (samples - 1)) / (samples - 1);
}

struct SpectrumArgs {
  double T = 0.0;
  int levels = 10;
  double tol = default_secular_tol;
};

Table spectrum_command(const SpectrumArgs& a) {
  require(a.T > 0.0, "--T must be positive");
  require(a.levels >= 1, "--levels must be at least 1");
  require(a.tol > 0.0, "--tol must be positive");
  const WellSpec spec(a.T);
  Table table;
  table.meta = {{"T", a.T}, {"levels", static_cast<long long>(a.levels)}, {"tol", a.tol}};
  table.columns = {"N", "omega", "k", "E", "p", "q", "alpha", "R", "G", "branch"};
  for (const SpectrumRow& r : spectrum_table(spec, a.levels, a.tol)) {
    table.rows.push_back({static_cast<long long>(r.N), r.omega, r.k, r.E, r.p, r.q, r.alpha, r.R,
                          r.G, std::string(1, branch_symbol(r.branch))});
  }
  return table;
}

struct WavefunctionArgs {
  double T = 0.0;
  int level = 0;
  double xmin = -3.0 * pi;
  double xmax = 3.0 * pi;
  int samples = 1000;
  double tol = default_secular_tol;
};

Table wavefunction_command(const WavefunctionArgs& a) {
  require(a.T > 0.0, "--T must be positive");
  require(a.level >= 0, "--level must be nonnegative");
  require(a.xmin < a.xmax, "--xmin must be below --xmax");
  require(a.samples >= 2, "--samples must be at least 2");
  const WellSpec spec(a.T);
  const WaveFunction wf = build(solve_level(spec, LevelIndex(a.level), a.tol));
  Table table;
  table.meta = {{"T", a.T},
                {"level", static_cast<long long>(a.level)},
                {"branch", std::string(1, branch_symbol(wf.level.index.branch()))},
                {"omega", wf.level.omega},
                {"k", wf.level.k},
                {"E", wf.level.E},
                {"G", wf.level.G},
                {"sigma_re", wf.sigma.real()},
                {"sigma_im", wf.sigma.imag()},
                {"B_im", wf.B.imag()},
                {"outer_amp_re", wf.outer_amp.real()},
                {"outer_amp_im", wf.outer_amp.imag()}};
  table.columns = {"x", "re_psi", "im_psi"};
  for (int i = 0; i < a.samples; ++i) {
    const double x = grid_point(a.xmin, a.xmax, i, a.samples);
    const cplx psi = eval(wf, x);
    table.rows.push_back({x, psi.real(), psi.imag()});
  }
  return table;
}

struct Figure1Args {
  double T = 1.0;
  int samples = 1000;
  int levels = 6;
};

Table figure1_command(const Figure1Args& a) {
  require(a.T > 0.0, "--T must be positive");
  require(a.samples >= 100, "--samples must be at least 100");
  require(a.levels >= 1, "--levels must be at least 1");
  Table table;
  table.meta = {{"T", a.T},
                {"samples", static_cast<long long>(a.samples)},
                {"levels", static_cast<long long>(a.levels)}};
  table.columns = {"omega", "lhs"};
  for (int n = 0; n < a.levels; ++n) table.columns.push_back("rhs_" + std::to_string(n));
  for (int i = 0; i < a.samples; ++i) {
    const double w = static_cast<double>(i) / (a.samples - 1);
    const double root_term = std::sqrt(2.0 * cos_half_pi(w));
    std::vector<Cell> row{w, std::sin(pi * w / 2.0)};
    for (int n = 0; n < a.levels; ++n) {
      row.emplace_back((2.0 * n + 2.0 - w) / (4.0 * a.T) * root_term);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

struct VerifyArgs {
  double T = 0.0;
  int levels = 5;
  std::string lambda;
  std::string h = "pi/500";
  double bound = 1e-3;
};

int verify_command(const VerifyArgs& a, Table& table, std::ostream& err) {
  require(a.T > 0.0, "--T must be positive");
  require(a.levels >= 1, "--levels must be at least 1");
  require(a.bound > 0.0, "--bound must be positive");
  const WellSpec spec(a.T);
  std::vector<Level> levels;
  double p_min = std::numeric_limits<double>::infinity();
  for (int n = 0; n < a.levels; ++n) {
    levels.push_back(solve_level(spec, LevelIndex(n)));
    p_min = std::min(p_min, levels.back().sigma_parts.p);
  }
  const double h = parse_length(a.h);
  const OracleConfig cfg = a.lambda.empty()
                               ? OracleConfig::aligned(default_lambda(p_min),
                                                       static_cast<int>(std::lround(pi / h)),
                                                       a.levels)
                               : OracleConfig(parse_length(a.lambda), h, a.levels);
  // Alignment of a user-supplied h is checked by the constructor above.
  if (a.lambda.empty()) (void)OracleConfig(cfg.lambda(), h, a.levels);
  if (!tail_containment_ok(cfg, p_min)) {
    err << "warning: Lambda = " << format_double(cfg.lambda()) << " is below pi + 6/p_min = "
        << format_double(pi + 6.0 / p_min) << "; truncation error may dominate\n";
  }
  const std::vector<OracleEigenpair> pairs = fd_spectrum(spec, cfg);

  table.meta = {{"T", a.T},
                {"levels", static_cast<long long>(a.levels)},
                {"lambda", cfg.lambda()},
                {"h", cfg.h()},
                {"cells_per_pi", static_cast<long long>(cfg.cells_per_pi())},
                {"matrix_size", static_cast<long long>(cfg.size())},
                {"bound", a.bound}};
  table.columns = {"N", "E_analytic", "re_E_fd", "im_E_fd", "abs_delta_re", "inner_weight"};
  bool within = true;
  for (int n = 0; n < a.levels; ++n) {
    const OracleEigenpair& pair = pairs[static_cast<std::size_t>(n)];
    const double delta = std::abs(pair.energy.real() - levels[static_cast<std::size_t>(n)].E);
    within = within && delta <= a.bound;
    table.rows.push_back({static_cast<long long>(n), levels[static_cast<std::size_t>(n)].E,
                          pair.energy.real(), pair.energy.imag(), delta, pair.inner_weight});
  }
  return within ? exit_ok : exit_verification;
}

struct LimitsArgs {
  std::vector<double> T_list;
  int levels = 1;
};

Table limits_command(const LimitsArgs& a) {
  require(!a.T_list.empty(), "--T-list must not be empty");
  for (double t : a.T_list) require(t > 0.0, "--T-list entries must be positive");
  require(a.levels >= 1, "--levels must be at least 1");
  const LimitReport report = limit_report(a.T_list, a.levels);
  Table table;
  std::string list;
  for (double t : a.T_list) list += (list.empty() ? "" : ";") + format_double(t);
  table.meta = {{"T_list", list}, {"levels", static_cast<long long>(a.levels)}};
  table.columns = {"T", "N", "E", "E_hermitian", "dev_hermitian", "E_weak", "dev_weak"};
  for (const LimitEntry& e : report.entries) {
    table.rows.push_back({e.T, static_cast<long long>(e.N), e.E, e.hermitian_level,
                          e.hermitian_deviation, e.weak_level, e.weak_deviation});
  }
  return table;
}

}  // namespace

double parse_length(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto to_number = [&](const std::string& part) {
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("cannot parse length '" + text + "'");
    return v;
  };
  try {
    const auto at = s.find("pi");
    if (at == std::string::npos) return to_number(s);
    std::string coef = s.substr(0, at);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double value = coef.empty() ? pi : to_number(coef) * pi;
    const std::string rest = s.substr(at + 2);
    if (!rest.empty()) {
      if (rest.front() != '/') throw std::invalid_argument("cannot parse length '" + text + "'");
      value /= to_number(rest.substr(1));
    }
    return value;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse length '" + text + "'");
  }
}

std::vector<double> interpolated_crossings(const std::vector<double>& omega,
                                           const std::vector<double>& lhs,
                                           const std::vector<double>& rhs) {
  std::vector<double> crossings;
  for (std::size_t i = 1; i < omega.size(); ++i) {
    const double d0 = lhs[i - 1] - rhs[i - 1];
    const double d1 = lhs[i] - rhs[i];
    if ((d0 < 0.0) != (d1 < 0.0)) {
      crossings.push_back(omega[i - 1] + (omega[i] - omega[i - 1]) * d0 / (d0 - d1));
    }
  }
  return crossings;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra of the PT-symmetric imaginary square well", "ptwell"};
  app.require_subcommand(1);
  // "--h" is the grid step of `verify`, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(version));

  CommonOptions common;

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Solve the lowest levels");
  spectrum_cmd->add_option("--T", spectrum.T, "Coupling T (potential +-iT^2)")->required();
  spectrum_cmd->add_option("--levels", spectrum.levels, "Number of levels")->capture_default_str();
  spectrum_cmd->add_option("--tol", spectrum.tol, "Tolerance on |F|")->capture_default_str();
  add_common(spectrum_cmd, common);

  WavefunctionArgs wave;
  auto* wave_cmd = app.add_subcommand("wavefunction", "Sample psi(x) of one level");
  wave_cmd->add_option("--T", wave.T, "Coupling T")->required();
  wave_cmd->add_option("--level", wave.level, "Level index N")->capture_default_str();
  wave_cmd->add_option("--xmin", wave.xmin, "Left end of the sampling grid");
  wave_cmd->add_option("--xmax", wave.xmax, "Right end of the sampling grid");
  wave_cmd->add_option("--samples", wave.samples, "Number of samples")->capture_default_str();
  wave_cmd->add_option("--tol", wave.tol, "Tolerance on |F|")->capture_default_str();
  add_common(wave_cmd, common);

  Figure1Args fig;
  auto* fig_cmd = app.add_subcommand("figure1", "Curves of the graphical root construction");
  fig_cmd->add_option("--T", fig.T, "Coupling T")->capture_default_str();
  fig_cmd->add_option("--samples", fig.samples, "Samples on [0, 1]")->capture_default_str();
  fig_cmd->add_option("--levels", fig.levels, "Number of rhs curves")->capture_default_str();
  add_common(fig_cmd, common);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Compare with the finite-difference oracle");
  ver_cmd->add_option("--T", ver.T, "Coupling T")->required();
  ver_cmd->add_option("--levels", ver.levels, "Number of levels")->capture_default_str();
  ver_cmd->add_option("--lambda", ver.lambda,
                      "Truncation half-width, e.g. 4pi (default max(4pi, pi + 8/p))");
  ver_cmd->add_option("--h", ver.h, "Grid step, must divide pi")->capture_default_str();
  ver_cmd->add_option("--bound", ver.bound, "Allowed |Re E_fd - E|")->capture_default_str();
  add_common(ver_cmd, common);

  LimitsArgs lim;
  auto* lim_cmd = app.add_subcommand("limits", "Level trajectories against both limits");
  lim_cmd->add_option("--T-list", lim.T_list, "Comma-separated couplings")
      ->required()
      ->delimiter(',');
  lim_cmd->add_option("--levels", lim.levels, "Number of levels")->capture_default_str();
  add_common(lim_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion& e) {
    out << version << '\n';
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const OutputFormat format = parse_format(common.format);
    Table table;
    int code = exit_ok;
    std::string name;
    if (spectrum_cmd->parsed()) {
      name = "spectrum";
      table = spectrum_command(spectrum);
    } else if (wave_cmd->parsed()) {
      name = "wavefunction";
      table = wavefunction_command(wave);
    } else if (fig_cmd->parsed()) {
      name = "figure1";
      table = figure1_command(fig);
    } else if (ver_cmd->parsed()) {
      name = "verify";
      code = verify_command(ver, table, err);
    } else {
      name = "limits";
      table = limits_command(lim);
    }
    stamp_meta(table, name, common);
    write_table(out, table, format);
    if (code == exit_verification) err << "verification bound exceeded\n";
    return code;
  } catch (const StructuralError& e) {
    err << "solver structural failure: " << e.what() << '\n';
    return exit_solver;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return exit_solver;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::runtime_error& e) {
    err << "solver failure: " << e.what() << '\n';
    return exit_solver;
  }
}

}  // namespace ptwell
