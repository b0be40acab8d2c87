// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptwell/analysis.hpp"
#include "ptwell/cli.hpp"
#include "ptwell/oracle.hpp"
#include "ptwell/secular.hpp"
#include "ptwell/table.hpp"
#include "ptwell/wavefunc.hpp"

using namespace ptwell;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<double> grid_T{0.1, 1.0, 10.0, 100.0};
constexpr int grid_levels = 20;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Level> grid_levels_solved() {
  std::vector<Level> levels;
  for (double T : grid_T) {
    for (int N = 0; N < grid_levels; ++N) levels.push_back(solve_level(WellSpec(T), LevelIndex(N)));
  }
  return levels;
}

Outcome root_existence() {
  const auto t0 = Clock::now();
  int bad_scans = 0;
  double worst = 0.0;
  for (double T : grid_T) {
    for (int N = 0; N < grid_levels; ++N) {
      const WellSpec spec(T);
      if (scan_roots(spec, LevelIndex(N), 10000).size() != 1) ++bad_scans;
      worst = std::max(worst, solve_root(spec, LevelIndex(N)).residual);
    }
  }
  const double elapsed = seconds_since(t0);
  return {bad_scans == 0 && worst <= 1e-12 && elapsed <= 1.0,
          fmt("scans without a single sign change: %.0f, max |F| = %.2e, time %.3f s", bad_scans,
              worst, elapsed)};
}

Outcome bracket_containment(const std::vector<Level>& levels) {
  int violations = 0;
  for (const Level& l : levels) {
    const int N = l.index.value();
    const double lo = N % 2 == 0 ? N / 2 + 0.25 : (N - 1) / 2 + 0.75;
    const double hi = N % 2 == 0 ? N / 2 + 0.5 : (N - 1) / 2 + 1.0;
    if (!(l.k > lo && l.k < hi)) ++violations;
  }
  return {violations == 0, fmt("violations: %.0f of %.0f levels", violations,
                               static_cast<double>(levels.size()))};
}

Outcome form_equivalence() {
  double worst = 0.0;
  for (double T : grid_T) {
    for (int N = 0; N < grid_levels; ++N) {
      const double a = solve_root(WellSpec(T), LevelIndex(N)).omega;
      const double b = solve_root_fixed_point(WellSpec(T), LevelIndex(N)).omega;
      worst = std::max(worst, std::abs(a - b));
    }
  }
  return {worst <= 1e-12, fmt("max |omega_11 - omega_13| = %.2e", worst)};
}

Outcome branch_identities(const std::vector<Level>& levels) {
  double worst_tan = 0.0;
  for (const Level& l : levels) worst_tan = std::max(worst_tan, branch_consistency(l));
  std::mt19937_64 rng(2001);
  std::uniform_real_distribution<double> log_t(std::log(0.01), std::log(1000.0));
  std::uniform_real_distribution<double> alpha(1e-3, pi / 2 - 1e-3);
  double worst_product = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BranchRoots x = branch_roots(sigma_from_alpha(WellSpec(std::exp(log_t(rng))), alpha(rng)));
    worst_product = std::max(worst_product, std::abs(x.X1 * x.X2 + 1.0));
  }
  return {worst_tan <= 1e-9 && worst_product <= 1e-12,
          fmt("max |tan(k pi) - X| = %.2e, max |X1 X2 + 1| = %.2e", worst_tan, worst_product)};
}

Outcome matching(const std::vector<Level>& levels) {
  double value = 0.0, deriv = 0.0, r7 = 0.0, re_tan = 0.0;
  for (const Level& l : levels) {
    const WaveFunction wf = build(l);
    const MatchingMismatch m = matching_residual(wf);
    const MatchingData d = omega_matching(wf);
    value = std::max(value, m.value);
    deriv = std::max(deriv, m.derivative);
    r7 = std::max(r7, d.residual7);
    re_tan = std::max(re_tan, std::abs(d.re_tan));
  }
  return {value <= 1e-9 && deriv <= 1e-9 && r7 <= 1e-8 && re_tan <= 1e-8,
          fmt("max value/derivative mismatch %.2e / %.2e, ", value, deriv) +
              fmt("max |G + ik tan| = %.2e, max |Re tan| = %.2e", r7, re_tan)};
}

Outcome pt_symmetry() {
  double worst = 0.0;
  for (double T : {1.0, 10.0}) {
    for (int N = 0; N <= 5; ++N) {
      const WaveFunction wf = build(solve_level(WellSpec(T), LevelIndex(N)));
      for (int i = 0; i < 400; ++i) {
        const double x = -4 * pi + 8 * pi * i / 399.0;
        worst = std::max(worst, std::abs(eval(wf, -x) - std::conj(eval(wf, x))));
      }
    }
  }
  return {worst <= 1e-12, fmt("max |psi(-x) - conj psi(x)| = %.2e", worst)};
}

Outcome energy_bounds(const std::vector<Level>& levels) {
  int violations = 0;
  for (const Level& l : levels) {
    if (!strict_bounds_check(l)) ++violations;
  }
  return {violations == 0, fmt("strict violations: %.0f of %.0f levels", violations,
                               static_cast<double>(levels.size()))};
}

struct OracleRun {
  double max_im = 0.0;
  double max_delta = 0.0;
  std::vector<double> deltas;
};

OracleRun oracle_run(const WellSpec& spec, const OracleConfig& cfg) {
  OracleRun run;
  const auto pairs = fd_spectrum(spec, cfg);
  for (int N = 0; N < cfg.count(); ++N) {
    const auto& pr = pairs[static_cast<std::size_t>(N)];
    const double delta = std::abs(pr.energy.real() - solve_level(spec, LevelIndex(N)).E);
    run.max_im = std::max(run.max_im, std::abs(pr.energy.imag()));
    run.max_delta = std::max(run.max_delta, delta);
    run.deltas.push_back(delta);
  }
  return run;
}

std::string ratio_list(const OracleRun& coarse, const OracleRun& fine, double& lo, double& hi) {
  std::string list;
  lo = INFINITY;
  hi = 0.0;
  for (std::size_t i = 0; i < coarse.deltas.size(); ++i) {
    const double r = coarse.deltas[i] / fine.deltas[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    list += (i ? "," : "") + fmt("%.2f", r);
  }
  return list;
}

Outcome oracle_agreement() {
  const auto t0 = Clock::now();
  const WellSpec spec(1.0);
  const OracleRun coarse = oracle_run(spec, OracleConfig(4 * pi, pi / 500, 5));
  const OracleRun fine = oracle_run(spec, OracleConfig(4 * pi, pi / 1000, 5));
  double lo, hi;
  const std::string ratios = ratio_list(coarse, fine, lo, hi);
  const double elapsed = seconds_since(t0);
  std::string deltas;
  for (std::size_t i = 0; i < coarse.deltas.size(); ++i) {
    deltas += (i ? "," : "") + fmt("%.1e", coarse.deltas[i]);
  }
  const bool pass = coarse.max_im <= 1e-3 && coarse.max_delta <= 1e-3 && lo >= 3.0 && hi <= 5.0 &&
                    elapsed <= 120.0;
  return {pass, "Lambda=4pi, h=pi/500: max |Im E| = " + fmt("%.1e", coarse.max_im) +
                    ", |Re E - E_N| = [" + deltas + "], error ratios h/(h/2) = [" + ratios +
                    "], time " + fmt("%.1f s", elapsed)};
}

// Same comparison with Lambda from the tail-containment rule; reported only.
std::string oracle_supplement() {
  const WellSpec spec(1.0);
  const double p4 = solve_level(spec, LevelIndex(4)).sigma_parts.p;
  const OracleConfig cfg_c = OracleConfig::aligned(default_lambda(p4), 250, 5);
  const OracleConfig cfg_f = OracleConfig::aligned(cfg_c.lambda(), 500, 5);
  const OracleRun coarse = oracle_run(spec, cfg_c);
  const OracleRun fine = oracle_run(spec, cfg_f);
  double lo, hi;
  const std::string ratios = ratio_list(coarse, fine, lo, hi);
  return "Lambda=" + fmt("%.2f", cfg_c.lambda()) + " (pi + 8/p_4), h=pi/250: max |Im E| = " +
         fmt("%.1e", coarse.max_im) + ", max |Re E - E_N| = " + fmt("%.1e", coarse.max_delta) +
         ", error ratios = [" + ratios + "]";
}

Outcome strong_coupling() {
  double worst_rel = 0.0;
  bool shrinking = true;
  for (int N = 0; N < 10; ++N) {
    const double ref = hermitian_limit_level(LevelIndex(N));
    worst_rel = std::max(worst_rel, std::abs(solve_level(WellSpec(100.0), LevelIndex(N)).E - ref) / ref);
    std::vector<double> dev;
    for (double T : {10.0, 100.0, 1000.0}) dev.push_back(solve_level(WellSpec(T), LevelIndex(N)).E - ref);
    shrinking = shrinking && strictly_shrinking(dev);
  }
  return {worst_rel <= 1e-2 && shrinking,
          fmt("T=100 max relative gap %.2e; deviation shrinking over T=10,100,1000: ", worst_rel) +
              (shrinking ? "yes" : "no")};
}

Outcome weak_coupling() {
  double worst_rel = 0.0;
  for (int N = 0; N < 10; ++N) {
    const double e = solve_level(WellSpec(0.01), LevelIndex(N)).E;
    worst_rel = std::max(worst_rel, std::abs(e - weak_limit_level(LevelIndex(N))) / e);
  }
  const double e10 = std::abs(weak_coupling_eta(10.0, false) - weak_coupling_eta(10.0, true));
  const double e20 = std::abs(weak_coupling_eta(20.0, false) - weak_coupling_eta(20.0, true));
  return {worst_rel <= 1e-2 && e20 / e10 <= 1.0 / 8.0,
          fmt("T=0.01 max relative gap %.2e; eta-series error ratio R=20/R=10 = %.4f", worst_rel,
              e20 / e10)};
}

Outcome figure_reproduction() {
  std::ostringstream out, err;
  const int code = run_cli({"figure1", "--T", "1", "--samples", "10000", "--levels", "6"}, out, err);
  if (code != 0) return {false, "figure1 exited with " + std::to_string(code)};
  std::istringstream in(out.str());
  const ParsedCsv csv = parse_csv(in);
  const auto omega = csv.numeric_column("omega");
  const auto lhs = csv.numeric_column("lhs");
  double worst = 0.0;
  for (int N = 0; N < 6; ++N) {
    const auto c = interpolated_crossings(omega, lhs, csv.numeric_column("rhs_" + std::to_string(N)));
    if (c.size() != 1) return {false, "rhs_" + std::to_string(N) + " does not cross exactly once"};
    worst = std::max(worst, std::abs(c[0] - solve_root(WellSpec(1.0), LevelIndex(N)).omega));
  }
  return {worst <= 1e-6, fmt("max |interpolated crossing - root| = %.2e", worst)};
}

Outcome parity_trace() {
  double even_max = 0.0;
  double odd_min = INFINITY;
  for (int N = 0; N <= 5; ++N) {
    const double b = std::abs(build(solve_level(WellSpec(100.0), LevelIndex(N))).B);
    if (N % 2 == 0) even_max = std::max(even_max, b);
    else odd_min = std::min(odd_min, b);
  }
  return {even_max < 0.1 && odd_min > 10.0,
          fmt("T=100: max |B| over even N = %.2e, min |B| over odd N = %.2f", even_max, odd_min)};
}

}  // namespace

int main() {
  const std::vector<Level> levels = grid_levels_solved();
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"1 root existence and uniqueness", root_existence},
      {"2 bracket containment", [&] { return bracket_containment(levels); }},
      {"3 equivalence of secular forms", form_equivalence},
      {"4 branch identities", [&] { return branch_identities(levels); }},
      {"5 matching at x = pi", [&] { return matching(levels); }},
      {"6 PT symmetry", pt_symmetry},
      {"7 energy bounds", [&] { return energy_bounds(levels); }},
      {"8 finite-difference oracle agreement", oracle_agreement},
      {"9 strong-coupling limit", strong_coupling},
      {"10 weak-coupling behaviour", weak_coupling},
      {"11 Figure-1 crossings", figure_reproduction},
      {"12 parity trace", parity_trace},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  try {
    std::printf("[INFO] 8 (supplementary, not counted) %s\n", oracle_supplement().c_str());
  } catch (const std::exception& e) {
    std::printf("[INFO] 8 supplementary run failed: %s\n", e.what());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
