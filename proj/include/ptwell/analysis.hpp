// Regime analysis of the solved spectrum: the level bounds
// (N + 1/2)^2 / 4 <= E_N <= (N + 1)^2 / 4, the deep-well (T -> infinity)
// approach to the infinite Hermitian square well on (-pi, pi), and the
// shallow-well (T -> 0) free-wave regime.

#ifndef PTWELL_ANALYSIS_HPP
#define PTWELL_ANALYSIS_HPP

#include <vector>

#include "ptwell/model.hpp"
#include "ptwell/secular.hpp"

namespace ptwell {

/// Closed bounds (N + 1/2)^2/4 <= E <= (N + 1)^2/4.
bool bounds_check(const Level& level);

/// Both bounds strict.
bool strict_bounds_check(const Level& level);

/// (N + 1)^2 / 4, the infinitely deep Hermitian well of width 2 pi.
double hermitian_limit_level(LevelIndex n);

/// (N + 1/2)^2 / 4, approached as T -> 0.
double weak_limit_level(LevelIndex n);

enum class Regime { weak, intermediate, strong };

const char* regime_name(Regime r);

struct AsymptoticRecord {
  LevelIndex index{0};
  double R = 0.0;
  double p = 0.0;
  double q = 0.0;
  double k = 0.0;
  double q_over_2R = 0.0;
  double q_minus_k = 0.0;  // |q - k|
  double g_plus = 0.0;
  double g_minus = 0.0;
  Regime regime = Regime::intermediate;
  /// Weak regime (R >= 10): |p - q/(2R)|/p <= 0.1 and |q - k|/k <= 0.1.
  /// Strong regime (R <= 0.01): |G+| < 0.05 |G-|. Always true otherwise.
  bool regime_ok = true;
};

AsymptoticRecord asymptotic_orders(const WellSpec& spec, LevelIndex n,
                                   double tol = default_secular_tol);

struct SpectrumRow {
  int N = 0;
  double omega = 0.0;
  double k = 0.0;
  double E = 0.0;
  double p = 0.0;
  double q = 0.0;
  double alpha = 0.0;
  double R = 0.0;
  double G = 0.0;
  Branch branch = Branch::plus;
  double residual = 0.0;
};

SpectrumRow to_row(const Level& level);

/// Levels N = 0 .. count - 1. A failing level rethrows the solver error
/// with the level index prepended.
std::vector<SpectrumRow> spectrum_table(const WellSpec& spec, int count,
                                        double tol = default_secular_tol);

struct LimitEntry {
  double T = 0.0;
  int N = 0;
  double E = 0.0;
  double hermitian_level = 0.0;
  double hermitian_deviation = 0.0;  // E - (N + 1)^2 / 4
  double weak_level = 0.0;
  double weak_deviation = 0.0;  // E - (N + 1/2)^2 / 4
};

struct LimitReport {
  std::vector<double> T_values;
  int levels = 0;
  std::vector<LimitEntry> entries;  // T-major, N-minor

  const LimitEntry& at(std::size_t t_index, int n) const;
};

LimitReport limit_report(const std::vector<double>& T_values, int levels,
                         double tol = default_secular_tol);

/// True when |values| is strictly decreasing.
bool strictly_shrinking(const std::vector<double>& values);

}  // namespace ptwell

#endif  // PTWELL_ANALYSIS_HPP
