#include "ptwell/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptwell/wavefunc.hpp"

namespace ptwell {

bool bounds_check(const Level& level) {
  const LevelIndex n = level.index;
  return weak_limit_level(n) <= level.E && level.E <= hermitian_limit_level(n);
}

bool strict_bounds_check(const Level& level) {
  const LevelIndex n = level.index;
  return weak_limit_level(n) < level.E && level.E < hermitian_limit_level(n);
}

double hermitian_limit_level(LevelIndex n) {
  const double half = (n.value() + 1.0) / 2.0;
  return half * half;
}

double weak_limit_level(LevelIndex n) {
  const double half = (n.value() + 0.5) / 2.0;
  return half * half;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::weak: return "weak";
    case Regime::strong: return "strong";
    case Regime::intermediate: break;
  }
  return "intermediate";
}

AsymptoticRecord asymptotic_orders(const WellSpec& spec, LevelIndex n, double tol) {
  const Level level = solve_level(spec, n, tol);
  const SigmaParts& s = level.sigma_parts;
  AsymptoticRecord rec;
  rec.index = n;
  rec.R = s.R;
  rec.p = s.p;
  rec.q = s.q;
  rec.k = s.k;
  rec.q_over_2R = s.q / (2.0 * s.R);
  rec.q_minus_k = std::abs(s.q - s.k);
  rec.g_plus = g_value(s, Branch::plus);
  rec.g_minus = g_value(s, Branch::minus);
  if (s.R >= 10.0) {
    rec.regime = Regime::weak;
    rec.regime_ok = std::abs(s.p - rec.q_over_2R) / s.p <= 0.1 && rec.q_minus_k / s.k <= 0.1;
  } else if (s.R <= 0.01) {
    rec.regime = Regime::strong;
    rec.regime_ok = std::abs(rec.g_plus) < 0.05 * std::abs(rec.g_minus);
  }
  return rec;
}

SpectrumRow to_row(const Level& level) {
  SpectrumRow row;
  row.N = level.index.value();
  row.omega = level.omega;
  row.k = level.k;
  row.E = level.E;
  row.p = level.sigma_parts.p;
  row.q = level.sigma_parts.q;
  row.alpha = level.sigma_parts.alpha;
  row.R = level.sigma_parts.R;
  row.G = level.G;
  row.branch = level.index.branch();
  row.residual = level.residual;
  return row;
}

std::vector<SpectrumRow> spectrum_table(const WellSpec& spec, int count, double tol) {
  if (count < 1) throw std::invalid_argument("spectrum needs at least one level");
  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    try {
      rows.push_back(to_row(solve_level(spec, LevelIndex(n), tol)));
    } catch (const StructuralError& err) {
      throw StructuralError("level N=" + std::to_string(n) + ": " + err.what(),
                            err.sign_changes());
    } catch (const SolverError& err) {
      throw SolverError("level N=" + std::to_string(n) + ": " + err.what(), err.last_bracket());
    }
  }
  return rows;
}

const LimitEntry& LimitReport::at(std::size_t t_index, int n) const {
  return entries.at(t_index * static_cast<std::size_t>(levels) + static_cast<std::size_t>(n));
}

LimitReport limit_report(const std::vector<double>& T_values, int levels, double tol) {
  if (T_values.empty()) throw std::invalid_argument("limit report needs at least one T");
  if (levels < 1) throw std::invalid_argument("limit report needs at least one level");
  LimitReport report;
  report.T_values = T_values;
  report.levels = levels;
  for (double t : T_values) {
    const WellSpec spec(t);
    for (int n = 0; n < levels; ++n) {
      const LevelIndex idx(n);
      const Level level = solve_level(spec, idx, tol);
      LimitEntry entry;
      entry.T = t;
      entry.N = n;
      entry.E = level.E;
      entry.hermitian_level = hermitian_limit_level(idx);
      entry.hermitian_deviation = level.E - entry.hermitian_level;
      entry.weak_level = weak_limit_level(idx);
      entry.weak_deviation = level.E - entry.weak_level;
      report.entries.push_back(entry);
    }
  }
  return report;
}

bool strictly_shrinking(const std::vector<double>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(std::abs(values[i]) < std::abs(values[i - 1]))) return false;
  }
  return true;
}

}  // namespace ptwell
