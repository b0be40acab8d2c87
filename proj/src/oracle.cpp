#include "ptwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ptwell {

namespace {

using cplx = std::complex<double>;

constexpr double eps = std::numeric_limits<double>::epsilon();

int integer_ratio(double num, double den, const char* what) {
  const double ratio = num / den;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded) {
    throw std::invalid_argument(std::string(what) + " is not an integer multiple of h (ratio " +
                                std::to_string(ratio) + ")");
  }
  return static_cast<int>(rounded);
}

// LU factorization of a tridiagonal matrix with partial pivoting, following
// the LAPACK gttrf/gttrs layout: dl, d, du hold L and U, du2 the second
// superdiagonal created by row interchanges.
class TridiagonalLu {
 public:
  TridiagonalLu(const FdOperator& op, cplx shift)
      : dl_(op.off), d_(op.diag), du_(op.off), du2_(op.diag.size(), cplx{}),
        swapped_(op.diag.size(), false) {
    const std::size_t n = d_.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      d_[i] -= shift;
      scale = std::max(scale, std::abs(d_[i]));
    }
    for (const cplx& o : op.off) scale = std::max(scale, std::abs(o));
    const double tiny = eps * std::max(scale, 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == cplx{}) d_[i] = tiny;
        const cplx fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const cplx fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const cplx temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    for (cplx& di : d_) {
      if (std::abs(di) < tiny) di = tiny;
    }
  }

  void solve(std::vector<cplx>& b) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const cplx temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n - 1] /= d_[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
  }

 private:
  std::vector<cplx> dl_, d_, du_, du2_;
  std::vector<bool> swapped_;
};

void normalize_max(std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& x : v) m = std::max(m, std::abs(x));
  if (m > 0.0) {
    for (cplx& x : v) x /= m;
  }
}

cplx bilinear_rayleigh(const FdOperator& op, const std::vector<cplx>& v) {
  cplx num{}, den{};
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    num += op.diag[i] * v[i] * v[i];
    den += v[i] * v[i];
    if (i + 1 < n) num += 2.0 * op.off[i] * v[i] * v[i + 1];
  }
  return num / den;
}

}  // namespace

OracleConfig::OracleConfig(double lambda, double h, int count)
    : lambda_(lambda), h_(h), count_(count) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("grid step h must be positive");
  if (!(lambda > pi) || !std::isfinite(lambda)) {
    throw std::invalid_argument("truncation half-width must exceed pi");
  }
  if (count < 1) throw std::invalid_argument("eigenvalue count must be at least 1");
  cells_per_pi_ = integer_ratio(pi, h, "pi");
  half_cells_ = integer_ratio(lambda, h, "Lambda");
}

OracleConfig OracleConfig::aligned(double lambda_min, int cells_per_pi, int count) {
  if (cells_per_pi < 1) throw std::invalid_argument("cells per pi must be positive");
  const double h = pi / cells_per_pi;
  const double cells = std::ceil(lambda_min / h - 1e-9);
  return OracleConfig(cells * h, h, count);
}

double default_lambda(double p_min) { return std::max(4.0 * pi, pi + 8.0 / p_min); }

bool tail_containment_ok(const OracleConfig& cfg, double p_min) {
  return cfg.lambda() >= pi + 6.0 / p_min;
}

FdOperator fd_kinetic_matrix(const OracleConfig& cfg) {
  const int n = cfg.half_cells();
  const double h = cfg.h();
  const double inv_h2 = 1.0 / (h * h);
  FdOperator op;
  op.cells_per_pi = cfg.cells_per_pi();
  const std::size_t size = static_cast<std::size_t>(cfg.size());
  op.nodes.reserve(size);
  op.node_index.reserve(size);
  for (int j = -(n - 1); j <= n - 1; ++j) {
    op.node_index.push_back(j);
    op.nodes.push_back(j * h);
  }
  op.diag.assign(size, cplx(2.0 * inv_h2, 0.0));
  op.off.assign(size - 1, cplx(-inv_h2, 0.0));
  return op;
}

FdOperator fd_matrix(const WellSpec& spec, const OracleConfig& cfg) {
  FdOperator op = fd_kinetic_matrix(cfg);
  const double t2 = spec.t_squared();
  const int m = cfg.cells_per_pi();
  for (std::size_t i = 0; i < op.diag.size(); ++i) {
    const int j = op.node_index[i];
    double v = 0.0;
    if (j > m) v = t2;
    else if (j < -m) v = -t2;
    else if (j == m) v = 0.5 * t2;
    else if (j == -m) v = -0.5 * t2;
    op.diag[i] += cplx(0.0, v);
  }
  return op;
}

std::vector<cplx> tridiagonal_eigenvalues(std::vector<cplx> d, std::vector<cplx> e) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (e.size() + 1 != n) throw std::invalid_argument("off-diagonal must have n-1 entries");
  e.push_back(cplx{});
  constexpr int max_iterations = 60;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > max_iterations) {
        throw std::runtime_error("complex symmetric QL did not converge (matrix size " +
                                 std::to_string(n) + ", row " + std::to_string(l) + ")");
      }
      cplx g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      cplx r = std::sqrt(g * g + 1.0);
      g = d[m] - d[l] + e[l] / (g + (std::abs(g + r) >= std::abs(g - r) ? r : -r));
      cplx s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const cplx f = s * e[i];
        const cplx b = c * e[i];
        r = std::sqrt(f * f + g * g);
        e[i + 1] = r;
        if (r == cplx{}) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  return d;
}

Eigenpair refine_eigenpair(const FdOperator& op, cplx shift) {
  const std::size_t n = op.diag.size();
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (cplx& x : v) x = {unit(rng), unit(rng)};

  const TridiagonalLu lu(op, shift);
  for (int it = 0; it < 3; ++it) {
    lu.solve(v);
    normalize_max(v);
  }
  cplx value = bilinear_rayleigh(op, v);
  // One Rayleigh-quotient step; kept only if it stays next to the shift.
  const TridiagonalLu lu2(op, value);
  std::vector<cplx> w = v;
  lu2.solve(w);
  normalize_max(w);
  const cplx value2 = bilinear_rayleigh(op, w);
  if (std::abs(value2 - shift) <= 1e-6 * (1.0 + std::abs(shift))) {
    value = value2;
    v = std::move(w);
  }
  return Eigenpair{value, std::move(v)};
}

double inner_weight(const FdOperator& op, const std::vector<cplx>& v) {
  double inner = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = std::norm(v[i]);
    const int j = std::abs(op.node_index[i]);
    total += w;
    if (j < op.cells_per_pi) inner += w;
    else if (j == op.cells_per_pi) inner += 0.5 * w;
  }
  return total > 0.0 ? inner / total : 0.0;
}

double pt_reflection_residual(const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  const cplx centre = v[n / 2];
  const cplx phase = std::abs(centre) > 0.0 ? std::conj(centre) / std::abs(centre) : cplx(1.0);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = v[i] * phase;
    const cplx b = v[n - 1 - i] * phase;
    worst = std::max(worst, std::abs(b - std::conj(a)));
    scale = std::max(scale, std::abs(a));
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

std::vector<OracleEigenpair> fd_spectrum(const WellSpec& spec, const OracleConfig& cfg) {
  const FdOperator op = fd_matrix(spec, cfg);
  std::vector<cplx> values = tridiagonal_eigenvalues(op.diag, op.off);
  std::sort(values.begin(), values.end(),
            [](const cplx& a, const cplx& b) { return a.real() < b.real(); });

  std::vector<OracleEigenpair> selected;
  for (const cplx& value : values) {
    if (static_cast<int>(selected.size()) == cfg.count()) break;
    Eigenpair pair = refine_eigenpair(op, value);
    const double weight = inner_weight(op, pair.vector);
    if (weight >= 0.5) {
      selected.push_back(OracleEigenpair{pair.value, weight, std::move(pair.vector)});
    }
  }
  if (static_cast<int>(selected.size()) < cfg.count()) {
    throw std::runtime_error("only " + std::to_string(selected.size()) + " of " +
                             std::to_string(cfg.count()) +
                             " eigenpairs are confined to the well (matrix size " +
                             std::to_string(op.diag.size()) + ")");
  }
  std::sort(selected.begin(), selected.end(), [](const auto& a, const auto& b) {
    return a.energy.real() < b.energy.real();
  });
  return selected;
}

std::vector<Bracket> scan_roots(const WellSpec& spec, LevelIndex n, int points) {
  if (points < 1000) throw std::invalid_argument("root scan needs at least 1000 points");
  std::vector<Bracket> brackets;
  double prev_w = 0.0;
  double prev_f = secular_residual(spec, n, prev_w);
  for (int i = 1; i < points; ++i) {
    const double w = i == points - 1 ? 1.0 : static_cast<double>(i) / (points - 1);
    const double f = secular_residual(spec, n, w);
    if ((prev_f < 0.0) != (f < 0.0)) brackets.push_back({prev_w, w});
    prev_w = w;
    prev_f = f;
  }
  return brackets;
}

Bracket scan_single_root(const WellSpec& spec, LevelIndex n, int points) {
  const std::vector<Bracket> brackets = scan_roots(spec, n, points);
  if (brackets.size() != 1) {
    throw StructuralError("expected one sign change of the secular function, found " +
                              std::to_string(brackets.size()),
                          static_cast<int>(brackets.size()));
  }
  return brackets.front();
}

}  // namespace ptwell
