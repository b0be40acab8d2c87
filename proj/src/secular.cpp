#include "ptwell/secular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ptwell/wavefunc.hpp"

namespace ptwell {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int scan_points = 1000;
constexpr double scan_lo = 1e-12;
constexpr double scan_hi = 1.0 - 1e-12;
constexpr int brent_max_iterations = 300;

std::string describe(const WellSpec& spec, LevelIndex n) {
  return "T=" + std::to_string(spec.t()) + ", N=" + std::to_string(n.value());
}

// Among b and its two neighbouring doubles, the one with the smallest |F|.
template <class F>
double best_neighbour(F&& f, double b, double& fb) {
  for (double dir : {-1.0, 1.0}) {
    const double x = std::nextafter(b, dir > 0 ? 1.0 : 0.0);
    if (x <= 0.0 || x >= 1.0) continue;
    const double fx = f(x);
    if (std::abs(fx) < std::abs(fb)) {
      b = x;
      fb = fx;
    }
  }
  return b;
}

}  // namespace

double cos_half_pi(double omega) {
  // 1 - omega is exact for omega in [1/2, 1].
  if (omega > 0.5) return std::sin(pi * (1.0 - omega) / 2.0);
  return std::cos(pi * omega / 2.0);
}

double secular_residual(const WellSpec& spec, LevelIndex n, double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw std::domain_error("secular residual needs omega in [0, 1], got " +
                            std::to_string(omega));
  }
  const double slope = (2.0 * n.value() + 2.0 - omega) / (4.0 * spec.t());
  return std::sin(pi * omega / 2.0) - slope * std::sqrt(2.0 * cos_half_pi(omega));
}

SecularRoot solve_root(const WellSpec& spec, LevelIndex n, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("solver tolerance must be positive");
  auto f = [&](double w) { return secular_residual(spec, n, w); };

  // Scan for the sign change; the function is expected to be increasing.
  Bracket bracket{};
  double f_lo = 0.0;
  double f_hi = 0.0;
  int changes = 0;
  double prev_w = scan_lo;
  double prev_f = f(prev_w);
  for (int i = 1; i < scan_points; ++i) {
    const double w = scan_lo + (scan_hi - scan_lo) * i / (scan_points - 1);
    const double fw = f(w);
    if ((prev_f < 0.0) != (fw < 0.0)) {
      ++changes;
      bracket = {prev_w, w};
      f_lo = prev_f;
      f_hi = fw;
    }
    prev_w = w;
    prev_f = fw;
  }
  if (changes > 1) {
    throw StructuralError("secular function has " + std::to_string(changes) +
                              " sign changes on (0,1) for " + describe(spec, n),
                          changes);
  }
  if (changes == 0) {
    throw SolverError("no sign change of the secular function for " + describe(spec, n),
                      Bracket{scan_lo, scan_hi});
  }

  // Brent's method.
  double a = bracket.lo, fa = f_lo;
  double b = bracket.hi, fb = f_hi;
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 1; it <= brent_max_iterations; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b);
    const double xm = 0.5 * (c - b);
    // Refine to the double-precision floor; tol only gates acceptance.
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      if (std::abs(fb) > tol) b = best_neighbour(f, b, fb);
      return SecularRoot{n, b, std::abs(fb), it, RootMethod::bracketed};
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw SolverError("Brent iteration did not converge for " + describe(spec, n),
                    Bracket{std::min(b, c), std::max(b, c)});
}

double omega_from_ratio(double R) {
  if (!(R >= 0.0)) throw std::domain_error("R must be nonnegative");
  if (std::isinf(R)) return 1.0;
  const double s = std::sqrt(R * R + 1.0);
  const double c = 1.0 / (R + s);
  // 1 - c = (R + s - 1) / (R + s), with s - 1 = R^2 / (s + 1).
  const double one_minus_c = (R + R * R / (s + 1.0)) / (R + s);
  const double sin_alpha = std::sqrt(one_minus_c * (1.0 + c));
  return 2.0 * std::atan2(sin_alpha, c) / pi;
}

SecularRoot solve_root_fixed_point(const WellSpec& spec, LevelIndex n, double tol,
                                   const FixedPointOptions& options) {
  if (!(tol > 0.0)) throw std::domain_error("solver tolerance must be positive");
  const double lambda = options.damping;
  double w = options.start;
  bool settled = false;
  int it = 0;
  for (it = 1; it <= options.max_iterations; ++it) {
    const double sqrt_r = (2.0 * n.value() + 2.0 - w) / (4.0 * spec.t());
    const double update = omega_from_ratio(sqrt_r * sqrt_r);
    const double next = (1.0 - lambda) * w + lambda * update;
    const double step = std::abs(next - w);
    w = next;
    if (!(w > 0.0 && w < 1.0)) break;
    if (step <= 4.0 * eps * std::max(w, 1e-300)) {
      settled = true;
      break;
    }
  }
  if (!settled) {
    SecularRoot root = solve_root(spec, n, tol);
    root.iterations += it;
    return root;
  }
  double fw = secular_residual(spec, n, w);
  if (std::abs(fw) > tol) {
    w = best_neighbour([&](double x) { return secular_residual(spec, n, x); }, w, fw);
  }
  return SecularRoot{n, w, std::abs(fw), it, RootMethod::fixed_point};
}

Level make_level(const WellSpec& spec, LevelIndex n, double omega) {
  Level level;
  level.index = n;
  level.omega = omega;
  level.k = k_from_omega(n, omega);
  level.E = level.k * level.k;
  level.sigma_parts = sigma_from_alpha(spec, alpha_from_omega(omega));
  level.G = g_value(level.sigma_parts, n.branch());
  level.residual = std::abs(secular_residual(spec, n, omega));
  return level;
}

Level solve_level(const WellSpec& spec, LevelIndex n, double tol) {
  const SecularRoot root = solve_root(spec, n, tol);
  Level level = make_level(spec, n, root.omega);
  level.residual = root.residual;
  return level;
}

BranchRoots branch_roots(const SigmaParts& parts) {
  // p - q = -k^2 / (p + q) avoids cancellation when alpha is small.
  return BranchRoots{(parts.p + parts.q) / parts.k, -parts.k / (parts.p + parts.q)};
}

double branch_consistency(const Level& level) {
  // k = T sin(alpha) / sqrt(2 cos(alpha)) from the parametrization, not from
  // omega: tan((2N + 2 - omega) pi / 4) equals X for every omega.
  const double k = level.sigma_parts.k;
  // Distance of k pi from the nearest pole pi/2 + j pi.
  const double shifted = k - 0.5;
  const double pole_distance = pi * std::abs(shifted - std::round(shifted));
  if (pole_distance < 1e-6) {
    throw std::domain_error("k pi = " + std::to_string(k * pi) +
                            " is within 1e-6 of a tangent pole");
  }
  const BranchRoots roots = branch_roots(level.sigma_parts);
  const double x = level.index.branch() == Branch::plus ? roots.X1 : roots.X2;
  return std::abs(std::tan(k * pi) - x);
}

double weak_coupling_eta(double R, bool use_series) {
  if (!(R > 0.0)) throw std::domain_error("weak-coupling eta needs R > 0");
  if (use_series) {
    if (R < 2.0) throw std::domain_error("eta series diverges for R < 2");
    return 2.0 / pi * (1.0 / (2.0 * R) - 5.0 / (48.0 * R * R * R));
  }
  return 2.0 / pi * std::asin(1.0 / (R + std::sqrt(R * R + 1.0)));
}

double strong_coupling_omega(double R) {
  if (!(R >= 0.0)) throw std::domain_error("strong-coupling omega needs R >= 0");
  const double s = std::sqrt(1.0 + R * R);
  const double inner = 0.5 * (R - R * R / (s + 1.0));
  if (inner < 0.0) throw std::domain_error("negative radicand in strong-coupling form");
  return 4.0 / pi * std::asin(std::sqrt(inner));
}

}  // namespace ptwell
