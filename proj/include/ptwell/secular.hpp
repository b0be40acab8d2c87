// Quantization of the imaginary square well.
//
// Every level N has exactly one root omega_N in (0, 1) of
//
//   F_N(omega) = sin(pi omega / 2) - (2N + 2 - omega) / (4T) * sqrt(2 cos(pi omega / 2)),
//
// which is negative at omega = 0 and equals 1 at omega = 1. The same root
// solves the resolved form cos(pi omega / 2) = 1 / (R + sqrt(R^2 + 1)) with
// sqrt(R) = (2N + 2 - omega) / (4T).

#ifndef PTWELL_SECULAR_HPP
#define PTWELL_SECULAR_HPP

#include <stdexcept>
#include <string>

#include "ptwell/model.hpp"

namespace ptwell {

inline constexpr double default_secular_tol = 1e-13;

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Root search failed to converge; carries the last bracket.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, Bracket last) : std::runtime_error(what), last_(last) {}
  Bracket last_bracket() const { return last_; }

 private:
  Bracket last_;
};

/// The sign-change structure of F_N contradicts a single root.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(const std::string& what, int sign_changes)
      : std::runtime_error(what), sign_changes_(sign_changes) {}
  int sign_changes() const { return sign_changes_; }

 private:
  int sign_changes_;
};

enum class RootMethod { bracketed, fixed_point };

struct SecularRoot {
  LevelIndex index{0};
  double omega = 0.0;
  double residual = 0.0;  // |F_N(omega)|
  int iterations = 0;
  RootMethod method = RootMethod::bracketed;
};

/// cos(pi omega / 2) without cancellation for omega close to 1.
double cos_half_pi(double omega);

/// F_N(omega) on the closed interval [0, 1]; throws std::domain_error outside.
double secular_residual(const WellSpec& spec, LevelIndex n, double omega);

/// Brent's method on (1e-12, 1 - 1e-12) after a 1000-point scan asserting a
/// single sign change (StructuralError otherwise). Iterates until the bracket
/// has shrunk to adjacent doubles; `residual` reports what was attained,
/// which near omega = 1 can sit slightly above a very tight tol.
SecularRoot solve_root(const WellSpec& spec, LevelIndex n, double tol = default_secular_tol);

struct FixedPointOptions {
  double start = 0.5;
  double damping = 0.7;
  int max_iterations = 200;
};

/// Damped iteration of omega <- (2/pi) arccos[1 / (R + sqrt(R^2 + 1))].
/// Falls back to solve_root (method = bracketed) when it does not settle.
SecularRoot solve_root_fixed_point(const WellSpec& spec, LevelIndex n,
                                   double tol = default_secular_tol,
                                   const FixedPointOptions& options = {});

/// Inverts cos(pi omega / 2) = 1 / (R + sqrt(R^2 + 1)) for R >= 0.
double omega_from_ratio(double R);

/// Solves for omega_N and assembles the full level (k, E, sigma, G).
Level solve_level(const WellSpec& spec, LevelIndex n, double tol = default_secular_tol);

/// Builds a level at an arbitrary omega in (0, 1); used for perturbation
/// studies. `residual` is filled with |F_N(omega)|.
Level make_level(const WellSpec& spec, LevelIndex n, double omega);

/// Roots X = tan(k pi) of the matching quadratic k X^2 - 2 p X - k = 0.
struct BranchRoots {
  double X1 = 0.0;  // (p + q) / k = cot(alpha / 2)
  double X2 = 0.0;  // (p - q) / k = -tan(alpha / 2)
};

BranchRoots branch_roots(const SigmaParts& parts);

/// |tan(k pi) - X| with X1 for even N and X2 for odd N, where
/// k = T sin(alpha) / sqrt(2 cos(alpha)) comes from the level's alpha. Throws
/// std::domain_error when k pi lies within 1e-6 of a tangent pole.
double branch_consistency(const Level& level);

/// eta = 1 - omega in the large-R regime. Exact:
/// (2/pi) asin[1 / (R + sqrt(R^2 + 1))]; series: (2/pi)[1/(2R) - 5/(48 R^3)],
/// which requires R >= 2.
double weak_coupling_eta(double R, bool use_series);

/// omega = (4/pi) asin sqrt{[R - (sqrt(1 + R^2) - 1)] / 2}, the small-R form.
double strong_coupling_omega(double R);

}  // namespace ptwell

#endif  // PTWELL_SECULAR_HPP
