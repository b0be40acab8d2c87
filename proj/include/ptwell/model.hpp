// Domain types for the purely imaginary PT-symmetric square well
//
//   V(x) = -iT^2 (x < -pi),  0 (|x| < pi),  +iT^2 (x > pi)
//
// in units hbar = 2m = 1. The outer decay constant sigma = p + iq obeys
// sigma^2 = iT^2 - k^2 and is parametrized by a single angle alpha in
// (0, pi/2):  p = q cos(alpha), k = q sin(alpha), q = T / sqrt(2 cos(alpha)).
// The reporting variable is omega = 2 alpha / pi in (0, 1).

#ifndef PTWELL_MODEL_HPP
#define PTWELL_MODEL_HPP

#include <complex>
#include <numbers>

namespace ptwell {

inline constexpr double pi = std::numbers::pi;

/// Coupling of the well. The imaginary potential magnitude is T^2.
class WellSpec {
 public:
  /// Throws std::domain_error unless T is finite and strictly positive.
  explicit WellSpec(double T);

  double t() const { return t_; }
  double t_squared() const { return t_ * t_; }

 private:
  double t_;
};

/// '+' branch (X1 root of the matching quadratic) for even N, '-' for odd N.
enum class Branch { plus, minus };

char branch_symbol(Branch b);

/// Combined level index N. Even N = 2n belongs to the '+' family with
/// family index n; odd N = 2m + 1 to the '-' family with family index m.
class LevelIndex {
 public:
  explicit LevelIndex(int n);

  int value() const { return n_; }
  Branch branch() const { return n_ % 2 == 0 ? Branch::plus : Branch::minus; }
  /// n for the '+' family, m for the '-' family.
  int family_index() const { return n_ / 2; }

  friend bool operator==(LevelIndex, LevelIndex) = default;

 private:
  int n_;
};

struct SigmaParts {
  double alpha = 0.0;
  double p = 0.0;  // Re sigma
  double q = 0.0;  // Im sigma
  double k = 0.0;
  std::complex<double> sigma;
  double R = 0.0;  // k^2 / T^2
};

/// Requires 0 < alpha < pi/2; throws std::domain_error otherwise.
SigmaParts sigma_from_alpha(const WellSpec& spec, double alpha);

/// k = (2N + 2 - omega) / 4, for omega in the closed interval [0, 1].
double k_from_omega(LevelIndex n, double omega);

/// alpha = pi omega / 2 for omega in (0, 1).
double alpha_from_omega(double omega);
double omega_from_alpha(double alpha);

/// A bound state at a (not necessarily converged) value of omega.
struct Level {
  LevelIndex index{0};
  double omega = 0.0;
  double k = 0.0;  // (2N + 2 - omega) / 4
  double E = 0.0;  // k^2
  SigmaParts sigma_parts;
  double G = 0.0;  // G^(+) for even N, G^(-) for odd N
  double residual = 0.0;  // |F_N(omega)| from the secular equation
};

}  // namespace ptwell

#endif  // PTWELL_MODEL_HPP
