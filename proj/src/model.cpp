#include "ptwell/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptwell {

WellSpec::WellSpec(double T) : t_(T) {
  if (!std::isfinite(T) || !(T > 0.0)) {
    throw std::domain_error("well coupling T must be finite and positive, got " +
                            std::to_string(T));
  }
}

char branch_symbol(Branch b) { return b == Branch::plus ? '+' : '-'; }

LevelIndex::LevelIndex(int n) : n_(n) {
  if (n < 0) {
    throw std::domain_error("level index must be nonnegative, got " + std::to_string(n));
  }
}

SigmaParts sigma_from_alpha(const WellSpec& spec, double alpha) {
  if (!(alpha > 0.0 && alpha < pi / 2)) {
    throw std::domain_error("alpha must lie in (0, pi/2), got " + std::to_string(alpha));
  }
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  SigmaParts parts;
  parts.alpha = alpha;
  parts.q = spec.t() / std::sqrt(2.0 * c);
  parts.p = parts.q * c;
  parts.k = parts.q * s;
  parts.sigma = {parts.p, parts.q};
  // k/T = sin(alpha) / sqrt(2 cos(alpha)), so R = sin^2 / (2 cos).
  parts.R = s * s / (2.0 * c);
  return parts;
}

double k_from_omega(LevelIndex n, double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw std::domain_error("omega must lie in [0, 1], got " + std::to_string(omega));
  }
  return (2.0 * n.value() + 2.0 - omega) / 4.0;
}

double alpha_from_omega(double omega) {
  if (!(omega > 0.0 && omega < 1.0)) {
    throw std::domain_error("omega must lie in (0, 1), got " + std::to_string(omega));
  }
  return pi * omega / 2.0;
}

double omega_from_alpha(double alpha) { return 2.0 * alpha / pi; }

}  // namespace ptwell
