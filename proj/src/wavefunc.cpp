#include "ptwell/wavefunc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptwell {

double g_value(const SigmaParts& parts, Branch branch) {
  if (branch == Branch::plus) return -parts.k * parts.k / (parts.q + parts.p);
  // q - p = q (1 - cos(alpha)) = 2 q sin^2(alpha / 2)
  const double half = std::sin(parts.alpha / 2);
  return -parts.k * parts.k / (2.0 * parts.q * half * half);
}

WaveFunction assemble(const Level& level) {
  WaveFunction wf;
  wf.level = level;
  wf.B = cplx(0.0, level.G / level.k);
  wf.sigma = level.sigma_parts.sigma;
  const double kp = level.k * pi;
  wf.edge_value = std::cos(kp) + wf.B * std::sin(kp);
  wf.outer_amp = std::exp(wf.sigma * pi) * wf.edge_value;
  return wf;
}

WaveFunction build(const Level& level, double max_residual) {
  if (!(level.residual <= max_residual)) {
    throw std::invalid_argument("level N=" + std::to_string(level.index.value()) +
                                " is not converged: residual " +
                                std::to_string(level.residual));
  }
  return assemble(level);
}

cplx eval(const WaveFunction& wf, double x) {
  const double k = wf.level.k;
  if (x > pi) return wf.edge_value * std::exp(-wf.sigma * (x - pi));
  if (x < -pi) return std::conj(wf.edge_value) * std::exp(std::conj(wf.sigma) * (x + pi));
  return std::cos(k * x) + wf.B * std::sin(k * x);
}

cplx eval_derivative(const WaveFunction& wf, double x) {
  const double k = wf.level.k;
  if (x > pi) return -wf.sigma * eval(wf, x);
  if (x < -pi) return std::conj(wf.sigma) * eval(wf, x);
  return k * (-std::sin(k * x) + wf.B * std::cos(k * x));
}

MatchingMismatch matching_residual(const WaveFunction& wf) {
  const double k = wf.level.k;
  const double kp = k * pi;
  const cplx inner = std::cos(kp) + wf.B * std::sin(kp);
  const cplx inner_d = k * (-std::sin(kp) + wf.B * std::cos(kp));
  // Through the stored amplitude when it is representable.
  const cplx outer = std::isfinite(std::abs(wf.outer_amp))
                         ? wf.outer_amp * std::exp(-wf.sigma * pi)
                         : wf.edge_value;
  const cplx outer_d = -wf.sigma * outer;
  return {std::abs(inner - outer), std::abs(inner_d - outer_d)};
}

MatchingMismatch matching_residual_left(const WaveFunction& wf) {
  const double k = wf.level.k;
  const double kp = k * pi;
  const cplx inner = std::cos(kp) - wf.B * std::sin(kp);
  const cplx inner_d = k * (std::sin(kp) + wf.B * std::cos(kp));
  const cplx outer = std::conj(wf.edge_value);
  const cplx outer_d = std::conj(wf.sigma) * outer;
  return {std::abs(inner - outer), std::abs(inner_d - outer_d)};
}

cplx stable_tan(cplx z) {
  // tan(x + iy) = [sin 2x + i sinh 2y] / [cos 2x + cosh 2y]
  const double x2 = 2.0 * z.real();
  const double y2 = 2.0 * z.imag();
  if (std::abs(y2) > 40.0) {
    const double inv_cosh = 2.0 * std::exp(-std::abs(y2));
    const double denom = std::cos(x2) * inv_cosh + 1.0;
    return {std::sin(x2) * inv_cosh / denom, std::tanh(y2) / denom};
  }
  const double denom = std::cos(x2) + std::cosh(y2);
  return {std::sin(x2) / denom, std::sinh(y2) / denom};
}

MatchingData omega_matching(const WaveFunction& wf, int branch_shift) {
  const double k = wf.level.k;
  const cplx w = -wf.sigma / k;
  if (std::abs(w.real()) == 0.0 && std::abs(std::abs(w.imag()) - 1.0) < 1e-14) {
    throw std::domain_error("-sigma/k lies on an arctangent branch point");
  }
  MatchingData data;
  data.Omega = std::atan(w) / pi + static_cast<double>(branch_shift);
  const cplx t = stable_tan((k + data.Omega) * pi);
  data.residual7 = std::abs(wf.level.G + cplx(0.0, 1.0) * k * t);
  data.re_tan = t.real();
  data.omega_tan_residual = std::abs(stable_tan(data.Omega * pi) - w);
  return data;
}

MatchingData omega_matching(const WaveFunction& wf) { return omega_matching(wf, 0); }

}  // namespace ptwell
