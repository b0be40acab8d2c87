// Piecewise bound-state wave function of the imaginary square well,
// normalized by psi(0) = 1, psi'(0) = iG:
//
//   psi(x) = cos(kx) + B sin(kx),         |x| <= pi,   B = iG/k
//   psi(x) = A exp(-sigma x),             x > pi,      A = exp(sigma pi) psi(pi)
//   psi(x) = conj(psi(-x)),               x < -pi.

#ifndef PTWELL_WAVEFUNC_HPP
#define PTWELL_WAVEFUNC_HPP

#include <complex>

#include "ptwell/model.hpp"

namespace ptwell {

using cplx = std::complex<double>;

/// G^(+-) = -k^2 / (q +- p). G^(-) equals -(q + p).
double g_value(const SigmaParts& parts, Branch branch);

struct WaveFunction {
  Level level;
  cplx B;           // purely imaginary
  cplx edge_value;  // psi(pi)
  cplx outer_amp;   // exp(sigma pi) psi(pi); overflows to inf for very deep wells
  cplx sigma;
};

/// Rejects levels whose secular residual exceeds `max_residual`
/// (std::invalid_argument).
WaveFunction build(const Level& level, double max_residual = 1e-9);

/// Assembles the wave function without a convergence check. Used for
/// perturbed, off-root levels.
WaveFunction assemble(const Level& level);

cplx eval(const WaveFunction& wf, double x);
cplx eval_derivative(const WaveFunction& wf, double x);

struct MatchingMismatch {
  double value = 0.0;       // |psi_in(pi) - psi_out(pi)|
  double derivative = 0.0;  // |psi_in'(pi) - psi_out'(pi)|
};

MatchingMismatch matching_residual(const WaveFunction& wf);

/// Same mismatch at x = -pi.
MatchingMismatch matching_residual_left(const WaveFunction& wf);

struct MatchingData {
  cplx Omega;              // principal solution of tan(Omega pi) = -sigma / k
  double residual7 = 0.0;  // |G + i k tan((k + Omega) pi)|
  double re_tan = 0.0;     // Re tan((k + Omega) pi), vanishes at a root
  double omega_tan_residual = 0.0;  // |tan(Omega pi) + sigma / k|
};

/// Throws std::domain_error if -sigma/k sits on a branch point (+-i).
MatchingData omega_matching(const WaveFunction& wf);

/// Same as omega_matching but with Omega shifted by an integer.
MatchingData omega_matching(const WaveFunction& wf, int branch_shift);

/// tan(z) for complex z that stays finite for large |Im z|.
cplx stable_tan(cplx z);

}  // namespace ptwell

#endif  // PTWELL_WAVEFUNC_HPP
