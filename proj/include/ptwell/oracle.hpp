// Independent verification of the analytic spectrum.
//
// The Schroedinger operator -d^2/dx^2 + V(x) is discretized with the
// three-point stencil on a uniform grid over [-Lambda, Lambda] with
// Dirichlet walls. Grid nodes land exactly on the discontinuities x = +-pi,
// where the potential takes the mean of its one-sided values (+-iT^2/2).
// The resulting matrix is complex symmetric tridiagonal; all its
// eigenvalues come from an implicit QL iteration, eigenvectors from inverse
// iteration.

#ifndef PTWELL_ORACLE_HPP
#define PTWELL_ORACLE_HPP

#include <complex>
#include <vector>

#include "ptwell/model.hpp"
#include "ptwell/secular.hpp"

namespace ptwell {

class OracleConfig {
 public:
  /// Throws std::invalid_argument unless Lambda > pi, h > 0, and both
  /// pi/h and Lambda/h are integers (to 1e-9 relative).
  OracleConfig(double lambda, double h, int count = 5);

  /// Grid with h = pi / cells_per_pi and Lambda rounded up to a grid node.
  static OracleConfig aligned(double lambda_min, int cells_per_pi, int count = 5);

  double lambda() const { return lambda_; }
  double h() const { return h_; }
  int count() const { return count_; }
  int cells_per_pi() const { return cells_per_pi_; }
  /// Lambda / h.
  int half_cells() const { return half_cells_; }
  /// Number of interior nodes, 2 * half_cells - 1.
  int size() const { return 2 * half_cells_ - 1; }

 private:
  double lambda_;
  double h_;
  int count_;
  int cells_per_pi_;
  int half_cells_;
};

/// max(4 pi, pi + 8 / p_min).
double default_lambda(double p_min);

/// Lambda >= pi + 6 / p_min.
bool tail_containment_ok(const OracleConfig& cfg, double p_min);

/// Complex symmetric tridiagonal matrix on the interior grid nodes.
struct FdOperator {
  std::vector<double> nodes;               // x_j = j h, j = -(n-1) .. n-1
  std::vector<int> node_index;             // j
  std::vector<std::complex<double>> diag;
  std::vector<std::complex<double>> off;   // off[i] couples i and i+1
  int cells_per_pi = 0;
};

/// Kinetic part only.
FdOperator fd_kinetic_matrix(const OracleConfig& cfg);

FdOperator fd_matrix(const WellSpec& spec, const OracleConfig& cfg);

/// All eigenvalues of a complex symmetric tridiagonal matrix. Throws
/// std::runtime_error if the QL iteration does not converge.
std::vector<std::complex<double>> tridiagonal_eigenvalues(
    std::vector<std::complex<double>> diag, std::vector<std::complex<double>> off);

struct Eigenpair {
  std::complex<double> value;
  std::vector<std::complex<double>> vector;
};

/// Inverse iteration at `shift`, followed by a few Rayleigh-quotient
/// refinements using the bilinear (non-conjugating) form v^T A v / v^T v.
Eigenpair refine_eigenpair(const FdOperator& op, std::complex<double> shift);

struct OracleEigenpair {
  std::complex<double> energy;
  double inner_weight = 0.0;  // fraction of |psi|^2 on [-pi, pi]
  std::vector<std::complex<double>> grid_vector;
};

double inner_weight(const FdOperator& op, const std::vector<std::complex<double>>& v);

/// max_j |v_{-j} - conj(v_j)| / max_j |v_j| after rotating v so that the
/// centre node is real and positive.
double pt_reflection_residual(const std::vector<std::complex<double>>& v);

/// The cfg.count lowest-Re eigenpairs whose inner weight is at least 0.5,
/// sorted by Re energy. Throws std::runtime_error (with the matrix size) if
/// the eigensolver fails or fewer than cfg.count qualify.
std::vector<OracleEigenpair> fd_spectrum(const WellSpec& spec, const OracleConfig& cfg);

/// Every sign-change bracket of F_N on the closed uniform grid
/// omega_i = i / (points - 1). Requires points >= 1000.
std::vector<Bracket> scan_roots(const WellSpec& spec, LevelIndex n, int points);

/// The single bracket from scan_roots; StructuralError if there is not
/// exactly one.
Bracket scan_single_root(const WellSpec& spec, LevelIndex n, int points);

}  // namespace ptwell

#endif  // PTWELL_ORACLE_HPP
