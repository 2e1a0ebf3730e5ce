#ifndef WPVOL_ORACLE_HPP
#define WPVOL_ORACLE_HPP

#include <string>
#include <vector>

namespace wpvol::oracle {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(unsigned points);

struct QuadratureSpec {
  double truncation = 0.0;  ///< integrate on [0, T]; the tail beyond T is bounded analytically
  double panel_width = 1.0;
  unsigned points = 20;     ///< Gauss nodes per panel
  double tail_target = 1e-12;
};

struct QuadResult {
  double value = 0.0;
  /// |coarse - fine| plus the analytic tail bound.
  double error_estimate = 0.0;
  double tail_bound = 0.0;
  QuadratureSpec spec;
};

/// int_T^inf x^m e^{-x/2} dx, exact for integer m.
double exp_moment_tail(unsigned m, double T);

/// int_0^inf x^{2k+1} H(x,t) dx. Domain k <= 10, 0 <= t <= 20.
QuadResult quad_F(unsigned k, double t);
/// int_0^inf int_0^inf x^{2i+1} y^{2j+1} H(x+y,t) dx dy. Domain i+j <= 5, 0 <= t <= 10.
QuadResult quad_double(unsigned i, unsigned j, double t);

/// One line of an oracle report.
struct OracleCheck {
  std::string check;
  std::string grid;
  double max_abs_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Finite-difference and exact-identity checks of H, D and R on the grid
/// {0.5, 1, 2, 5}^3, plus the values at the origin.
std::vector<OracleCheck> kernel_identity_suite();

/// Exact kernel polynomials against quadrature: F for k <= 8 and G for
/// i+j <= 5, both at t in {0, 1, 5}. Deviations are |q - e| / max(1, |e|).
std::vector<OracleCheck> closed_form_suite();

}  // namespace wpvol::oracle

#endif  // WPVOL_ORACLE_HPP
