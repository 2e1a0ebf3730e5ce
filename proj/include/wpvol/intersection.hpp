#ifndef WPVOL_INTERSECTION_HPP
#define WPVOL_INTERSECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "wpvol/recursion.hpp"

namespace wpvol {

/// <kappa_1^m tau_{d_1} ... tau_{d_n}>_g
struct TauSymbol {
  unsigned g = 0;
  MultiIndex alpha;
  unsigned kappa_power = 0;

  /// |alpha| + m = 3g-3+n with (g,n) stable.
  bool nontrivial() const;
};

/// An intersection number in both normalizations; omega = (2 pi^2)^m kappa.
struct IntersectionValue {
  Rat kappa;
  PiPoly omega;
};

/// Coefficient of L^{2 alpha} in the true volume V_{g,n}; zero when
/// |alpha| > 3g-3+n.
PiPoly c_alpha(unsigned g, const MultiIndex& alpha, const VolumeTable& table);

/// <kappa_1^{d-|alpha|} tau_alpha>_g recovered from C_alpha. A zero value is
/// returned when |alpha| > d. Throws InvariantViolation if the kappa form is
/// not rational.
IntersectionValue tau_kappa(unsigned g, const MultiIndex& alpha, const VolumeTable& table);

/// Evaluates a symbol; zero when it is trivial.
IntersectionValue intersection(const TauSymbol& sym, const VolumeTable& table);

/// Pure psi number <tau_alpha>_g; zero for unstable or degree-mismatched symbols.
Rat tau(unsigned g, const MultiIndex& alpha, const VolumeTable& table);

/// (n-3)! / prod alpha_i! when |alpha| = n-3, else 0.
Rat genus0_tau(const MultiIndex& alpha);

/// Outcome of one exact identity check.
struct CheckRecord {
  std::string relation;
  unsigned g = 0;
  unsigned n = 0;
  std::optional<MultiIndex> alpha;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

/// (0, alpha)_g = sum_{alpha_i != 0} (alpha - e_i)_g with |alpha| = 3g-2+n, n = |alpha entries|.
CheckRecord check_string(unsigned g, const MultiIndex& alpha, const VolumeTable& table);
/// (1, alpha)_g = (2g-2+n) (alpha)_g with |alpha| = 3g-3+n.
CheckRecord check_dilaton(unsigned g, const MultiIndex& alpha, const VolumeTable& table);
/// Coefficient form of the Virasoro constraint L_{k_1 - 1}, |k| = 3g-3+n.
CheckRecord check_dvv(unsigned g, const MultiIndex& k, const VolumeTable& table);
/// V_{g,n+1}(L, 2 pi i) = sum_k int L_k V_{g,n} dL_k
CheckRecord check_do_string(unsigned g, unsigned n, const VolumeTable& table);
/// dV_{g,n+1}/dL_{n+1}(L, 2 pi i) = 2 pi i (2g-2+n) V_{g,n}, compared after
/// cancelling the common factor 2 pi i.
CheckRecord check_do_dilaton(unsigned g, unsigned n, const VolumeTable& table);

/// V_{g,0} from V_{g,1}, g >= 2. Computes V_{g,1} into `table` if needed.
PiPoly compact_volume(unsigned g, VolumeTable& table, const BuildOptions& opts = {});

/// V_{g,n}(0) / ((4 pi^2)^{2g+n-3} (2g+n-3)! / sqrt(g pi)). Diagnostic only.
double zograf_ratio(unsigned g, unsigned n, const VolumeTable& table);

// Suites over every applicable instance in a table built up to `max_dim`.
std::vector<CheckRecord> string_suite(const VolumeTable& table, unsigned max_dim);
std::vector<CheckRecord> dilaton_suite(const VolumeTable& table, unsigned max_dim);
std::vector<CheckRecord> dvv_suite(const VolumeTable& table, unsigned max_dim);
std::vector<CheckRecord> do_string_suite(const VolumeTable& table, unsigned max_dim);
std::vector<CheckRecord> do_dilaton_suite(const VolumeTable& table, unsigned max_dim);

}  // namespace wpvol

#endif  // WPVOL_INTERSECTION_HPP
