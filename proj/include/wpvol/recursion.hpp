#ifndef WPVOL_RECURSION_HPP
#define WPVOL_RECURSION_HPP

#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpvol/lpoly.hpp"

namespace wpvol {

/// Topological type (genus, number of boundaries).
struct Signature {
  unsigned g = 0;
  unsigned n = 0;

  int euler() const { return 2 * static_cast<int>(g) - 2 + static_cast<int>(n); }
  bool stable() const { return euler() > 0; }
  /// 3g-3+n; only meaningful for stable signatures.
  unsigned dim() const { return 3 * g + n - 3; }
  /// "g,n"
  std::string key() const;
  static Signature parse_key(const std::string& key);

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// A recursion input was requested before it was computed.
class DependencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computed volume broke symmetry, homogeneity, positivity or the degree
/// bound. Always a logic error in exact arithmetic.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Memoized volumes in the internal convention (V_{1,1} = pi^2/12 + L^2/48).
/// Every inserted entry is validated; entries are immutable once stored.
class VolumeTable {
 public:
  bool contains(Signature s) const { return entries_.contains(s); }
  const LPoly* find(Signature s) const;
  /// Throws DependencyFault when missing.
  const LPoly& at(Signature s) const;
  /// Validates with check_volume_invariants. Re-inserting an equal value is a
  /// no-op; a different value throws InvariantViolation.
  void insert(Signature s, LPoly v);

  const std::map<Signature, LPoly>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Signature, LPoly> entries_;
};

/// Throws InvariantViolation unless `v` is symmetric, every coefficient of
/// L^{2 alpha} is a single positive multiple of pi^{2(dim - |alpha|)}, and
/// |alpha| <= dim.
void check_volume_invariants(Signature s, const LPoly& v);

bool is_base_case(Signature s);
/// V_{0,3} = 1 and the halved V_{1,1} = pi^2/12 + L^2/48.
LPoly base_volume(Signature s);

/// One side of a boundary-separating cut: genus plus the original boundary
/// labels it keeps (0-based, drawn from 1..n-1).
struct Piece {
  unsigned genus = 0;
  std::vector<std::size_t> labels;

  Signature signature() const { return {genus, static_cast<unsigned>(labels.size()) + 1}; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

using Splitting = std::pair<Piece, Piece>;

/// Ordered pairs with g1+g2 = g and I1 u I2 = {1..n-1} where each piece,
/// counting its new boundary, is stable.
std::vector<Splitting> stable_splittings(unsigned g, unsigned n);

// Term-by-term assembly of d/dL_1 (L_1 V_{g,n}). These are the serial
// reference; volume coefficients can also be gathered one output monomial at
// a time, see Kernel::gather.

LPoly a_con_term(unsigned g, unsigned n, const VolumeTable& table);
LPoly a_dcon_term(unsigned g, unsigned n, const VolumeTable& table);
LPoly b_term(unsigned g, unsigned n, const VolumeTable& table);

/// Signatures whose volumes the recursion for `s` reads.
std::vector<Signature> dependencies(Signature s);
/// `targets` and everything they transitively depend on, sorted by (dim, g, n).
std::vector<Signature> dependency_closure(std::span<const Signature> targets);
/// Stable signatures with n >= 1 and 3g-3+n <= max_dim, sorted by (dim, g, n).
std::vector<Signature> signatures_up_to(unsigned max_dim);

enum class Kernel {
  reference,  ///< serial term scatter through a_con_term/a_dcon_term/b_term
  gather,     ///< independent per-output-monomial coefficients, OpenMP parallel
};

/// Single volume coefficient V_{g,n}[alpha] computed by the gather kernel.
/// All dependencies must already be in `table`.
PiPoly volume_coefficient(Signature s, const MultiIndex& alpha, const VolumeTable& table);

/// Depth-first memoized evaluation, single-threaded.
const LPoly& volume(Signature s, VolumeTable& table, Kernel kernel = Kernel::gather);

/// The geometric volume: volume(s) except doubled at (1,1).
LPoly true_volume(Signature s, VolumeTable& table);
/// Doubles the (1,1) entry of an already computed table.
LPoly true_volume(Signature s, const VolumeTable& table);

struct BuildOptions {
  int threads = 1;
  Kernel kernel = Kernel::gather;
};

/// Breadth-first build of the dependency closure of `targets`, one wave per
/// dimension. Output is bit-identical for every thread count.
void build(VolumeTable& table, std::span<const Signature> targets, const BuildOptions& opts = {});
void build_up_to(VolumeTable& table, unsigned max_dim, const BuildOptions& opts = {});

}  // namespace wpvol

#endif  // WPVOL_RECURSION_HPP
