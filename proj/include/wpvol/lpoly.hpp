#ifndef WPVOL_LPOLY_HPP
#define WPVOL_LPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wpvol/pipoly.hpp"

namespace wpvol {

/// Exponent vector alpha; the term it keys means prod_i L_i^(2 alpha_i).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
  explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  unsigned total() const;
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& entries() const { return e_; }

  /// alpha! = prod alpha_i!
  mpz_class factorial() const;

  /// Copy with entry i removed.
  MultiIndex erased(std::size_t i) const;
  /// Copy with `v` inserted before position i.
  MultiIndex inserted(std::size_t i, unsigned v) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> e_;
};

/// Canonical term order: ascending total degree, then lexicographically
/// descending entries (so L_1^2 precedes L_2^2).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of length n with total degree <= max_total, in canonical order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned max_total);
/// All multi-indices of length n with total degree exactly `total`, in canonical order.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned total);

/// Sparse even polynomial in L_1..L_n with Q[pi^2] coefficients.
class LPoly {
 public:
  using Terms = std::map<MultiIndex, PiPoly, GradedLexLess>;

  LPoly() = default;
  explicit LPoly(std::size_t n) : n_(n) {}
  /// Constant polynomial in n variables.
  LPoly(std::size_t n, const PiPoly& c);

  std::size_t num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of L^(2 alpha); zero when absent. Throws on length mismatch.
  const PiPoly& coeff(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, const PiPoly& c);

  /// Largest |alpha| over stored terms.
  unsigned degree() const;

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const PiPoly& s);

  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(LPoly a, const PiPoly& s) { return a *= s; }
  friend LPoly operator*(const PiPoly& s, LPoly a) { return a *= s; }
  friend bool operator==(const LPoly&, const LPoly&) = default;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

LPoly lp_add(const LPoly& a, const LPoly& b);
LPoly lp_scale(const LPoly& a, const PiPoly& s);

/// Product of polynomials over disjoint variable sets. `a_vars[i]` is the
/// position in the n-variable result of a's i-th variable, likewise for b.
/// Throws std::invalid_argument on overlap or out-of-range positions.
LPoly lp_mul_disjoint(const LPoly& a, std::span<const std::size_t> a_vars, const LPoly& b,
                      std::span<const std::size_t> b_vars, std::size_t n);

/// Inverts p -> d/dL_j (L_j p): divides the L_j^(2k) coefficient by 2k+1.
LPoly integrate_back(const LPoly& p, std::size_t j = 0);

/// Odd polynomial L_var * cofactor.
struct OddPart {
  std::size_t var = 0;
  LPoly cofactor;
};

/// dp/dL_j as L_j * Q.
OddPart partial_L(const LPoly& p, std::size_t j);

/// Sets L_j^2 = -4 pi^2 (L_j = 2 pi i) and drops variable j.
LPoly subst_2pi_i(const LPoly& p, std::size_t j);

/// Integral of L_k p dL_k with zero integration constant.
LPoly antiderivative_L(const LPoly& p, std::size_t k);

/// Variable i moves to position sigma[i]. Throws if sigma is not a permutation.
LPoly permute_labels(const LPoly& p, std::span<const std::size_t> sigma);
bool is_symmetric(const LPoly& p);

/// Evaluates at L_i^2 = squares[i].
PiPoly evaluate_squares(const LPoly& p, std::span<const Rat> squares);

/// Text rendering in canonical order. With one variable it is named "L",
/// otherwise "L₁", "L₂", ...
std::string to_text(const LPoly& p);
/// LaTeX rendering with \frac{p}{q}\pi^{2k} coefficients.
std::string to_latex(const LPoly& p);

}  // namespace wpvol

#endif  // WPVOL_LPOLY_HPP
