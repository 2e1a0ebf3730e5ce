#ifndef WPVOL_PIPOLY_HPP
#define WPVOL_PIPOLY_HPP

#include <map>
#include <string>

#include "wpvol/rat.hpp"

namespace wpvol {

/// Element of Q[pi^2]: a sparse map k -> q meaning sum q * pi^(2k).
/// Zero coefficients are never stored.
class PiPoly {
 public:
  using Terms = std::map<unsigned, Rat>;

  PiPoly() = default;
  PiPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  PiPoly(long constant) : PiPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

  /// q * pi^(2k)
  static PiPoly monomial(const Rat& q, unsigned k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Largest k with a nonzero coefficient; 0 for the zero element.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  /// Coefficient of pi^(2k).
  Rat coeff(unsigned k) const;

  void add_term(unsigned k, const Rat& q);

  PiPoly& operator+=(const PiPoly& o);
  PiPoly& operator-=(const PiPoly& o);
  PiPoly& operator*=(const Rat& s);
  PiPoly& operator*=(const PiPoly& o) { return *this = *this * o; }

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator-(const PiPoly& a);
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator*(PiPoly a, const Rat& s) { return a *= s; }
  friend PiPoly operator*(const Rat& s, PiPoly a) { return a *= s; }
  friend bool operator==(const PiPoly& a, const PiPoly& b) = default;

  /// Multiplies by pi^(2k).
  PiPoly shifted(unsigned k) const;

  /// Float value with pi at double precision. Throws std::overflow_error when a
  /// rational part leaves the double range.
  double to_double() const;

  /// Human-readable form, e.g. "43π⁶/2160" or "π²/6 + 1/8".
  std::string str() const;

 private:
  Terms terms_;
};

/// zeta(2i) as an exact element of Q[pi^2]; zeta(0) = -1/2.
PiPoly zeta_even(unsigned i);

}  // namespace wpvol

#endif  // WPVOL_PIPOLY_HPP
