#ifndef WPVOL_RAT_HPP
#define WPVOL_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wpvol {

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& v) : q_(v) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  /// Parses "p" or "p/q" in base 10. Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);
/// (2k-1)!! with the convention (-1)!! = 1; k may be 0.
mpz_class odd_double_factorial(unsigned k);
Rat pow(const Rat& base, unsigned exp);

/// Bernoulli number B_m with B_1 = -1/2. Cached; safe to call concurrently.
Rat bernoulli(unsigned m);

}  // namespace wpvol

#endif  // WPVOL_RAT_HPP
