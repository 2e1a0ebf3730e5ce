#ifndef WPVOL_TESTS_HELPERS_HPP
#define WPVOL_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "wpvol/lpoly.hpp"

namespace wpvol::testing {

inline Rat q(long p, long d = 1) { return Rat(p, d); }

/// q * pi^(2k)
inline PiPoly pi(long p, long d, unsigned k) { return PiPoly::monomial(Rat(p, d), k); }

/// Builds an LPoly from {alpha, coefficient} pairs.
inline LPoly lpoly(std::size_t n, std::initializer_list<std::pair<MultiIndex, PiPoly>> terms) {
  LPoly p(n);
  for (const auto& [a, c] : terms) p.add_term(a, c);
  return p;
}

/// Small random values for property tests. Seeded per test case so failures
/// reproduce.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rational() {
    const long den = integer(1, 40);
    return Rat(integer(-60, 60), den);
  }

  PiPoly pipoly(unsigned max_k = 4, unsigned max_terms = 4) {
    PiPoly p;
    const long terms = integer(0, max_terms);
    for (long i = 0; i < terms; ++i) p.add_term(static_cast<unsigned>(integer(0, max_k)), rational());
    return p;
  }

  MultiIndex multi_index(std::size_t n, unsigned max_entry) {
    MultiIndex a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<unsigned>(integer(0, max_entry));
    return a;
  }

  LPoly lpoly(std::size_t n, unsigned max_entry = 3, unsigned max_terms = 6) {
    LPoly p(n);
    const long terms = integer(0, max_terms);
    for (long i = 0; i < terms; ++i) p.add_term(multi_index(n, max_entry), pipoly(3, 2));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace wpvol::testing

#endif  // WPVOL_TESTS_HELPERS_HPP
