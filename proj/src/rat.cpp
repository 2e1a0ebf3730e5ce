#include "wpvol/rat.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace wpvol {

Rat::Rat(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty component in '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("Rat::parse: bad integer in '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("Rat::parse: bad integer in '" + std::string(text) + "'");
      }
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + std::string(text) + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

double Rat::to_double() const {
  if (is_zero()) return 0.0;
  // mpq_get_d is undefined outside the double exponent range.
  const long num_bits = static_cast<long>(mpz_sizeinbase(q_.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(q_.get_den_mpz_t(), 2));
  const long exp2 = num_bits - den_bits;
  if (exp2 > std::numeric_limits<double>::max_exponent - 2) {
    throw std::overflow_error("Rat::to_double: " + str() + " exceeds double range");
  }
  if (exp2 < std::numeric_limits<double>::min_exponent + 2) {
    throw std::underflow_error("Rat::to_double: " + str() + " below double range");
  }
  return q_.get_d();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class odd_double_factorial(unsigned k) {
  if (k == 0) return 1;
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), 2 * k - 1);
  return r;
}

Rat pow(const Rat& base, unsigned exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
  return Rat(num, den);
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache{Rat(1)};

}  // namespace

Rat bernoulli(unsigned m) {
  std::lock_guard lock(bernoulli_mutex);
  // sum_{k=0}^{j} C(j+1, k) B_k = 0
  for (unsigned j = static_cast<unsigned>(bernoulli_cache.size()); j <= m; ++j) {
    Rat acc;
    for (unsigned k = 0; k < j; ++k) {
      acc += Rat(binomial(j + 1, k)) * bernoulli_cache[k];
    }
    bernoulli_cache.push_back(-acc / Rat(j + 1));
  }
  return bernoulli_cache[m];
}

}  // namespace wpvol
