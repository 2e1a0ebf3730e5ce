#include "wpvol/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wpvol {

namespace {

/// 1/(1+e^{u/2}) without overflow.
double logistic_tail(double u) {
  if (u > 0.0) {
    const double e = std::exp(-0.5 * u);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(0.5 * u));
}

/// log(e^a + e^b)
double log_add_exp(double a, double b) {
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(-std::abs(a - b)));
}

/// log(cosh(a))
double log_cosh(double a) {
  const double m = std::abs(a);
  return m + std::log1p(std::exp(-2.0 * m)) - std::numbers::ln2;
}

}  // namespace

double H_num(double x, double y) { return logistic_tail(x + y) + logistic_tail(x - y); }

double D_num(double x, double y, double z) {
  const double s = 0.5 * (y + z);
  return 2.0 * (log_add_exp(0.5 * x, s) - log_add_exp(-0.5 * x, s));
}

double R_num(double x, double y, double z) {
  const double cy = log_cosh(0.5 * y);
  return x - (log_add_exp(cy, log_cosh(0.5 * (x + z))) - log_add_exp(cy, log_cosh(0.5 * (x - z))));
}

namespace {

std::mutex kernel_mutex;
std::map<unsigned, KernelPoly> single_cache;
std::map<std::pair<unsigned, unsigned>, KernelPoly> double_cache;

KernelPoly compute_kernel_F(unsigned k) {
  // F_{2k+1}(t) = (2k+1)! sum_{i=0}^{k+1} zeta(2i) (2^{2i+1} - 4) t^{2(k+1-i)} / (2(k+1-i))!
  KernelPoly f(1);
  const Rat lead(factorial(2 * k + 1));
  for (unsigned i = 0; i <= k + 1; ++i) {
    const unsigned m = k + 1 - i;
    const Rat weight = Rat(mpz_class((mpz_class(1) << (2 * i + 1)) - 4)) * lead / Rat(factorial(2 * m));
    f.add_term(MultiIndex{m}, zeta_even(i) * weight);
  }
  return f;
}

const KernelPoly& kernel_F_locked(unsigned k) {
  auto it = single_cache.find(k);
  if (it == single_cache.end()) it = single_cache.emplace(k, compute_kernel_F(k)).first;
  return it->second;
}

}  // namespace

const KernelPoly& kernel_F(unsigned k) {
  std::lock_guard lock(kernel_mutex);
  return kernel_F_locked(k);
}

const KernelPoly& kernel_double(unsigned i, unsigned j) {
  std::lock_guard lock(kernel_mutex);
  const auto key = std::make_pair(i, j);
  auto it = double_cache.find(key);
  if (it != double_cache.end()) return it->second;
  // Substituting u = x + y reduces the inner integral to a Beta integral:
  // int_0^u x^{2i+1} (u-x)^{2j+1} dx = (2i+1)!(2j+1)!/(2i+2j+3)! u^{2i+2j+3}.
  const Rat beta = Rat(factorial(2 * i + 1) * factorial(2 * j + 1), factorial(2 * i + 2 * j + 3));
  KernelPoly g = kernel_F_locked(i + j + 1) * PiPoly(beta);
  return double_cache.emplace(key, std::move(g)).first->second;
}

LPoly shifted_sum(const KernelPoly& f) {
  if (f.num_vars() != 1) throw std::invalid_argument("shifted_sum: kernel must have one variable");
  LPoly r(2);
  for (const auto& [alpha, c] : f.terms()) {
    const unsigned m = alpha[0];
    for (unsigned s = 0; s <= m; ++s) {
      r.add_term(MultiIndex{s, m - s}, c * Rat(binomial(2 * m, 2 * s)));
    }
  }
  return r;
}

const PiPoly& kernel_coeff(const KernelPoly& f, unsigned m) { return f.coeff(MultiIndex{m}); }

}  // namespace wpvol
