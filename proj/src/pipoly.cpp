#include "wpvol/pipoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpvol/format.hpp"

namespace wpvol {

PiPoly::PiPoly(const Rat& constant) {
  if (!constant.is_zero()) terms_.emplace(0u, constant);
}

PiPoly PiPoly::monomial(const Rat& q, unsigned k) {
  PiPoly p;
  p.add_term(k, q);
  return p;
}

Rat PiPoly::coeff(unsigned k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rat() : it->second;
}

void PiPoly::add_term(unsigned k, const Rat& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, q);
  if (inserted) return;
  it->second += q;
  if (it->second.is_zero()) terms_.erase(it);
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
  for (const auto& [k, q] : o.terms_) add_term(k, q);
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) {
  for (const auto& [k, q] : o.terms_) add_term(k, -q);
  return *this;
}

PiPoly& PiPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, q] : terms_) q *= s;
  return *this;
}

PiPoly operator-(const PiPoly& a) { return a * Rat(-1); }

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly r;
  for (const auto& [ka, qa] : a.terms_) {
    for (const auto& [kb, qb] : b.terms_) r.add_term(ka + kb, qa * qb);
  }
  return r;
}

PiPoly PiPoly::shifted(unsigned k) const {
  PiPoly r;
  for (const auto& [j, q] : terms_) r.terms_.emplace(j + k, q);
  return r;
}

double PiPoly::to_double() const {
  // long double accumulation keeps the documented 1e-12 budget for
  // pi-degree <= 30 when no cancellation occurs.
  long double acc = 0.0L;
  for (const auto& [k, q] : terms_) {
    acc += static_cast<long double>(q.to_double()) *
           std::pow(std::numbers::pi_v<long double>, 2.0L * static_cast<long double>(k));
  }
  if (!std::isfinite(static_cast<double>(acc))) {
    throw std::overflow_error("PiPoly::to_double: value exceeds double range");
  }
  return static_cast<double>(acc);
}

std::string PiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest pi power first, matching the usual "π²/6 + 1/8" reading.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, q] = *it;
    std::string sym;
    if (k == 1) {
      sym = "π²";
    } else if (k > 1) {
      sym = "π" + fmt::superscript(2 * k);
    }
    std::string piece = fmt::scaled(q, sym);
    if (!first) {
      out += q.sign() < 0 ? " - " + piece.substr(1) : " + " + piece;
    } else {
      out += piece;
    }
    first = false;
  }
  return out;
}

PiPoly zeta_even(unsigned i) {
  if (i == 0) return PiPoly(Rat(-1, 2));
  // zeta(2i) = (-1)^(i+1) B_2i (2pi)^2i / (2 (2i)!)
  Rat q = bernoulli(2 * i) * Rat(mpz_class(mpz_class(1) << (2 * i))) / Rat(mpz_class(2 * factorial(2 * i)));
  if (i % 2 == 0) q = -q;
  return PiPoly::monomial(q, i);
}

}  // namespace wpvol
