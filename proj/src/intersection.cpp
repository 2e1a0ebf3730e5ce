#include "wpvol/intersection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpvol {

namespace {

Signature signature_of(unsigned g, const MultiIndex& alpha) {
  return {g, static_cast<unsigned>(alpha.size())};
}

void require_in_recursion(Signature s, const char* what) {
  if (!s.stable() || s.n == 0) {
    throw std::invalid_argument(std::string(what) + ": signature (" + s.key() + ") needs 2g-2+n > 0 and n >= 1");
  }
}

/// 2^{delta_{1g} delta_{1n}}
long elliptic_factor(Signature s) { return (s.g == 1 && s.n == 1) ? 2 : 1; }

/// (alpha)_g = C_alpha 2^{-delta} alpha! 2^{|alpha|}
PiPoly leading_symbol(unsigned g, const MultiIndex& alpha, const VolumeTable& table) {
  const Signature s = signature_of(g, alpha);
  const Rat w = Rat(mpz_class(alpha.factorial() << alpha.total()), mpz_class(elliptic_factor(s)));
  return c_alpha(g, alpha, table) * w;
}

}  // namespace

bool TauSymbol::nontrivial() const {
  const Signature s = signature_of(g, alpha);
  return s.stable() && alpha.total() + kappa_power == 3 * g + alpha.size() - 3;
}

PiPoly c_alpha(unsigned g, const MultiIndex& alpha, const VolumeTable& table) {
  const Signature s = signature_of(g, alpha);
  require_in_recursion(s, "c_alpha");
  if (alpha.total() > s.dim()) return {};
  return table.at(s).coeff(alpha) * Rat(elliptic_factor(s));
}

IntersectionValue tau_kappa(unsigned g, const MultiIndex& alpha, const VolumeTable& table) {
  const Signature s = signature_of(g, alpha);
  require_in_recursion(s, "tau_kappa");
  const unsigned d = s.dim();
  if (alpha.total() > d) return {};
  const unsigned m = d - alpha.total();
  const Rat w(mpz_class((alpha.factorial() * factorial(m)) << alpha.total()), mpz_class(elliptic_factor(s)));
  IntersectionValue out;
  out.omega = c_alpha(g, alpha, table) * w;
  if (out.omega.is_zero()) return out;
  if (!out.omega.is_monomial() || out.omega.terms().begin()->first != m) {
    throw InvariantViolation("tau_kappa: " + out.omega.str() + " is not a rational multiple of (2π²)^" +
                             std::to_string(m));
  }
  out.kappa = out.omega.terms().begin()->second / Rat(mpz_class(mpz_class(1) << m));
  return out;
}

IntersectionValue intersection(const TauSymbol& sym, const VolumeTable& table) {
  if (!sym.nontrivial()) return {};
  return tau_kappa(sym.g, sym.alpha, table);
}

Rat tau(unsigned g, const MultiIndex& alpha, const VolumeTable& table) {
  const Signature s = signature_of(g, alpha);
  if (!s.stable() || s.n == 0 || alpha.total() != s.dim()) return {};
  return tau_kappa(g, alpha, table).kappa;
}

Rat genus0_tau(const MultiIndex& alpha) {
  const std::size_t n = alpha.size();
  if (n < 3 || alpha.total() != n - 3) return {};
  return Rat(factorial(static_cast<unsigned>(n - 3)), alpha.factorial());
}

CheckRecord check_string(unsigned g, const MultiIndex& alpha, const VolumeTable& table) {
  const Signature s = signature_of(g, alpha);
  require_in_recursion(s, "check_string");
  if (alpha.total() != 3 * g - 2 + s.n) throw std::invalid_argument("check_string: need |alpha| = 3g-2+n");
  CheckRecord rec{"string", g, s.n + 1, alpha.inserted(0, 0), false, {}, {}};
  const PiPoly lhs = leading_symbol(g, alpha.inserted(0, 0), table);
  PiPoly rhs;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    MultiIndex lowered = alpha;
    lowered[i] -= 1;
    rhs += leading_symbol(g, lowered, table);
  }
  rec.pass = lhs == rhs;
  rec.lhs = lhs.str();
  rec.rhs = rhs.str();
  return rec;
}

CheckRecord check_dilaton(unsigned g, const MultiIndex& alpha, const VolumeTable& table) {
  const Signature s = signature_of(g, alpha);
  require_in_recursion(s, "check_dilaton");
  if (alpha.total() != s.dim()) throw std::invalid_argument("check_dilaton: need |alpha| = 3g-3+n");
  CheckRecord rec{"dilaton", g, s.n + 1, alpha.inserted(0, 1), false, {}, {}};
  const PiPoly lhs = leading_symbol(g, alpha.inserted(0, 1), table);
  const PiPoly rhs = leading_symbol(g, alpha, table) * Rat(s.euler());
  rec.pass = lhs == rhs;
  rec.lhs = lhs.str();
  rec.rhs = rhs.str();
  return rec;
}

CheckRecord check_dvv(unsigned g, const MultiIndex& k, const VolumeTable& table) {
  const Signature s = signature_of(g, k);
  require_in_recursion(s, "check_dvv");
  if (is_base_case(s)) throw std::invalid_argument("check_dvv: (" + s.key() + ") is an initial condition");
  if (k.total() != s.dim()) throw std::invalid_argument("check_dvv: need |k| = 3g-3+n");
  const unsigned k1 = k[0];
  const MultiIndex rest = k.erased(0);
  const Rat lhs = Rat(odd_double_factorial(k1 + 1)) * tau(g, k, table);

  Rat rhs;
  if (k1 >= 2) {
    const std::size_t others = rest.size();
    for (unsigned i = 0; i + 2 <= k1; ++i) {
      const unsigned j = k1 - 2 - i;
      const Rat w = Rat(mpz_class(odd_double_factorial(i + 1) * odd_double_factorial(j + 1))) * Rat(1, 2);
      // Disconnected: both pieces carry one of the new points; genera add up to g.
      for (unsigned long mask = 0; mask < (1ul << others); ++mask) {
        std::vector<unsigned> left{i};
        std::vector<unsigned> right{j};
        for (std::size_t b = 0; b < others; ++b) (mask >> b & 1ul ? left : right).push_back(rest[b]);
        for (unsigned g1 = 0; g1 <= g; ++g1) {
          const Rat t1 = tau(g1, MultiIndex(left), table);
          if (t1.is_zero()) continue;
          rhs += w * t1 * tau(g - g1, MultiIndex(right), table);
        }
      }
      // Connected: genus drops by one, two new points.
      if (g >= 1) rhs += w * tau(g - 1, rest.inserted(0, j).inserted(0, i), table);
    }
  }
  for (std::size_t j = 0; j < rest.size(); ++j) {
    const unsigned kj = rest[j];
    if (k1 + kj == 0) continue;
    MultiIndex merged = rest;
    merged[j] = k1 + kj - 1;
    const Rat w(odd_double_factorial(k1 + kj), odd_double_factorial(kj));
    rhs += w * tau(g, merged, table);
  }

  CheckRecord rec{"dvv", g, s.n, k, lhs == rhs, lhs.str(), rhs.str()};
  return rec;
}

CheckRecord check_do_string(unsigned g, unsigned n, const VolumeTable& table) {
  const Signature small{g, n};
  const Signature big{g, n + 1};
  require_in_recursion(small, "check_do_string");
  const LPoly lhs = subst_2pi_i(table.at(big), n);
  const LPoly& v = table.at(small);
  LPoly rhs(n);
  for (std::size_t k = 0; k < n; ++k) rhs += antiderivative_L(v, k);
  return {"do-string", g, n, std::nullopt, lhs == rhs, to_text(lhs), to_text(rhs)};
}

CheckRecord check_do_dilaton(unsigned g, unsigned n, const VolumeTable& table) {
  const Signature small{g, n};
  const Signature big{g, n + 1};
  require_in_recursion(small, "check_do_dilaton");
  const OddPart d = partial_L(table.at(big), n);
  const LPoly lhs = subst_2pi_i(d.cofactor, n);
  const LPoly rhs = table.at(small) * PiPoly(small.euler());
  return {"do-dilaton", g, n, std::nullopt, lhs == rhs, to_text(lhs), to_text(rhs)};
}

PiPoly compact_volume(unsigned g, VolumeTable& table, const BuildOptions& opts) {
  if (g < 2) throw std::invalid_argument("compact_volume: no stable closed surface of genus " + std::to_string(g));
  const Signature one{g, 1};
  const Signature targets[] = {one};
  build(table, targets, opts);
  const OddPart d = partial_L(table.at(one), 0);
  const LPoly at_2pi_i = subst_2pi_i(d.cofactor, 0);
  return at_2pi_i.coeff(MultiIndex{}) * Rat(1, 2 * static_cast<long>(g) - 2);
}

double zograf_ratio(unsigned g, unsigned n, const VolumeTable& table) {
  const Signature s{g, n};
  require_in_recursion(s, "zograf_ratio");
  if (g == 0) throw std::invalid_argument("zograf_ratio: genus must be positive");
  const double v0 = true_volume(s, table).coeff(MultiIndex(n)).to_double();
  const unsigned e = 2 * g + n - 3;
  const double pi = std::numbers::pi;
  const double log_model = static_cast<double>(e) * std::log(4.0 * pi * pi) + std::lgamma(e + 1.0) -
                           0.5 * std::log(static_cast<double>(g) * pi);
  return std::exp(std::log(v0) - log_model);
}

namespace {

/// (g, n) pairs with n >= 1 where both V_{g,n} and V_{g,n+1} are in range.
std::vector<Signature> forgetful_pairs(unsigned max_dim) {
  std::vector<Signature> out;
  for (Signature big : signatures_up_to(max_dim)) {
    if (big.n < 2) continue;
    const Signature small{big.g, big.n - 1};
    if (small.stable()) out.push_back(small);
  }
  return out;
}

}  // namespace

std::vector<CheckRecord> string_suite(const VolumeTable& table, unsigned max_dim) {
  std::vector<CheckRecord> out;
  for (Signature s : forgetful_pairs(max_dim)) {
    for (const MultiIndex& a : multi_indices_of_degree(s.n, s.dim() + 1)) out.push_back(check_string(s.g, a, table));
  }
  return out;
}

std::vector<CheckRecord> dilaton_suite(const VolumeTable& table, unsigned max_dim) {
  std::vector<CheckRecord> out;
  for (Signature s : forgetful_pairs(max_dim)) {
    for (const MultiIndex& a : multi_indices_of_degree(s.n, s.dim())) out.push_back(check_dilaton(s.g, a, table));
  }
  return out;
}

std::vector<CheckRecord> dvv_suite(const VolumeTable& table, unsigned max_dim) {
  std::vector<CheckRecord> out;
  for (Signature s : signatures_up_to(max_dim)) {
    if (is_base_case(s)) continue;
    for (const MultiIndex& k : multi_indices_of_degree(s.n, s.dim())) out.push_back(check_dvv(s.g, k, table));
  }
  return out;
}

std::vector<CheckRecord> do_string_suite(const VolumeTable& table, unsigned max_dim) {
  std::vector<CheckRecord> out;
  for (Signature s : forgetful_pairs(max_dim)) out.push_back(check_do_string(s.g, s.n, table));
  return out;
}

std::vector<CheckRecord> do_dilaton_suite(const VolumeTable& table, unsigned max_dim) {
  std::vector<CheckRecord> out;
  for (Signature s : forgetful_pairs(max_dim)) out.push_back(check_do_dilaton(s.g, s.n, table));
  return out;
}

}  // namespace wpvol
