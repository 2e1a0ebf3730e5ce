#include "wpvol/lpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wpvol/format.hpp"

namespace wpvol {

unsigned MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

mpz_class MultiIndex::factorial() const {
  mpz_class r = 1;
  for (unsigned v : e_) r *= wpvol::factorial(v);
  return r;
}

MultiIndex MultiIndex::erased(std::size_t i) const {
  std::vector<unsigned> e = e_;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::inserted(std::size_t i, unsigned v) const {
  std::vector<unsigned> e = e_;
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(i), v);
  return MultiIndex(std::move(e));
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned ta = a.total();
  const unsigned tb = b.total();
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end(), std::greater<>{});
}

namespace {

void enumerate(std::vector<unsigned>& cur, std::size_t pos, unsigned remaining, bool exact,
               std::vector<MultiIndex>& out) {
  if (pos == cur.size()) {
    if (!exact || remaining == 0) out.emplace_back(cur);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    enumerate(cur, pos + 1, remaining - v, exact, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned max_total) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(n, 0);
  enumerate(cur, 0, max_total, false, out);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned total) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(n, 0);
  if (n == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  enumerate(cur, 0, total, true, out);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

LPoly::LPoly(std::size_t n, const PiPoly& c) : n_(n) {
  if (!c.is_zero()) terms_.emplace(MultiIndex(n), c);
}

const PiPoly& LPoly::coeff(const MultiIndex& alpha) const {
  static const PiPoly kZero;
  if (alpha.size() != n_) throw std::invalid_argument("LPoly::coeff: multi-index length mismatch");
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? kZero : it->second;
}

void LPoly::add_term(const MultiIndex& alpha, const PiPoly& c) {
  if (alpha.size() != n_) throw std::invalid_argument("LPoly::add_term: multi-index length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned LPoly::degree() const {
  // Canonical order is graded, so the last key has the largest total.
  return terms_.empty() ? 0 : terms_.rbegin()->first.total();
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("LPoly: variable count mismatch");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("LPoly: variable count mismatch");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

LPoly& LPoly::operator*=(const PiPoly& s) {
  Terms out;
  for (auto& [a, c] : terms_) {
    PiPoly prod = c * s;
    if (!prod.is_zero()) out.emplace(a, std::move(prod));
  }
  terms_ = std::move(out);
  return *this;
}

LPoly lp_add(const LPoly& a, const LPoly& b) { return a + b; }

LPoly lp_scale(const LPoly& a, const PiPoly& s) { return a * s; }

LPoly lp_mul_disjoint(const LPoly& a, std::span<const std::size_t> a_vars, const LPoly& b,
                      std::span<const std::size_t> b_vars, std::size_t n) {
  if (a_vars.size() != a.num_vars() || b_vars.size() != b.num_vars()) {
    throw std::invalid_argument("lp_mul_disjoint: variable map length mismatch");
  }
  std::vector<bool> used(n, false);
  for (auto vars : {a_vars, b_vars}) {
    for (std::size_t v : vars) {
      if (v >= n) throw std::invalid_argument("lp_mul_disjoint: variable position out of range");
      if (used[v]) throw std::invalid_argument("lp_mul_disjoint: variable sets overlap");
      used[v] = true;
    }
  }
  LPoly r(n);
  for (const auto& [alpha_a, ca] : a.terms()) {
    MultiIndex base(n);
    for (std::size_t i = 0; i < a_vars.size(); ++i) base[a_vars[i]] = alpha_a[i];
    for (const auto& [alpha_b, cb] : b.terms()) {
      MultiIndex m = base;
      for (std::size_t i = 0; i < b_vars.size(); ++i) m[b_vars[i]] = alpha_b[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

LPoly integrate_back(const LPoly& p, std::size_t j) {
  if (j >= p.num_vars()) throw std::invalid_argument("integrate_back: variable index out of range");
  LPoly r(p.num_vars());
  for (const auto& [alpha, c] : p.terms()) r.add_term(alpha, c * Rat(1, 2 * static_cast<long>(alpha[j]) + 1));
  return r;
}

OddPart partial_L(const LPoly& p, std::size_t j) {
  if (j >= p.num_vars()) throw std::invalid_argument("partial_L: variable index out of range");
  OddPart out{j, LPoly(p.num_vars())};
  for (const auto& [alpha, c] : p.terms()) {
    if (alpha[j] == 0) continue;
    MultiIndex m = alpha;
    m[j] -= 1;
    out.cofactor.add_term(m, c * Rat(2 * static_cast<long>(alpha[j])));
  }
  return out;
}

LPoly subst_2pi_i(const LPoly& p, std::size_t j) {
  if (j >= p.num_vars()) throw std::invalid_argument("subst_2pi_i: variable index out of range");
  LPoly r(p.num_vars() - 1);
  for (const auto& [alpha, c] : p.terms()) {
    const unsigned k = alpha[j];
    r.add_term(alpha.erased(j), (c * pow(Rat(-4), k)).shifted(k));
  }
  return r;
}

LPoly antiderivative_L(const LPoly& p, std::size_t k) {
  if (k >= p.num_vars()) throw std::invalid_argument("antiderivative_L: variable index out of range");
  LPoly r(p.num_vars());
  for (const auto& [alpha, c] : p.terms()) {
    MultiIndex m = alpha;
    m[k] += 1;
    r.add_term(m, c * Rat(1, 2 * static_cast<long>(alpha[k]) + 2));
  }
  return r;
}

LPoly permute_labels(const LPoly& p, std::span<const std::size_t> sigma) {
  const std::size_t n = p.num_vars();
  if (sigma.size() != n) throw std::invalid_argument("permute_labels: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t v : sigma) {
    if (v >= n || seen[v]) throw std::invalid_argument("permute_labels: not a permutation");
    seen[v] = true;
  }
  LPoly r(n);
  for (const auto& [alpha, c] : p.terms()) {
    MultiIndex m(n);
    for (std::size_t i = 0; i < n; ++i) m[sigma[i]] = alpha[i];
    r.add_term(m, c);
  }
  return r;
}

bool is_symmetric(const LPoly& p) {
  const std::size_t n = p.num_vars();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::swap(sigma[i], sigma[i + 1]);
    if (!(permute_labels(p, sigma) == p)) return false;
  }
  return true;
}

PiPoly evaluate_squares(const LPoly& p, std::span<const Rat> squares) {
  if (squares.size() != p.num_vars()) throw std::invalid_argument("evaluate_squares: wrong number of lengths");
  PiPoly acc;
  for (const auto& [alpha, c] : p.terms()) {
    Rat w(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) w *= pow(squares[i], alpha[i]);
    acc += c * w;
  }
  return acc;
}

namespace {

std::string monomial_text(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    s += "L";
    if (alpha.size() > 1) s += fmt::subscript(static_cast<unsigned>(i + 1));
    s += fmt::superscript(2 * alpha[i]);
  }
  return s;
}

std::string pi_text(unsigned k) {
  if (k == 0) return "";
  return k == 1 ? "π²" : "π" + fmt::superscript(2 * k);
}

std::string monomial_latex(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    s += alpha.size() > 1 ? "L_{" + std::to_string(i + 1) + "}" : "L";
    s += "^{" + std::to_string(2 * alpha[i]) + "}";
  }
  return s;
}

}  // namespace

std::string to_text(const LPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [alpha, c] : p.terms()) {
    const std::string mono = monomial_text(alpha);
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      const std::string piece = fmt::scaled(it->second, pi_text(it->first) + mono);
      if (out.empty()) {
        out = piece;
      } else {
        out += it->second.sign() < 0 ? " - " + piece.substr(1) : " + " + piece;
      }
    }
  }
  return out;
}

std::string to_latex(const LPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [alpha, c] : p.terms()) {
    const std::string mono = monomial_latex(alpha);
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      const Rat& q = it->second;
      const unsigned k = it->first;
      std::string piece;
      const mpz_class num = abs(q.numerator());
      if (q.is_integer()) {
        if (num != 1 || (k == 0 && mono.empty())) piece = num.get_str();
      } else {
        piece = "\\frac{" + num.get_str() + "}{" + q.denominator().get_str() + "}";
      }
      if (k > 0) piece += "\\pi^{" + std::to_string(2 * k) + "}";
      if (!mono.empty()) piece += mono;
      if (out.empty()) {
        out = q.sign() < 0 ? "-" + piece : piece;
      } else {
        out += (q.sign() < 0 ? " - " : " + ") + piece;
      }
    }
  }
  return out;
}

}  // namespace wpvol
