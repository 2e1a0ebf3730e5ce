#include "wpvol/recursion.hpp"

#include <algorithm>
#include <set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wpvol/kernels.hpp"

namespace wpvol {

std::string Signature::key() const { return std::to_string(g) + "," + std::to_string(n); }

Signature Signature::parse_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad signature key '" + key + "'");
  try {
    std::size_t used_g = 0;
    std::size_t used_n = 0;
    const std::string gs = key.substr(0, comma);
    const std::string ns = key.substr(comma + 1);
    const unsigned long g = std::stoul(gs, &used_g);
    const unsigned long n = std::stoul(ns, &used_n);
    if (used_g != gs.size() || used_n != ns.size()) throw std::invalid_argument(key);
    return {static_cast<unsigned>(g), static_cast<unsigned>(n)};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad signature key '" + key + "'");
  }
}

const LPoly* VolumeTable::find(Signature s) const {
  const auto it = entries_.find(s);
  return it == entries_.end() ? nullptr : &it->second;
}

const LPoly& VolumeTable::at(Signature s) const {
  const LPoly* v = find(s);
  if (v == nullptr) throw DependencyFault("volume V_{" + s.key() + "} requested before it was computed");
  return *v;
}

void VolumeTable::insert(Signature s, LPoly v) {
  check_volume_invariants(s, v);
  const auto it = entries_.find(s);
  if (it != entries_.end()) {
    if (!(it->second == v)) throw InvariantViolation("conflicting values for V_{" + s.key() + "}");
    return;
  }
  entries_.emplace(s, std::move(v));
}

void check_volume_invariants(Signature s, const LPoly& v) {
  const std::string where = "V_{" + s.key() + "}: ";
  if (!s.stable()) throw InvariantViolation(where + "unstable signature");
  if (v.num_vars() != s.n) throw InvariantViolation(where + "wrong number of variables");
  if (v.is_zero()) throw InvariantViolation(where + "zero polynomial");
  const unsigned d = s.dim();
  for (const auto& [alpha, c] : v.terms()) {
    const unsigned total = alpha.total();
    if (total > d) throw InvariantViolation(where + "degree bound exceeded");
    if (!c.is_monomial() || c.terms().begin()->first != d - total) {
      throw InvariantViolation(where + "coefficient " + c.str() + " is not homogeneous");
    }
    if (c.terms().begin()->second.sign() <= 0) {
      throw InvariantViolation(where + "non-positive coefficient " + c.str());
    }
  }
  if (!is_symmetric(v)) throw InvariantViolation(where + "not symmetric in the boundary lengths");
}

bool is_base_case(Signature s) { return (s.g == 0 && s.n == 3) || (s.g == 1 && s.n == 1); }

LPoly base_volume(Signature s) {
  if (s.g == 0 && s.n == 3) return LPoly(3, PiPoly(1));
  if (s.g == 1 && s.n == 1) {
    LPoly v(1, PiPoly::monomial(Rat(1, 12), 1));
    v.add_term(MultiIndex{1}, PiPoly(Rat(1, 48)));
    return v;
  }
  throw std::invalid_argument("V_{" + s.key() + "} is not a base case");
}

std::vector<Splitting> stable_splittings(unsigned g, unsigned n) {
  if (n == 0) throw std::invalid_argument("stable_splittings: need n >= 1");
  std::vector<Splitting> out;
  const std::size_t others = n - 1;
  for (unsigned g1 = 0; g1 <= g; ++g1) {
    for (unsigned long mask = 0; mask < (1ul << others); ++mask) {
      Splitting sp;
      sp.first.genus = g1;
      sp.second.genus = g - g1;
      for (std::size_t i = 0; i < others; ++i) {
        (mask >> i & 1ul ? sp.first : sp.second).labels.push_back(i + 1);
      }
      if (sp.first.signature().stable() && sp.second.signature().stable()) out.push_back(std::move(sp));
    }
  }
  return out;
}

namespace {

/// Maps x^{2a} y^{2b} m(L_2..L_n) over (x, y, L_2..L_n) to
/// 1/2 G_{a,b}(L_1) m.
LPoly integrate_pair(const LPoly& p, unsigned n) {
  LPoly out(n);
  const PiPoly half(Rat(1, 2));
  for (const auto& [alpha, c] : p.terms()) {
    const KernelPoly& g = kernel_double(alpha[0], alpha[1]);
    const PiPoly scale = c * half;
    for (const auto& [t, gc] : g.terms()) {
      MultiIndex m = alpha.erased(0);
      m[0] = t[0];
      out.add_term(m, gc * scale);
    }
  }
  return out;
}

}  // namespace

LPoly a_con_term(unsigned g, unsigned n, const VolumeTable& table) {
  if (g == 0) return LPoly(n);
  const Signature below{g - 1, n + 1};
  if (!below.stable()) return LPoly(n);
  // Variable layout of V_{g-1,n+1}: (x, y, L_2..L_n).
  return integrate_pair(table.at(below), n);
}

LPoly a_dcon_term(unsigned g, unsigned n, const VolumeTable& table) {
  LPoly acc(n + 1);
  for (const auto& [p1, p2] : stable_splittings(g, n)) {
    // Product over (x, y, L_2..L_n); label i sits at position i + 1.
    std::vector<std::size_t> vars1{0};
    std::vector<std::size_t> vars2{1};
    for (std::size_t l : p1.labels) vars1.push_back(l + 1);
    for (std::size_t l : p2.labels) vars2.push_back(l + 1);
    acc += lp_mul_disjoint(table.at(p1.signature()), vars1, table.at(p2.signature()), vars2, n + 1);
  }
  return integrate_pair(acc, n);
}

LPoly b_term(unsigned g, unsigned n, const VolumeTable& table) {
  LPoly out(n);
  if (n < 2) return out;
  const LPoly& below = table.at({g, n - 1});
  for (std::size_t j = 1; j < n; ++j) {
    // V_{g,n-1} variables: (x, L_2..^L_j..L_n)
    std::vector<std::size_t> rest_vars;
    for (std::size_t i = 1; i < n; ++i) {
      if (i != j) rest_vars.push_back(i);
    }
    for (const auto& [alpha, c] : below.terms()) {
      const LPoly pair_poly = shifted_sum(kernel_F(alpha[0]));
      LPoly rest(rest_vars.size());
      rest.add_term(alpha.erased(0), c);
      const std::size_t pair_vars[] = {0, j};
      out += lp_mul_disjoint(pair_poly, pair_vars, rest, rest_vars, n);
    }
  }
  return out;
}

std::vector<Signature> dependencies(Signature s) {
  std::vector<Signature> deps;
  if (is_base_case(s)) return deps;
  if (s.g >= 1 && Signature{s.g - 1, s.n + 1}.stable()) deps.push_back({s.g - 1, s.n + 1});
  if (s.n >= 2) deps.push_back({s.g, s.n - 1});
  for (const auto& [p1, p2] : stable_splittings(s.g, s.n)) {
    deps.push_back(p1.signature());
    deps.push_back(p2.signature());
  }
  std::sort(deps.begin(), deps.end());
  deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
  return deps;
}

namespace {

bool dim_order(const Signature& a, const Signature& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

void require_recursive(Signature s) {
  if (!s.stable() || s.n == 0) {
    throw std::invalid_argument("V_{" + s.key() + "} is outside the recursion (need 2g-2+n > 0 and n >= 1)");
  }
}

}  // namespace

std::vector<Signature> dependency_closure(std::span<const Signature> targets) {
  std::set<Signature> seen;
  std::vector<Signature> stack(targets.begin(), targets.end());
  while (!stack.empty()) {
    const Signature s = stack.back();
    stack.pop_back();
    require_recursive(s);
    if (!seen.insert(s).second) continue;
    for (Signature d : dependencies(s)) stack.push_back(d);
  }
  std::vector<Signature> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), dim_order);
  return out;
}

std::vector<Signature> signatures_up_to(unsigned max_dim) {
  std::vector<Signature> out;
  for (unsigned g = 0; 3 * g <= max_dim + 2; ++g) {
    for (unsigned n = 1; 3 * g + n <= max_dim + 3; ++n) {
      const Signature s{g, n};
      if (s.stable()) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), dim_order);
  return out;
}

namespace {

/// Everything the gather kernel reads for one signature, resolved up front so
/// the per-monomial loop touches only immutable data.
struct GatherPlan {
  Signature sig;
  const LPoly* con = nullptr;
  unsigned con_dim = 0;
  struct Split {
    const Piece* p1;
    const Piece* p2;
    const LPoly* v1;
    const LPoly* v2;
    unsigned d1;
    unsigned d2;
  };
  std::vector<Splitting> splittings;
  std::vector<Split> splits;
  const LPoly* below = nullptr;
  unsigned below_dim = 0;
  std::vector<const KernelPoly*> F;               // F[a] = F_{2a+1}
  std::vector<std::vector<const KernelPoly*>> G;  // G[a][b], a + b <= dim - 2
};

GatherPlan make_plan(Signature s, const VolumeTable& table) {
  GatherPlan plan;
  plan.sig = s;
  const unsigned d = s.dim();
  if (s.g >= 1 && Signature{s.g - 1, s.n + 1}.stable()) {
    plan.con = &table.at({s.g - 1, s.n + 1});
    plan.con_dim = Signature{s.g - 1, s.n + 1}.dim();
  }
  plan.splittings = stable_splittings(s.g, s.n);
  for (const auto& [p1, p2] : plan.splittings) {
    plan.splits.push_back({&p1, &p2, &table.at(p1.signature()), &table.at(p2.signature()),
                           p1.signature().dim(), p2.signature().dim()});
  }
  if (s.n >= 2) {
    plan.below = &table.at({s.g, s.n - 1});
    plan.below_dim = Signature{s.g, s.n - 1}.dim();
  }
  for (unsigned a = 0; a <= d; ++a) plan.F.push_back(&kernel_F(a));
  if (d >= 2) {
    plan.G.resize(d - 1);
    for (unsigned a = 0; a + 2 <= d; ++a) {
      for (unsigned b = 0; a + b + 2 <= d; ++b) plan.G[a].push_back(&kernel_double(a, b));
    }
  }
  return plan;
}

PiPoly gather(const GatherPlan& plan, const MultiIndex& alpha) {
  const unsigned n = plan.sig.n;
  const unsigned a1 = alpha[0];
  PiPoly acc;

  // Boundaries L_2..L_n keep their exponents in the connected term.
  if (plan.con != nullptr) {
    const MultiIndex rest = alpha.erased(0);
    const unsigned used = rest.total();
    if (used <= plan.con_dim) {
      const unsigned room = plan.con_dim - used;
      PiPoly part;
      MultiIndex key = rest.inserted(0, 0).inserted(0, 0);
      for (unsigned a = 0; a <= room; ++a) {
        for (unsigned b = 0; a + b <= room; ++b) {
          key[0] = a;
          key[1] = b;
          const PiPoly& c = plan.con->coeff(key);
          if (c.is_zero()) continue;
          const PiPoly& k = kernel_coeff(*plan.G[a][b], a1);
          if (k.is_zero()) continue;
          part += c * k;
        }
      }
      acc += part * Rat(1, 2);
    }
  }

  for (const auto& sp : plan.splits) {
    MultiIndex k1(sp.p1->labels.size() + 1);
    MultiIndex k2(sp.p2->labels.size() + 1);
    for (std::size_t i = 0; i < sp.p1->labels.size(); ++i) k1[i + 1] = alpha[sp.p1->labels[i]];
    for (std::size_t i = 0; i < sp.p2->labels.size(); ++i) k2[i + 1] = alpha[sp.p2->labels[i]];
    const unsigned u1 = k1.total();
    const unsigned u2 = k2.total();
    if (u1 > sp.d1 || u2 > sp.d2) continue;
    PiPoly part;
    for (unsigned a = 0; a <= sp.d1 - u1; ++a) {
      k1[0] = a;
      const PiPoly& c1 = sp.v1->coeff(k1);
      if (c1.is_zero()) continue;
      for (unsigned b = 0; b <= sp.d2 - u2; ++b) {
        if (a + b + 2 > plan.sig.dim()) break;
        k2[0] = b;
        const PiPoly& c2 = sp.v2->coeff(k2);
        if (c2.is_zero()) continue;
        const PiPoly& k = kernel_coeff(*plan.G[a][b], a1);
        if (k.is_zero()) continue;
        part += c1 * c2 * k;
      }
    }
    acc += part * Rat(1, 2);
  }

  if (plan.below != nullptr) {
    for (std::size_t j = 1; j < n; ++j) {
      MultiIndex key = alpha.erased(j);
      key[0] = 0;
      const unsigned used = key.total();
      if (used > plan.below_dim) continue;
      const unsigned m = a1 + alpha[j];
      const Rat binom(binomial(2 * m, 2 * a1));
      PiPoly part;
      for (unsigned a = 0; a <= plan.below_dim - used; ++a) {
        key[0] = a;
        const PiPoly& c = plan.below->coeff(key);
        if (c.is_zero()) continue;
        const PiPoly& k = kernel_coeff(*plan.F[a], m);
        if (k.is_zero()) continue;
        part += c * k;
      }
      acc += part * binom;
    }
  }

  return acc * Rat(1, 2 * static_cast<long>(a1) + 1);
}

LPoly volume_reference(Signature s, const VolumeTable& table) {
  LPoly rhs = a_con_term(s.g, s.n, table);
  rhs += a_dcon_term(s.g, s.n, table);
  rhs += b_term(s.g, s.n, table);
  return integrate_back(rhs);
}

LPoly volume_gather_serial(Signature s, const VolumeTable& table) {
  const GatherPlan plan = make_plan(s, table);
  LPoly v(s.n);
  for (const MultiIndex& alpha : multi_indices_up_to(s.n, s.dim())) v.add_term(alpha, gather(plan, alpha));
  return v;
}

}  // namespace

PiPoly volume_coefficient(Signature s, const MultiIndex& alpha, const VolumeTable& table) {
  require_recursive(s);
  if (alpha.size() != s.n) throw std::invalid_argument("volume_coefficient: multi-index length mismatch");
  if (is_base_case(s)) return base_volume(s).coeff(alpha);
  if (alpha.total() > s.dim()) return {};
  return gather(make_plan(s, table), alpha);
}

const LPoly& volume(Signature s, VolumeTable& table, Kernel kernel) {
  require_recursive(s);
  if (const LPoly* v = table.find(s)) return *v;
  if (is_base_case(s)) {
    table.insert(s, base_volume(s));
    return table.at(s);
  }
  for (Signature d : dependencies(s)) volume(d, table, kernel);
  table.insert(s, kernel == Kernel::reference ? volume_reference(s, table) : volume_gather_serial(s, table));
  return table.at(s);
}

LPoly true_volume(Signature s, VolumeTable& table) {
  volume(s, table);
  return true_volume(s, std::as_const(table));
}

LPoly true_volume(Signature s, const VolumeTable& table) {
  const LPoly& v = table.at(s);
  if (s.g == 1 && s.n == 1) return v * PiPoly(2);
  return v;
}

void build(VolumeTable& table, std::span<const Signature> targets, const BuildOptions& opts) {
  const std::vector<Signature> order = dependency_closure(targets);
  std::size_t pos = 0;
  while (pos < order.size()) {
    const unsigned wave_dim = order[pos].dim();
    std::vector<Signature> wave;
    for (; pos < order.size() && order[pos].dim() == wave_dim; ++pos) {
      if (!table.contains(order[pos])) wave.push_back(order[pos]);
    }
    if (wave.empty()) continue;

    if (opts.kernel == Kernel::reference) {
      for (Signature s : wave) {
        table.insert(s, is_base_case(s) ? base_volume(s) : volume_reference(s, table));
      }
      continue;
    }

    // Flatten (signature, monomial) pairs of the whole wave into one work list;
    // every slot has exactly one writer.
    std::vector<GatherPlan> plans;
    std::vector<std::vector<MultiIndex>> monomials;
    std::vector<std::pair<std::size_t, std::size_t>> work;
    for (Signature s : wave) {
      if (is_base_case(s)) continue;
      plans.push_back(make_plan(s, table));
      monomials.push_back(multi_indices_up_to(s.n, s.dim()));
      for (std::size_t m = 0; m < monomials.back().size(); ++m) work.emplace_back(plans.size() - 1, m);
    }
    std::vector<PiPoly> slots(work.size());
    const auto count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, opts.threads))
    for (std::ptrdiff_t w = 0; w < count; ++w) {
      const auto [p, m] = work[static_cast<std::size_t>(w)];
      slots[static_cast<std::size_t>(w)] = gather(plans[p], monomials[p][m]);
    }

    std::size_t w = 0;
    for (std::size_t p = 0; p < plans.size(); ++p) {
      LPoly v(plans[p].sig.n);
      for (const MultiIndex& alpha : monomials[p]) v.add_term(alpha, slots[w++]);
      table.insert(plans[p].sig, std::move(v));
    }
    for (Signature s : wave) {
      if (is_base_case(s)) table.insert(s, base_volume(s));
    }
  }
}

void build_up_to(VolumeTable& table, unsigned max_dim, const BuildOptions& opts) {
  const std::vector<Signature> targets = signatures_up_to(max_dim);
  build(table, targets, opts);
}

}  // namespace wpvol
