#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "wpvol/kernels.hpp"
#include "wpvol/recursion.hpp"

using namespace wpvol;
using wpvol::testing::lpoly;
using wpvol::testing::pi;
using wpvol::testing::q;

namespace {

/// Univariate polynomial in L^2 with Q[pi^2] coefficients, index = power of L^2.
using Series = std::vector<PiPoly>;

Series times(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

LPoly one_var(const Series& s) {
  LPoly p(1);
  for (std::size_t k = 0; k < s.size(); ++k) p.add_term({static_cast<unsigned>(k)}, s[k]);
  return p;
}

/// (L^2+4pi^2)(L^2+12pi^2)(5L^4+384pi^2L^2+6960pi^4)/2211840, expanded here
/// independently of the library's polynomial code paths.
LPoly v21_golden() {
  const Series a{pi(4, 1, 1), PiPoly(1)};
  const Series b{pi(12, 1, 1), PiPoly(1)};
  const Series c{pi(6960, 1, 2), pi(384, 1, 1), PiPoly(5)};
  Series s = times(times(a, b), c);
  for (PiPoly& t : s) t *= Rat(1, 2211840);
  return one_var(s);
}

LPoly symmetric_sum(std::size_t n, const MultiIndex& pattern, const PiPoly& c) {
  // Sum over distinct permutations of a pattern that is either all-equal or
  // has a single nonzero entry / two nonzero entries.
  LPoly p(n);
  auto idx = multi_indices_of_degree(n, pattern.total());
  std::vector<unsigned> sorted_pattern = pattern.entries();
  std::sort(sorted_pattern.begin(), sorted_pattern.end());
  for (const MultiIndex& a : idx) {
    std::vector<unsigned> e = a.entries();
    std::sort(e.begin(), e.end());
    if (e == sorted_pattern) p.add_term(a, c);
  }
  return p;
}

LPoly v05_golden() {
  LPoly p(5, pi(10, 1, 2));
  p += symmetric_sum(5, {1, 0, 0, 0, 0}, pi(3, 1, 1));
  p += symmetric_sum(5, {2, 0, 0, 0, 0}, PiPoly(q(1, 8)));
  p += symmetric_sum(5, {1, 1, 0, 0, 0}, PiPoly(q(1, 2)));
  return p;
}

LPoly v12_golden() {
  return lpoly(2, {{{0, 0}, pi(1, 4, 2)},
                   {{1, 0}, pi(1, 12, 1)},
                   {{0, 1}, pi(1, 12, 1)},
                   {{2, 0}, PiPoly(q(1, 192))},
                   {{1, 1}, PiPoly(q(1, 96))},
                   {{0, 2}, PiPoly(q(1, 192))}});
}

PiPoly constant_term(const LPoly& v) { return v.coeff(MultiIndex(v.num_vars())); }

}  // namespace

TEST_CASE("signatures") {
  CHECK(Signature{2, 1}.dim() == 4);
  CHECK(Signature{0, 2}.stable() == false);
  CHECK(Signature{1, 0}.stable() == false);
  CHECK(Signature{2, 0}.stable());
  CHECK(Signature::parse_key("3,2") == Signature{3, 2});
  CHECK(Signature{3, 2}.key() == "3,2");
  CHECK_THROWS_AS(Signature::parse_key("3"), std::invalid_argument);
  CHECK_THROWS_AS(Signature::parse_key("a,2"), std::invalid_argument);
}

TEST_CASE("base cases") {
  CHECK(is_base_case({0, 3}));
  CHECK(is_base_case({1, 1}));
  CHECK_FALSE(is_base_case({0, 4}));
  CHECK(base_volume({0, 3}) == LPoly(3, PiPoly(1)));
  CHECK(base_volume({1, 1}) == lpoly(1, {{{0}, pi(1, 12, 1)}, {{1}, PiPoly(q(1, 48))}}));
  CHECK_THROWS_AS(base_volume({0, 4}), std::invalid_argument);
}

TEST_CASE("stable splittings") {
  CHECK(stable_splittings(0, 4).empty());
  CHECK(stable_splittings(1, 2).empty());
  const auto s21 = stable_splittings(2, 1);
  REQUIRE(s21.size() == 1);
  CHECK(s21[0].first == Piece{1, {}});
  CHECK(s21[0].second == Piece{1, {}});
  const auto s13 = stable_splittings(1, 3);
  REQUIRE(s13.size() == 2);
  CHECK(s13[0].first.signature() != s13[1].first.signature());
  // (0,5): choose which two of {2..5} sit with the first piece; the other
  // piece then has two labels too, giving C(4,2) ordered pairs.
  CHECK(stable_splittings(0, 5).size() == 6);
  for (const auto& [a, b] : stable_splittings(3, 3)) {
    CHECK(a.signature().stable());
    CHECK(b.signature().stable());
    CHECK(a.genus + b.genus == 3);
    CHECK(a.labels.size() + b.labels.size() == 2);
  }
}

TEST_CASE("recursion terms") {
  VolumeTable table;
  table.insert({0, 3}, base_volume({0, 3}));
  table.insert({1, 1}, base_volume({1, 1}));
  CHECK(a_dcon_term(0, 4, table).is_zero());
  CHECK(a_con_term(0, 4, table).is_zero());

  LPoly b(4, pi(2, 1, 1));
  b.add_term({1, 0, 0, 0}, PiPoly(q(3, 2)));
  b.add_term({0, 1, 0, 0}, PiPoly(q(1, 2)));
  b.add_term({0, 0, 1, 0}, PiPoly(q(1, 2)));
  b.add_term({0, 0, 0, 1}, PiPoly(q(1, 2)));
  CHECK(b_term(0, 4, table) == b);
  CHECK(integrate_back(b) == volume({0, 4}, table));
}

TEST_CASE("a_con for (1,2) embeds F_3 in the first variable") {
  VolumeTable table;
  table.insert({0, 3}, base_volume({0, 3}));
  const LPoly& f3 = kernel_F(1);
  LPoly expected(2);
  for (const auto& [alpha, c] : f3.terms()) expected.add_term({alpha[0], 0}, c * Rat(1, 12));
  CHECK(a_con_term(1, 2, table) == expected);
  VolumeTable empty;
  CHECK_THROWS_AS(a_con_term(1, 2, empty), DependencyFault);
}

TEST_CASE("golden volumes") {
  VolumeTable table;
  CHECK(volume({0, 3}, table) == LPoly(3, PiPoly(1)));
  CHECK(true_volume({1, 1}, table) == lpoly(1, {{{0}, pi(1, 6, 1)}, {{1}, PiPoly(q(1, 24))}}));
  CHECK(volume({1, 1}, table) == lpoly(1, {{{0}, pi(1, 12, 1)}, {{1}, PiPoly(q(1, 48))}}));

  LPoly v04(4, pi(2, 1, 1));
  for (std::size_t i = 0; i < 4; ++i) {
    MultiIndex a(4);
    a[i] = 1;
    v04.add_term(a, PiPoly(q(1, 2)));
  }
  CHECK(volume({0, 4}, table) == v04);
  CHECK(volume({0, 5}, table) == v05_golden());
  CHECK(volume({1, 2}, table) == v12_golden());
  CHECK(volume({2, 1}, table) == v21_golden());
  CHECK(true_volume({2, 1}, table) == v21_golden());
}

// V_{g,n}(0) = <exp(2 pi^2 kappa_1)>_{g,n}, evaluated offline from psi-class
// numbers (DVV recursion) and the kappa_1 pushforward formula.
TEST_CASE("constant terms agree with kappa_1 integrals") {
  VolumeTable table;
  build_up_to(table, 6, {4, Kernel::gather});
  CHECK(constant_term(table.at({0, 6})) == pi(244, 3, 3));
  CHECK(constant_term(table.at({0, 7})) == pi(2758, 3, 4));
  CHECK(constant_term(table.at({1, 3})) == pi(14, 9, 3));
  CHECK(constant_term(table.at({1, 4})) == pi(529, 36, 4));
  CHECK(constant_term(table.at({2, 2})) == pi(787, 480, 5));
  CHECK(constant_term(volume({3, 1}, table)) == pi(9292841, 4082400, 7));
}

TEST_CASE("gather kernel agrees with the serial reference") {
  VolumeTable ref;
  VolumeTable gat;
  build_up_to(ref, 6, {1, Kernel::reference});
  build_up_to(gat, 6, {1, Kernel::gather});
  REQUIRE(ref.size() == gat.size());
  for (const auto& [s, v] : ref.entries()) {
    CAPTURE(s.key());
    CHECK(gat.at(s) == v);
  }
}

TEST_CASE("depth-first and breadth-first evaluation agree") {
  VolumeTable dfs;
  VolumeTable bfs;
  const Signature targets[] = {{3, 1}, {1, 5}, {0, 9}};
  for (Signature s : targets) volume(s, dfs, Kernel::reference);
  build(bfs, targets, {4, Kernel::gather});
  for (Signature s : targets) CHECK(dfs.at(s) == bfs.at(s));
  CHECK(dfs.size() == bfs.size());
}

TEST_CASE("thread count does not change results") {
  VolumeTable one;
  VolumeTable many;
  build_up_to(one, 6, {1, Kernel::gather});
  build_up_to(many, 6, {8, Kernel::gather});
  CHECK(one.entries() == many.entries());
}

TEST_CASE("dependencies") {
  const auto deps21 = dependencies({2, 1});
  CHECK(std::find(deps21.begin(), deps21.end(), Signature{1, 2}) != deps21.end());
  CHECK(std::find(deps21.begin(), deps21.end(), Signature{1, 1}) != deps21.end());
  const Signature target[] = {{2, 1}};
  const auto closure = dependency_closure(target);
  CHECK(closure.front() == Signature{0, 3});
  CHECK(closure.back() == Signature{2, 1});
  for (std::size_t i = 1; i < closure.size(); ++i) CHECK(closure[i - 1].dim() <= closure[i].dim());
  const Signature unstable[] = {{0, 2}};
  CHECK_THROWS_AS(dependency_closure(unstable), std::invalid_argument);
  const Signature closed[] = {{2, 0}};
  CHECK_THROWS_AS(dependency_closure(closed), std::invalid_argument);

  const auto up1 = signatures_up_to(1);
  REQUIRE(up1.size() == 3);
  CHECK(up1[0] == Signature{0, 3});
  CHECK(up1[1] == Signature{0, 4});
  CHECK(up1[2] == Signature{1, 1});
  CHECK(signatures_up_to(6).size() == 16);
}

TEST_CASE("volume_coefficient needs its inputs") {
  VolumeTable table;
  CHECK_THROWS_AS(volume_coefficient({0, 4}, MultiIndex(4), table), DependencyFault);
  CHECK_THROWS_AS(table.at({0, 4}), DependencyFault);
  volume({0, 4}, table);
  CHECK(volume_coefficient({0, 5}, MultiIndex(5), table) == pi(10, 1, 2));
}

TEST_CASE("table validates inserts") {
  VolumeTable table;
  table.insert({0, 3}, base_volume({0, 3}));
  table.insert({0, 3}, base_volume({0, 3}));
  CHECK(table.size() == 1);
  CHECK_THROWS_AS(table.insert({0, 3}, LPoly(3, PiPoly(2))), InvariantViolation);
  // asymmetric
  CHECK_THROWS_AS(check_volume_invariants({0, 4}, lpoly(4, {{{0, 0, 0, 0}, pi(2, 1, 1)}, {{1, 0, 0, 0}, PiPoly(1)}})),
                  InvariantViolation);
  // wrong pi weight
  CHECK_THROWS_AS(check_volume_invariants({1, 1}, lpoly(1, {{{0}, PiPoly(1)}})), InvariantViolation);
  // negative coefficient
  CHECK_THROWS_AS(check_volume_invariants({1, 1}, lpoly(1, {{{0}, pi(-1, 1, 1)}})), InvariantViolation);
  // degree above 3g-3+n
  CHECK_THROWS_AS(check_volume_invariants({1, 1}, lpoly(1, {{{2}, PiPoly(1)}})), InvariantViolation);
  // mixed pi powers inside one coefficient
  CHECK_THROWS_AS(check_volume_invariants({1, 1}, lpoly(1, {{{0}, pi(1, 1, 1) + PiPoly(1)}})), InvariantViolation);
  CHECK_THROWS_AS(check_volume_invariants({0, 2}, LPoly(2, PiPoly(1))), InvariantViolation);
  CHECK_THROWS_AS(check_volume_invariants({0, 3}, LPoly(2, PiPoly(1))), InvariantViolation);
}

TEST_CASE("volume rejects signatures outside the recursion") {
  VolumeTable table;
  CHECK_THROWS_AS(volume({0, 2}, table), std::invalid_argument);
  CHECK_THROWS_AS(volume({3, 0}, table), std::invalid_argument);
}

TEST_CASE("structural invariants hold for every computed volume") {
  VolumeTable table;
  build_up_to(table, 7, {4, Kernel::gather});
  for (const auto& [s, v] : table.entries()) {
    CAPTURE(s.key());
    CHECK_NOTHROW(check_volume_invariants(s, v));
    CHECK(v.degree() == s.dim());
  }
}
