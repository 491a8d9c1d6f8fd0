#include <random>
#include <set>

#include "doctest.h"
#include "rauzy/f2.hpp"

using namespace rauzy;

namespace {

// Standard symplectic form on F2^{2g}: pairs (2i, 2i+1).
F2Matrix standard_omega(int g) {
  F2Matrix m(2 * g);
  for (int i = 0; i < g; ++i) {
    m.set(2 * i, 2 * i + 1, true);
    m.set(2 * i + 1, 2 * i, true);
  }
  return m;
}

QuadraticFormF2 standard_q(int g, std::uint64_t linear) {
  std::vector<int> order(2 * g);
  for (int i = 0; i < 2 * g; ++i) order[i] = i;
  return QuadraticFormF2(standard_omega(g), order, linear);
}

}  // namespace

TEST_CASE("F2 matrices") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 8;
    F2Matrix m(n);
    for (int i = 0; i < n; ++i) m.set_row(i, rng());
    if (!m.invertible()) continue;
    CHECK(m * m.inverse() == F2Matrix::identity(n));
    const std::uint64_t u = rng() & dim_mask(n);
    CHECK(m.inverse().apply(m.apply(u)) == u);
  }
  F2Matrix z(3);
  CHECK(z.rank() == 0);
  CHECK(f2_kernel(z).size() == 3);
  CHECK(f2_rank({0b011, 0b101, 0b110}) == 2);
}

TEST_CASE("symplectic group orders") {
  CHECK(sp2g_f2_order(1) == 6);
  CHECK(sp2g_f2_order(2) == 720);
  CHECK(sp2g_f2_order(3) == 1451520);
  // Transvections generate Sp(2g, 2).
  for (int g : {1, 2}) {
    auto all = all_symplectic_transvections(standard_omega(g));
    CHECK(group_closure(all, 2 * g).size() == sp2g_f2_order(g));
  }
}

TEST_CASE("orthogonal groups in dimension 2 and 4") {
  // Arf 0: x0 x1; Arf 1: x0 x1 + x0 + x1.
  CHECK(enumerate_orthogonal_group(standard_q(1, 0)).size() == 2);
  CHECK(enumerate_orthogonal_group(standard_q(1, 0b11)).size() == 6);
  // O+(4,2) = 72, O-(4,2) = 120.
  CHECK(enumerate_orthogonal_group(standard_q(2, 0)).size() == 72);
  CHECK(enumerate_orthogonal_group(standard_q(2, 0b11)).size() == 120);
  // Index = number of forms with the same Arf invariant: 2^{g-1}(2^g +- 1).
  auto sp = all_symplectic_transvections(standard_omega(2));
  CHECK(form_orbit_index(standard_q(2, 0), sp) == 10);
  CHECK(form_orbit_index(standard_q(2, 0b11), sp) == 6);
}

TEST_CASE("orthogonal transvections preserve Q, property") {
  const QuadraticFormF2 q = standard_q(3, 0b010101);
  int used = 0;
  for (std::uint64_t v = 1; v < 64; ++v) {
    if (!q(v)) continue;
    ++used;
    const F2Matrix t = orthogonal_transvection(v, q);
    CHECK(preserves_q(t, q));
    CHECK(is_symplectic_mod2(t, q.omega()));
    CHECK(t * t == F2Matrix::identity(6));
    for (std::uint64_t u = 0; u < 64; ++u) CHECK(q(t.apply(u)) == q(u));
  }
  CHECK(used == 28);  // Arf 0 in dimension 6
  CHECK_THROWS(orthogonal_transvection(0, q));
}

TEST_CASE("Q-closure against a naive fixpoint") {
  const QuadraticFormF2 q = standard_q(2, 0b1111);
  std::vector<std::uint64_t> seeds;
  for (int a = 0; a < 4; ++a) seeds.push_back(1ULL << a);
  std::set<std::uint64_t> s(seeds.begin(), seeds.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto v : std::set<std::uint64_t>(s))
      for (auto w : std::set<std::uint64_t>(s))
        if (q(v ^ w) && s.insert(v ^ w).second) grew = true;
  }
  auto c = q_closure(seeds, q);
  CHECK(std::set<std::uint64_t>(c.begin(), c.end()) == s);
  CHECK(std::is_sorted(c.begin(), c.end()));
  auto ns = nonsingular_vectors(q);
  CHECK(ns.size() == 6);  // two Arf-1 planes: Arf 0, 2^{g-1}(2^g - 1)
}

TEST_CASE("pulled back forms") {
  const QuadraticFormF2 q = standard_q(2, 0b0011);
  std::mt19937_64 rng(9);
  auto sp = all_symplectic_transvections(q.omega());
  for (int t = 0; t < 50; ++t) {
    const F2Matrix m = sp[rng() % sp.size()] * sp[rng() % sp.size()];
    const QuadraticFormF2 r = q.pulled_back(m);
    for (std::uint64_t u = 0; u < 16; ++u) CHECK(r(u) == q(m.apply(u)));
  }
}

TEST_CASE("subgroup packing") {
  F2Matrix m = F2Matrix::identity(5);
  m.set(0, 3, true);
  CHECK(SubgroupEnumeration::unpack(SubgroupEnumeration::pack(m), 5) == m);
}
