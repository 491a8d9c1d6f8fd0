#include <random>

#include "doctest.h"
#include "rauzy/error.hpp"
#include "rauzy/rvg.hpp"
#include "rauzy/transvect.hpp"

using namespace rauzy;

TEST_CASE("KZ matrices of single arrows") {
  const Permutation p = reps::tau_d(6);
  for (ArrowKind k : {ArrowKind::Top, ArrowKind::Bottom}) {
    const Arrow a = rauzy_step(p, k);
    IntMatrix want = IntMatrix::identity(6);
    want(a.loser, a.winner) = 1;
    CHECK(kz_arrow(a) == want);
    const Arrow back = rauzy_step(a.target, k == ArrowKind::Top ? ArrowKind::InverseTop : ArrowKind::InverseBottom);
    CHECK(kz_arrow(back) * kz_arrow(a) == IntMatrix::identity(6));
    // Omega at the source is carried to Omega at the target.
    const IntMatrix b = kz_arrow(a);
    CHECK(b * omega(p).omega * b.transpose() == omega(a.target).omega);
  }
}

TEST_CASE("cycle matrices are symplectic and preserve Q, property") {
  std::mt19937_64 rng(31);
  for (const std::string rep : {"tau-d:6", "tau-d:7", "hyp:5"}) {
    const RauzyClass c = rauzy_class(reps::by_name(rep));
    for (int t = 0; t < 300; ++t) {
      const Permutation& p = c.vertices()[rng() % c.size()];
      const Walk w = random_cycle(c, p, 1 + t % 12, rng);
      const IntMatrix b = kz_walk(w);
      CHECK(is_symplectic(b, omega(p)));
      CHECK(preserves_q(reduce_mod2(b), quadratic_form(p)));
      CHECK(kz_walk(w.inverse()) * b == IntMatrix::identity(p.size()));
    }
  }
}

TEST_CASE("pure cycles and Dehn twists") {
  for (const std::string rep : {"tau-d:6", "tau-d:7"}) {
    const Permutation p = reps::by_name(rep);
    const RauzyClass c = rauzy_class(p);
    const IntersectionForm f = omega(p);
    for (Letter a = 0; a < p.size(); ++a) {
      const DehnTwist t = dehn_twist_cycle(p, a, c);
      CHECK(t.walk.is_cycle());
      CHECK(t.walk.start == p);
      CHECK(kz_walk(t.walk) == transvection_matrix(unit_vector(p.size(), a), f, t.sign));
    }
  }
  CHECK_THROWS_AS(pure_cycle(reps::tau_d(6), 2), Error);
}

TEST_CASE("mod-2 closure and group at d = 6 and 7") {
  const RvMod2Report r6 = rv_mod2_check(reps::tau_d(6));
  CHECK(r6.closure_size == 36);
  CHECK(r6.group_order == 51840);
  CHECK(r6.ok());
  const RvMod2Report r7 = rv_mod2_check(reps::tau_d(7), 0);
  CHECK(r7.closure_size == 72);
  CHECK(r7.ok());
}

TEST_CASE("decomposition at odd d") {
  const int d = 7;
  const Permutation p = reps::tau_d(d);
  const IntersectionForm f = omega(p);
  std::vector<IntVector> complement;
  for (int a = 0; a < d - 1; ++a) complement.push_back(unit_vector(d, a));
  IntVector sharp(d);
  for (int a = 0; a < d; ++a) sharp[a] = a % 2 ? -1 : 1;
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    IntMatrix s = IntMatrix::identity(d);
    for (int k = 0; k < 4; ++k) s = s * transvection_matrix(unit_vector(d, rng() % d), f, rng() % 2 ? 1 : -1);
    const Decomposition dec = decompose(s, f, complement);
    CHECK(reconstruct(dec) == s);
    CHECK(dec.s1.rows() == d - 1);
    CHECK(dec.s0.cols() == 1);
  }
  // Shear: u -> u + <u, v> e_sharp.
  const IntVector v = add(unit_vector(d, 0), scale(2, unit_vector(d, 3)));
  const IntMatrix sv = shear(v, sharp, f);
  for (int i = 0; i < d; ++i) {
    const IntVector u = unit_vector(d, i);
    CHECK(u * sv == add(u, scale(f(u, v), sharp)));
  }
  // A matrix moving the kernel is rejected.
  IntMatrix bad = IntMatrix::identity(d);
  bad(d - 1, 0) = 1;
  CHECK_THROWS_AS(decompose(bad, f, complement), Error);
}

TEST_CASE("structure of O(Q) at d = 7") {
  const OqStructureReport r = oq_structure_check(7, 1, 200);
  CHECK_FALSE(r.regular);
  CHECK(r.s1_group_order == 51840);
  CHECK(r.restricted_orthogonal_order == 51840);
  CHECK(r.v_image_size == 28);
  CHECK(r.cocycle_ok);
  CHECK(r.ok());
}

TEST_CASE("extension embedding and the H subspace") {
  const Permutation t6 = reps::tau_d(6);
  std::mt19937_64 rng(51);
  for (int m11 : {1, 2}) {
    const Permutation q = split_singularity(t6, m11);
    const Insertion ins = insertion_of(t6, q);
    CHECK(simple_extension(t6, ins) == q);
    const EmbeddingReport e = embedding_check(t6, ins, 200, rng);
    CHECK(e.failures == 0);
    CHECK(e.ok());
  }
  const HSubspace h = h_subspace(reps::tau_d(7));
  CHECK(h.rank == 6);
  CHECK(h.genus == 3);
  std::mt19937_64 rng2(52);
  const RauzyClass c = rauzy_class(reps::tau_d(7));
  for (int t = 0; t < 50; ++t) {
    const Walk w = random_cycle(c, reps::tau_d(7), 1 + t % 9, rng2);
    CHECK(preserves_h(h, kz_walk(w)));
  }
}
