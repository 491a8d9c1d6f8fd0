#include <random>

#include "doctest.h"
#include "rauzy/error.hpp"
#include "rauzy/transvect.hpp"

using namespace rauzy;

namespace {

IntersectionForm standard_form(int g) {
  IntMatrix j(2 * g, 2 * g);
  std::vector<int> order(2 * g);
  for (int i = 0; i < g; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  for (int i = 0; i < 2 * g; ++i) order[i] = i;
  return IntersectionForm{j, order};
}

// u -> u + k <v, u> v, applied to each unit vector.
IntMatrix naive_power(const IntVector& v, const IntersectionForm& f, int k) {
  const int d = f.dim();
  IntMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const IntVector u = unit_vector(d, i);
    const IntVector img = add(u, scale(k * f(v, u), v));
    for (int j = 0; j < d; ++j) m(i, j) = img[j];
  }
  return m;
}

std::vector<IntVector> units(int d) {
  std::vector<IntVector> s;
  for (int a = 0; a < d; ++a) s.push_back(unit_vector(d, a));
  return s;
}

// v + e_0 + e_1.
IntVector plus_first_pair(const Permutation& p, IntVector v) {
  v[p.letter("0")] += 1;
  v[p.letter("1")] += 1;
  return v;
}

}  // namespace

TEST_CASE("transvections match their definition, property") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-2, 2);
  const IntersectionForm f = omega(reps::tau_d(7));
  for (int t = 0; t < 100; ++t) {
    IntVector v(7);
    for (auto& x : v) x = c(rng);
    const int k = c(rng);
    const IntMatrix m = transvection_matrix(v, f, k);
    CHECK(m == naive_power(v, f, k));
    CHECK(is_symplectic(m, f));
    CHECK(m * transvection_matrix(v, f, -k) == IntMatrix::identity(7));
  }
}

TEST_CASE("braid relations") {
  const IntersectionForm f = standard_form(2);
  const IntVector a = unit_vector(4, 0), b = unit_vector(4, 1);
  CHECK(f(a, b) == 1);
  CHECK(check_braid(a, b, f));
  CHECK_THROWS_AS(check_braid(b, a, f), Error);
  CHECK_THROWS_AS(check_braid(a, unit_vector(4, 2), f), Error);
  // The identities themselves.
  const IntMatrix ta = transvection_matrix(a, f), tb = transvection_matrix(b, f);
  const IntMatrix tbi = transvection_matrix(b, f, -1);
  CHECK(compose(tbi, compose(ta, tb)) == transvection_matrix(add(a, b), f));
}

TEST_CASE("square lemma") {
  const IntersectionForm f = standard_form(2);
  const IntVector a1 = unit_vector(4, 0), b1 = unit_vector(4, 1), a2 = unit_vector(4, 2), b2 = unit_vector(4, 3);
  const Quadruple q{a1, add(a1, a2), add(a1, b2), b1};
  CHECK(pairing_matrix({q.v1, q.v2, q.v3, q.v4}, f) == square_lemma_pattern());
  CHECK(check_square_lemma(q, f));
  // Signs and order do not matter for the unsigned version.
  const Quadruple mixed{scale(-1, q.v1), q.v3, scale(-1, q.v2), q.v4};
  CHECK(check_square_lemma_unsigned(mixed, f));
  CHECK_THROWS_AS(check_square_lemma(mixed, f), Error);
  CHECK_FALSE(normalize_square_quadruple(Quadruple{a1, a2, b2, b1}, f).has_value());
}

TEST_CASE("closure certificates") {
  const Permutation p = reps::tau_minimal(3);
  const IntersectionForm f = omega(p);
  // -e2 + e3 from the unit vectors.
  IntVector target(p.size(), 0);
  target[p.letter("2")] = -1;
  target[p.letter("3")] = 1;
  auto cert = omega_closure_search(units(p.size()), f, target);
  REQUIRE(cert.has_value());
  CHECK(cert->steps.size() == 1);
  CHECK(verify_certificate(*cert, f));
  const std::string text = cert->to_text();
  CHECK(text.rfind("omega-closure-certificate 1\n", 0) == 0);
  const ClosureCertificate back = ClosureCertificate::parse(text);
  CHECK(back.to_text() == text);
  CHECK(verify_certificate(back, f));

  ClosureCertificate bad = back;
  bad.steps[0].result = scale(2, bad.steps[0].result);
  CHECK_FALSE(verify_certificate(bad, f));
  bad = back;
  bad.target = scale(3, unit_vector(p.size(), 0));
  CHECK_FALSE(verify_certificate(bad, f));
  try {
    ClosureCertificate::parse("omega-closure-certificate 1\nstep (1,0)\n");
    FAIL("parsed a broken certificate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }

  // Even vectors are never reached: 2 e_0 has Q-reduction 0.
  IntVector twice(p.size(), 0);
  twice[0] = 2;
  CHECK_FALSE(omega_closure_search(units(p.size()), f, twice, SearchBounds{2, 1'000'000}).has_value());
  // A two-step target under a budget of a handful of states.
  IntVector far = plus_first_pair(p, target);
  try {
    omega_closure_search(units(p.size()), f, far, SearchBounds{4, 3});
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundsExceeded);
  }
}

TEST_CASE("level-two generators and the mod-4 kernel") {
  for (int g : {1, 2}) {
    const IntersectionForm f = standard_form(g);
    std::vector<SymplecticPair> basis;
    for (int i = 0; i < g; ++i) basis.emplace_back(unit_vector(2 * g, 2 * i), unit_vector(2 * g, 2 * i + 1));
    CHECK(is_symplectic_basis(basis, f));
    const auto gens = level_two_generators(basis, f);
    const auto r = mod4_kernel_check(gens, f);
    // 2^{g(2g+1)}
    CHECK(r.kernel_order == (1ULL << (g * (2 * g + 1))));
    CHECK(r.equal());
  }
  // Dropping generators loses the kernel.
  const IntersectionForm f = standard_form(1);
  const auto gens = level_two_generators({{unit_vector(2, 0), unit_vector(2, 1)}}, f);
  CHECK_FALSE(mod4_kernel_check({gens[0]}, f).equal());
  CHECK_THROWS_AS(level_two_generators({{unit_vector(2, 1), unit_vector(2, 0)}}, f), Error);
}
