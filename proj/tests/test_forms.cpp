#include <algorithm>
#include <random>

#include "doctest.h"
#include "rauzy/error.hpp"
#include "rauzy/forms.hpp"

using namespace rauzy;

namespace {

std::int64_t naive_omega(const Permutation& p, Letter a, Letter b) {
  const bool top = p.top_pos(a) < p.top_pos(b), bottom = p.bottom_pos(a) < p.bottom_pos(b);
  if (top && !bottom) return 1;
  if (!top && bottom) return -1;
  return 0;
}

bool naive_q(const Permutation& p, std::uint64_t u) {
  int s = 0;
  for (int a = 0; a < p.size(); ++a) {
    if (!((u >> a) & 1)) continue;
    ++s;
    for (int b = 0; b < p.size(); ++b)
      if (((u >> b) & 1) && p.top_pos(a) < p.top_pos(b) && naive_omega(p, a, b) != 0) ++s;
  }
  return s % 2;
}

Permutation random_irreducible(int d, std::mt19937_64& rng) {
  std::vector<Letter> top(d), bottom(d);
  for (int i = 0; i < d; ++i) top[i] = bottom[i] = i;
  for (;;) {
    std::shuffle(bottom.begin(), bottom.end(), rng);
    Permutation p = Permutation::from_ids(top, bottom);
    if (is_irreducible(p)) return p;
  }
}

}  // namespace

TEST_CASE("intersection form against the definition, property") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Permutation p = random_irreducible(3 + t % 8, rng);
    const IntersectionForm f = omega(p);
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        CHECK(f.omega(a, b) == naive_omega(p, a, b));
        CHECK(f.omega(a, b) == -f.omega(b, a));
      }
    const QuadraticFormF2 q = quadratic_form(p);
    for (std::uint64_t u = 0; u < (1ULL << p.size()); u += 1 + u % 5) {
      CHECK(q(u) == naive_q(p, u));
      // Q polarizes Omega mod 2.
      const std::uint64_t v = rng() & ((1ULL << p.size()) - 1);
      CHECK((q(u ^ v) ^ q(u) ^ q(v)) == q.pairing(u, v));
    }
  }
}

TEST_CASE("kernel of Omega") {
  // e_sharp = (1,-1,1,...,1) spans the kernel for odd d.
  for (int d : {7, 9, 11}) {
    const IntersectionForm f = omega(reps::tau_d(d));
    auto ker = kernel_basis(f);
    REQUIRE(ker.size() == 1);
    IntVector sharp(d);
    for (int a = 0; a < d; ++a) sharp[a] = a % 2 ? -1 : 1;
    CHECK(ker[0] == sharp);
    CHECK(complement_letters(f).size() == static_cast<std::size_t>(d - 1));
  }
  CHECK(kernel_basis(omega(reps::tau_d(8))).empty());
  CHECK(kernel_basis(omega(reps::tau_even_zeros(4))).size() == 2);
}

TEST_CASE("non-singular counts") {
  // Base cases of the recurrences.
  CHECK(ns_counts_brute(quadratic_form(reps::tau_d(6))) == NSCounts{16, 20, 16, 12});
  CHECK(ns_counts_brute(quadratic_form(reps::sigma_d(8))) == NSCounts{56, 64, 72, 64});
  for (int d = 6; d <= 16; ++d) {
    const NSCounts c = ns_counts_brute(quadratic_form(reps::tau_d(d)));
    CHECK(c.ns() + c.s() == (1ULL << d));
    CHECK(c == ns_counts_recurrence(Family::Tau, d));
    CHECK(c == ns_counts_closed_form(Family::Tau, d));
  }
  for (int d = 8; d <= 16; ++d) {
    CHECK(ns_counts_brute(quadratic_form(reps::sigma_d(d))) == ns_counts_recurrence(Family::Sigma, d));
    CHECK(ns_counts_recurrence(Family::Sigma, d) == ns_counts_closed_form(Family::Sigma, d));
  }
}

TEST_CASE("Arf invariant") {
  CHECK(arf(quadratic_form(reps::tau_d(6))) == 1);
  CHECK(arf(quadratic_form(reps::sigma_d(8))) == 0);
  CHECK(arf(quadratic_form(reps::tau_minimal(4))) == 1);
  CHECK(arf(quadratic_form(reps::sigma_minimal(4))) == 0);
  // Majority rule and symplectic-basis sum agree, property.
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    const Permutation p = random_irreducible(4 + t % 7, rng);
    const QuadraticFormF2 q = quadratic_form(p);
    CHECK(arf(q) == arf_symplectic(q));
  }
}

TEST_CASE("component labels") {
  auto name = [](const std::string& rep) { return component_label(reps::by_name(rep)).name; };
  CHECK(name("tau-d:6") == "H(4)^odd");
  CHECK(name("sigma-d:8") == "H(6)^even");
  CHECK(name("tau-d:7") == "H(2,2)^odd");
  CHECK(name("tau-d:9") == "H(3,3)^nonhyp");
  CHECK(name("hyp:6") == "H(4)^hyp");
  CHECK(name("hyp:7") == "H(2,2)^hyp");
  CHECK(name("hyp:4") == "H(2)");
  CHECK(name("tau-min:5") == "H(8)^odd");
  CHECK(name("sigma-min:5") == "H(8)^even");
  CHECK(name("tau-even:4") == "H(2,2,2)^odd");
  const ComponentLabel l = component_label(reps::tau_d(6));
  CHECK(l.to_json() == R"({"genus":3,"hyperelliptic":false,"name":"H(4)^odd","profile":[4],"spin":"odd"})");
  // Too small a budget leaves hyperellipticity open.
  CHECK(component_label(reps::tau_d(6), 10).hyperelliptic == Hyperelliptic::Unknown);
  CHECK_THROWS_AS(component_label(Permutation::parse("1 2 3\n1 3 2")), Error);
}
