#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "rauzy/error.hpp"
#include "rauzy/perm.hpp"

using namespace rauzy;

namespace {

using Rows = std::pair<std::vector<std::string>, std::vector<std::string>>;

Rows rows_of(const Permutation& p) {
  Rows r;
  for (Letter a : p.top()) r.first.push_back(p.name(a));
  for (Letter a : p.bottom()) r.second.push_back(p.name(a));
  return r;
}

// Textbook moves on name rows: the loser is moved right after the winner on
// the loser's row.
Rows naive_step(Rows r, bool top) {
  auto& win_row = top ? r.first : r.second;
  auto& lose_row = top ? r.second : r.first;
  const std::string winner = win_row.back(), loser = lose_row.back();
  lose_row.pop_back();
  auto it = std::find(lose_row.begin(), lose_row.end(), winner);
  lose_row.insert(it + 1, loser);
  return r;
}

std::size_t naive_class_size(const Permutation& p) {
  std::set<Rows> seen{rows_of(p)};
  std::deque<Rows> todo{rows_of(p)};
  while (!todo.empty()) {
    Rows r = todo.front();
    todo.pop_front();
    for (bool top : {true, false}) {
      Rows s = naive_step(r, top);
      if (seen.insert(s).second) todo.push_back(s);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("parsing") {
  Permutation p = Permutation::parse("A B C D\nD C B A\n");
  CHECK(p.size() == 4);
  CHECK(p.letter("C") == 2);
  CHECK(p.to_text() == "A B C D\nD C B A\n");
  CHECK_THROWS_AS(Permutation::parse("A B C\nC B\n"), Error);
  CHECK_THROWS_AS(Permutation::parse("A B C\nC B D\n"), Error);
  CHECK_THROWS_AS(Permutation::parse("A B C\n"), Error);
  try {
    Permutation::parse("A B\nB A\nA B\n");
    FAIL("accepted three rows");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("irreducibility and degeneracy") {
  CHECK(is_irreducible(Permutation::parse("1 2 3 4\n4 3 2 1")));
  CHECK_FALSE(is_irreducible(Permutation::parse("1 2 3 4\n2 1 4 3")));
  CHECK_FALSE(is_irreducible(Permutation::parse("1 2 3\n1 3 2")));
  const Permutation deg = Permutation::parse("1 2 3 4\n2 3 4 1");
  CHECK(is_irreducible(deg));
  REQUIRE(degeneracy_witness(deg).has_value());
  CHECK(degeneracy_witness(deg)->condition == 1);
  CHECK_FALSE(is_degenerate(reps::tau_d(6)));
  CHECK_FALSE(is_degenerate(reps::hyperelliptic(5)));
  CHECK(is_standard(reps::tau_d(6)));
}

TEST_CASE("Rauzy moves agree with a naive implementation, property") {
  std::mt19937_64 rng(11);
  for (const std::string rep : {"tau-d:6", "sigma-d:9", "tau-min:4", "hyp:6"}) {
    Permutation p = reps::by_name(rep);
    for (int t = 0; t < 200; ++t) {
      const bool top = rng() & 1;
      Arrow a = rauzy_step(p, top ? ArrowKind::Top : ArrowKind::Bottom);
      CHECK(rows_of(a.target) == naive_step(rows_of(p), top));
      Arrow back = rauzy_step(a.target, top ? ArrowKind::InverseTop : ArrowKind::InverseBottom);
      CHECK(back.target == p);
      CHECK(back.winner == a.winner);
      CHECK(back.loser == a.loser);
      p = a.target;
    }
  }
  // tau^(6), top move: 6 beats 1.
  Arrow a = rauzy_step(reps::tau_d(6), ArrowKind::Top);
  CHECK(a.target.to_text() == "1 2 3 4 5 6\n6 1 3 2 5 4\n");
}

TEST_CASE("Rauzy class sizes") {
  // (ABCD/DCBA) has 7 vertices; hyperelliptic classes have 2^{d-1} - 1.
  CHECK(rauzy_class(Permutation::parse("A B C D\nD C B A")).size() == 7);
  for (int d = 3; d <= 8; ++d) CHECK(rauzy_class(reps::hyperelliptic(d)).size() == (1u << (d - 1)) - 1);
  CHECK(rauzy_class(reps::tau_d(6)).size() == naive_class_size(reps::tau_d(6)));
  CHECK(rauzy_class(reps::tau_d(6)).size() == 134);
  CHECK(rauzy_class(reps::tau_d(7)).size() == naive_class_size(reps::tau_d(7)));
  CHECK_THROWS_AS(rauzy_class(reps::tau_d(7), 100), Error);
}

TEST_CASE("walks and paths") {
  std::mt19937_64 rng(2);
  const RauzyClass c = rauzy_class(reps::tau_d(6));
  for (int t = 0; t < 100; ++t) {
    const Permutation& p = c.vertices()[rng() % c.size()];
    const Permutation& q = c.vertices()[rng() % c.size()];
    Walk f = forward_path(c, p, q);
    CHECK(f.start == p);
    CHECK(f.end() == q);
    for (const Arrow& a : f.arrows) CHECK((a.kind == ArrowKind::Top || a.kind == ArrowKind::Bottom));
    Walk w = random_cycle(c, p, 1 + t % 10, rng);
    CHECK(w.is_cycle());
    Walk inv = w.inverse();
    CHECK(inv.start == w.end());
    CHECK(inv.end() == w.start);
    CHECK(inv.arrows.size() == w.arrows.size());
  }
  Walk w{reps::tau_d(6), {}};
  CHECK_THROWS_AS(w.append(rauzy_step(reps::tau_d(7), ArrowKind::Top)), Error);
}

TEST_CASE("stratum profiles") {
  auto prof = [](const std::string& rep) { return stratum_profile(reps::by_name(rep)); };
  CHECK(prof("tau-d:6") == StratumProfile{{4}, 3});
  CHECK(prof("tau-d:7") == StratumProfile{{2, 2}, 3});
  CHECK(prof("sigma-d:8") == StratumProfile{{6}, 4});
  CHECK(prof("tau-d:9") == StratumProfile{{3, 3}, 4});
  CHECK(prof("tau-min:5") == StratumProfile{{8}, 5});
  CHECK(prof("hyp:4") == StratumProfile{{2}, 2});
  CHECK(prof("hyp:5") == StratumProfile{{1, 1}, 2});
  CHECK(prof("tau-even:4") == StratumProfile{{2, 2, 2}, 4});
  CHECK(stratum_name(prof("tau-d:7")) == "H(2,2)");
  // Profile is constant on a class and agrees with the orbit count when s is a bijection.
  const RauzyClass c7 = rauzy_class(reps::tau_d(7));
  for (const Permutation& v : c7.vertices()) {
    CHECK(stratum_profile(v) == StratumProfile{{2, 2}, 3});
    if (orbit_map(v).is_bijection()) CHECK(stratum_profile_from_orbits(v) == stratum_profile(v));
  }
}

TEST_CASE("simple extension and reduction") {
  const Permutation t6 = reps::tau_d(6);
  for (int m11 : {1, 2}) {
    const Permutation q = split_singularity(t6, m11);
    CHECK(q.size() == 7);
    CHECK(is_irreducible(q));
    CHECK(stratum_profile(q).genus == 3);
    CHECK(stratum_profile(q).orders == std::vector<int>{std::min(m11, 4 - m11), std::max(m11, 4 - m11)});
    CHECK(simple_reduction(q, 6) == t6);
  }
  CHECK_THROWS_AS(split_singularity(t6, 0), Error);
  CHECK_THROWS_AS(split_singularity(t6, 4), Error);
  // Extended walks end where the extension of the reduced endpoint is.
  std::mt19937_64 rng(4);
  const Permutation q = split_singularity(t6, 1);
  const Insertion ins{q.top()[q.top_pos(6) + 1], q.bottom()[q.bottom_pos(6) + 1], "x6"};
  for (int t = 0; t < 50; ++t) {
    Walk w = random_walk(t6, 1 + t % 8, rng, true);
    Walk e = extension_map_on_walk(w, ins);
    CHECK(e.start == simple_extension(t6, ins));
    CHECK(simple_reduction(e.end(), 6) == w.end());
  }
}

TEST_CASE("named representatives") {
  CHECK(reps::tau_minimal(3).to_text() == "0 1 2 3 5 6\n3 2 6 5 1 0\n");
  CHECK(reps::by_name("tau-d:6") == reps::tau_d(6));
  CHECK_THROWS_AS(reps::by_name("tau-d"), Error);
  CHECK_THROWS_AS(reps::by_name("nope:3"), Error);
  CHECK_THROWS_AS(reps::tau_d(5), Error);
  CHECK_THROWS_AS(reps::sigma_minimal(3), Error);
}
