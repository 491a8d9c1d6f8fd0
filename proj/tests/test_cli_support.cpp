#include <filesystem>
#include <random>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "rauzy/cache.hpp"
#include "rauzy/cli_support.hpp"
#include "rauzy/forms.hpp"
#include "rauzy/verify.hpp"

using namespace rauzy;

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(Errc::ParseError) == 2);
  CHECK(cli::exit_code(Errc::NotIrreducible) == 3);
  CHECK(cli::exit_code(Errc::InvalidPermutation) == 3);
  CHECK(cli::exit_code(Errc::SizeExceeded) == 4);
  CHECK(cli::exit_code(Errc::BoundsExceeded) == 4);
  CHECK(cli::exit_code(Errc::CapExceeded) == 4);
}

TEST_CASE("input validation") {
  CHECK_NOTHROW(cli::require_valid(reps::tau_d(6)));
  try {
    cli::require_valid(Permutation::parse("1 2 3 4\n2 3 4 1"));
    FAIL("degenerate input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidPermutation);
    CHECK(std::string(e.what()).find("condition 1") != std::string::npos);
  }
  CHECK_THROWS_AS(cli::require_valid(Permutation::parse("1 2\n1 2")), Error);
}

TEST_CASE("target parsing") {
  const Permutation p = reps::tau_minimal(3);  // top row 0 1 2 3 5 6
  IntVector want(6, 0);
  want[p.letter("2")] = -1;
  want[p.letter("3")] = 1;
  CHECK(cli::parse_target(p, "-e2+e3") == want);
  CHECK(cli::parse_target(p, " - e2 + e3 ") == want);
  CHECK(cli::parse_target(p, "(0,0,-1,1,0,0)") == want);
  IntVector w2(6, 0);
  w2[p.letter("5")] = 2;
  w2[p.letter("0")] = -3;
  CHECK(cli::parse_target(p, "2*e5-3e0") == w2);
  CHECK_THROWS_AS(cli::parse_target(p, "e4"), Error);
  CHECK_THROWS_AS(cli::parse_target(p, "(1,2)"), Error);
  CHECK_THROWS_AS(cli::parse_target(p, "x+e2"), Error);
  CHECK_THROWS_AS(cli::parse_target(p, ""), Error);
  CHECK(cli::bit_tuple(p, 1ULL << p.letter("6")) == "(0,0,0,0,0,1)");
}

TEST_CASE("sha256 and the cache") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto dir = std::filesystem::temp_directory_path() / ("rauzy-cache-test-" + std::to_string(std::random_device{}()));
  {
    Cache c(dir);
    const std::string k = Cache::key("closure", "1 2\n2 1\n");
    CHECK(k.size() == 64);
    CHECK(k != Cache::key("class", "1 2\n2 1\n"));
    CHECK_FALSE(c.get(k).has_value());
    c.put(k, R"({"size":1})");
    REQUIRE(c.get(k).has_value());
    CHECK(*c.get(k) == R"({"size":1})");
    c.put(k, R"({"size":2})");
    CHECK(*c.get(k) == R"({"size":2})");
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("claim reports") {
  ClaimReport r;
  r.id = 4;
  r.claim = "x";
  r.topic = "orthogonal-generation";
  r.status = ClaimStatus::Verified;
  r.artifacts.emplace_back("digest", sha256_hex("1"));
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["criterion"] == 4);
  CHECK(j["paper_ref"] == "orthogonal-generation");
  CHECK(j["status"] == "verified");
  CHECK(j["artifacts"]["digest"].get<std::string>().size() == 64);
  CHECK(r.passed());
  r.status = ClaimStatus::Failed;
  CHECK_FALSE(r.passed());
}

TEST_CASE("suites") {
  CHECK(suite_criteria("appendix") == std::vector<int>{1});
  CHECK(suite_criteria("congruence") == std::vector<int>{7, 8, 9});
  CHECK(suite_criteria("all").size() == static_cast<std::size_t>(kCriterionCount));
  std::vector<int> seen;
  for (const std::string& s : suite_names())
    if (s != "all")
      for (int id : suite_criteria(s)) seen.push_back(id);
  std::sort(seen.begin(), seen.end());
  CHECK(seen == suite_criteria("all"));
  CHECK_THROWS_AS(suite_criteria("nope"), Error);
  CHECK_THROWS_AS(run_criterion(0, {}), Error);
}

TEST_CASE("case table of the two families") {
  CHECK(expected_component(Family::Tau, 6) == "H(4)^odd");
  CHECK(expected_component(Family::Tau, 7) == "H(2,2)^odd");
  CHECK(expected_component(Family::Tau, 9) == "H(3,3)^nonhyp");
  CHECK(expected_component(Family::Tau, 10) == "H(8)^even");
  CHECK(expected_component(Family::Tau, 11) == "H(4,4)^even");
  CHECK(expected_component(Family::Sigma, 8) == "H(6)^even");
  CHECK(expected_component(Family::Sigma, 11) == "H(4,4)^odd");
  CHECK(expected_component(Family::Sigma, 12) == "H(10)^odd");
}

TEST_CASE("published lists are well formed") {
  CHECK(appendix_tau6().size() == 36);
  CHECK(appendix_sigma8().size() == 120);
  CHECK(std::set<std::string>(appendix_sigma8().begin(), appendix_sigma8().end()).size() == 120);
}

TEST_CASE("claimed memberships reduce to non-singular vectors") {
  const auto claims = membership_claims();
  CHECK(claims.size() > 100);
  for (const MembershipClaim& m : claims) {
    const Permutation p = reps::by_name(m.rep);
    std::uint64_t bits = 0;
    for (int a = 0; a < p.size(); ++a)
      if (m.target[a] % 2 != 0) bits |= 1ULL << a;
    CHECK_MESSAGE(quadratic_form(p)(bits), m.rep << " " << m.label);
  }
  for (const QuadrupleClaim& q : quadruple_claims())
    CHECK_MESSAGE(normalize_square_quadruple(q.q, omega(reps::by_name(q.rep))).has_value(), q.rep << " " << q.label);
  const Permutation p = reps::tau_minimal(3);
  const IntVector v = letter_vector(p, {{"2", -1}, {"3", 1}, {"3", 1}});
  CHECK(v[p.letter("2")] == -1);
  CHECK(v[p.letter("3")] == 2);
}
