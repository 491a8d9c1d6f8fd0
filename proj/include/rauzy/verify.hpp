#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rauzy/forms.hpp"
#include "rauzy/intmat.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/transvect.hpp"

namespace rauzy {

enum class ClaimStatus { Verified, VerifiedWithCitedOracle, Failed };
const char* claim_status_name(ClaimStatus s);

struct ClaimReport {
  int id = 0;
  std::string claim;
  std::string topic;  // short tag naming the statement being checked
  ClaimStatus status = ClaimStatus::Failed;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> artifacts;  // name -> sha256
  bool budget_exceeded = false;
  double seconds = 0;

  bool passed() const { return status != ClaimStatus::Failed; }
  std::string to_json() const;
};

struct VerifyOptions {
  std::size_t max_class_size = 1'000'000;
  int coeff_bound = 4;
  std::size_t step_bound = 1'000'000;
  std::size_t group_cap = 100'000'000;
  std::uint64_t seed = 20240607;
};

constexpr int kCriterionCount = 11;

// One acceptance criterion, 1..kCriterionCount. Errors inside a check are
// turned into a failed report.
ClaimReport run_criterion(int id, const VerifyOptions& opts);

// Suites: appendix, counts, orthogonal, congruence, odd-d, extension, all.
const std::vector<std::string>& suite_names();
std::vector<int> suite_criteria(const std::string& suite);  // OutOfRange for unknown names
std::vector<ClaimReport> run_suite(const std::string& suite, const VerifyOptions& opts);

// Published non-singular vector lists, as bit tuples over letters 1..d.
const std::vector<std::string>& appendix_tau6();
const std::vector<std::string>& appendix_sigma8();

// Expected component name of the tau/sigma families by d mod 8.
std::string expected_component(Family family, int d);

/// A vector claimed to lie in the Omega-closure of the unit vectors.
struct MembershipClaim {
  std::string rep;  // representative, as accepted by reps::by_name
  std::string label;
  IntVector target;
};

/// Four vectors whose absolute pairings follow the square-lemma pattern,
/// each claimed to lie in the closure.
struct QuadrupleClaim {
  std::string rep;
  std::string label;
  Quadruple q;
};

std::vector<MembershipClaim> membership_claims();
std::vector<QuadrupleClaim> quadruple_claims();

// Sum of coefficient * e_name over the given letter names.
IntVector letter_vector(const Permutation& p, const std::vector<std::pair<std::string, std::int64_t>>& terms);

}  // namespace rauzy
