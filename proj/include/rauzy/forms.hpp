#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rauzy/f2.hpp"
#include "rauzy/intmat.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

/// Antisymmetric intersection matrix of a permutation, indexed by letter id:
/// +1 when a is before b on top and after b on the bottom, -1 in the reversed
/// situation, 0 otherwise.
struct IntersectionForm {
  IntMatrix omega;
  std::vector<int> top_order;  // top position of each letter

  int dim() const { return omega.rows(); }
  std::int64_t operator()(const IntVector& u, const IntVector& v) const;
  IntVector apply(const IntVector& u) const { return u * omega; }  // row vector u * Omega
};

IntersectionForm omega(const Permutation& p);
QuadraticFormF2 quadratic_form(const Permutation& p);

// Z-basis of ker Omega, each vector sign-normalized.
std::vector<IntVector> kernel_basis(const IntersectionForm& f);
// Letters whose unit vectors span a complement of ker Omega on which Omega is
// nondegenerate (greedy from the first letter).
std::vector<int> complement_letters(const IntersectionForm& f);

bool q_eval(const QuadraticFormF2& q, const F2Vector& u);

struct NSCounts {
  std::uint64_t ns0 = 0;  // Q = 1, even number of ones
  std::uint64_t ns1 = 0;  // Q = 1, odd number of ones
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::uint64_t ns() const { return ns0 + ns1; }
  std::uint64_t s() const { return s0 + s1; }
  friend bool operator==(const NSCounts&, const NSCounts&) = default;
};

// Exhaustive count over F2^d, split by the parity of the number of ones.
NSCounts ns_counts_brute(const QuadraticFormF2& q);

enum class Family { Tau, Sigma };
NSCounts ns_counts_recurrence(Family family, int d);
NSCounts ns_counts_closed_form(Family family, int d);

// 1 if |NS| > |S| for Q restricted to span{e_a : a in the complement letters};
// Tie when the counts agree.
int arf(const QuadraticFormF2& q);
// Same majority rule on the span of an explicit list of independent vectors.
int arf_on_span(const QuadraticFormF2& q, const std::vector<std::uint64_t>& basis);
// sum Q(a_i) Q(b_i) over a symplectic basis of the same complement.
int arf_symplectic(const QuadraticFormF2& q);
// Same over the span of explicit vectors on which the form is nondegenerate.
int arf_symplectic_on(const QuadraticFormF2& q, std::vector<std::uint64_t> basis);

enum class Hyperelliptic { Yes, No, Unknown };

struct ComponentLabel {
  StratumProfile profile;
  std::optional<int> spin;  // Arf invariant when every order is even
  Hyperelliptic hyperelliptic = Hyperelliptic::Unknown;
  std::string name;
  std::string to_json() const;
};

// Whether p lies in the Rauzy class of (top row / top row reversed). Classes
// with more than 2^{d-1} - 1 vertices are not hyperelliptic, so the search is
// capped there as well as at max_class_size.
Hyperelliptic hyperelliptic_test(const Permutation& p, std::size_t max_class_size);

ComponentLabel component_label(const Permutation& p, std::size_t max_class_size = 1'000'000);

}  // namespace rauzy
