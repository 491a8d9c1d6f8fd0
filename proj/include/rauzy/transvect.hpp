#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rauzy/forms.hpp"
#include "rauzy/intmat.hpp"

namespace rauzy {

// Matrix of T_v^power, where T_v(u) = u + <v, u> v, acting on row vectors.
IntMatrix transvection_matrix(const IntVector& v, const IntersectionForm& f, int power = 1);

// M Omega M^T == Omega.
bool is_symplectic(const IntMatrix& m, const IntersectionForm& f);

// Matrix of the composite map a o b (b applied first).
inline IntMatrix compose(const IntMatrix& a, const IntMatrix& b) { return b * a; }

// Conjugation identities for <v, w> = 1 (BadPairing otherwise):
//   T_w^-1 T_v T_w = T_v T_w T_v^-1 = T_{v+w},  T_w T_v T_w^-1 = T_v^-1 T_w T_v = T_{v-w}.
bool check_braid(const IntVector& v, const IntVector& w, const IntersectionForm& f);

struct Quadruple {
  IntVector v1, v2, v3, v4;
};

// The signed pairing pattern required by check_square_lemma.
const IntMatrix& square_lemma_pattern();
IntMatrix pairing_matrix(const std::vector<IntVector>& vs, const IntersectionForm& f);

// For the displayed pairing pattern (WrongPairingPattern otherwise), checks
//   T_{v1}^-2 T_{v2} T_{2v1+v2} = T_{v1+v2}^2,  T_{v1}^-2 T_{v3} T_{2v1-v3} = T_{v1-v3}^2
// and the two identities with v2 and v3 swapped, plus the pairing chains
// putting 2v1+v2 and 2v1-v3 in the closure generated by the four vectors.
bool check_square_lemma(const Quadruple& q, const IntersectionForm& f);
// Same after fixing signs and order: accepts any quadruple whose pairing
// pattern agrees with the displayed one up to sign.
std::optional<Quadruple> normalize_square_quadruple(const Quadruple& q, const IntersectionForm& f);
bool check_square_lemma_unsigned(const Quadruple& q, const IntersectionForm& f);

/// Derivation of a vector in the Omega-closure of a seed set. Each step pairs
/// a known vector (seed or earlier result, up to sign) with a partner of the
/// same kind, with pairing +-1, and records +-(known +- partner).
struct CertificateStep {
  IntVector known;
  IntVector partner;
  std::int64_t pairing;
  IntVector result;
};

struct ClosureCertificate {
  std::vector<IntVector> seeds;
  IntVector target;
  std::vector<CertificateStep> steps;

  std::string to_text() const;
  static ClosureCertificate parse(const std::string& text);
};

struct SearchBounds {
  int coeff_bound = 4;
  std::size_t step_bound = 1'000'000;  // visited states
};

// Bidirectional breadth-first search over vectors reachable by adding or
// subtracting a partner with pairing +-1. Partners are the seeds plus the
// targets of the given lemma certificates, whose steps are prepended.
// Returns nullopt when the bounded space is exhausted; BoundsExceeded when the
// state budget runs out first.
std::optional<ClosureCertificate> omega_closure_search(
    const std::vector<IntVector>& seeds, const IntersectionForm& f, const IntVector& target,
    const SearchBounds& bounds = {}, const std::vector<ClosureCertificate>& lemmas = {});

bool verify_certificate(const ClosureCertificate& c, const IntersectionForm& f);

using SymplecticPair = std::pair<IntVector, IntVector>;

// <a_i, b_i> = 1 and every other pairing zero.
bool is_symplectic_basis(const std::vector<SymplecticPair>& basis, const IntersectionForm& f);

// T_b^2 for each basis vector and T_{b+b'}^2 for each pair of distinct ones.
std::vector<IntMatrix> level_two_generators(const std::vector<SymplecticPair>& basis,
                                            const IntersectionForm& f);

struct Mod4KernelResult {
  std::uint64_t generated_order = 0;
  std::uint64_t kernel_order = 0;  // 2^{g(2g+1)}
  bool equal() const { return generated_order == kernel_order; }
};

// Enumerates the subgroup of GL(2g, Z/4) generated by the reductions of the
// given matrices (which must be the identity mod 2 and symplectic mod 4 for a
// unimodular form) and compares its order with that of the kernel of
// Sp(2g, Z/4) -> Sp(2g, Z/2).
Mod4KernelResult mod4_kernel_check(const std::vector<IntMatrix>& generators, const IntersectionForm& f,
                                   std::size_t cap = 100'000'000);

}  // namespace rauzy
