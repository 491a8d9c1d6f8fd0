#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rauzy/f2.hpp"
#include "rauzy/forms.hpp"
#include "rauzy/intmat.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

// Id + E_{loser,winner} for a forward arrow, Id - E_{loser,winner} for an inverse one.
IntMatrix kz_arrow(const Arrow& a);
// B_n ... B_1 for a walk with arrows B_1, ..., B_n.
IntMatrix kz_walk(const Walk& w);

F2Matrix reduce_mod2(const IntMatrix& m);

// Repeats the move that keeps `letter` as winner until p recurs. The letter
// must be last on the top or the bottom row of p.
Walk pure_cycle(const Permutation& p, Letter letter);

struct DehnTwist {
  Walk walk;  // gamma . gamma' . gamma^-1
  int sign;   // kz_walk(walk) == transvection_matrix(e_letter)^sign
};

// gamma: shortest forward walk from p to a vertex where `letter` is last on
// a row; gamma': the pure cycle there.
DehnTwist dehn_twist_cycle(const Permutation& p, Letter letter, const RauzyClass& c);

struct RvMod2Report {
  std::size_t closure_size = 0;
  std::size_t target_size = 0;  // |NS| for even d, |NS \ ker| for odd d
  bool closure_equal = false;
  bool group_enumerated = false;
  std::size_t group_order = 0;
  std::size_t orthogonal_order = 0;
  bool group_equal = false;
  bool ok() const { return closure_equal && (!group_enumerated || group_equal); }
};

// Q-closure of the unit vectors against NS(Q) (minus ker for degenerate forms);
// for d <= max_enum_dim also the generated group against a direct O(Q) enumeration.
RvMod2Report rv_mod2_check(const Permutation& p, int max_enum_dim = 6,
                           std::size_t group_cap = 100'000'000);

/// S restricted to a complement V of ker Omega, split as S|_V = S0 + S1 with
/// S1: V -> V and S0: V -> ker. Coordinates are taken in the given bases, so
/// u S = (u S1) + (u S0) with u S1 in V-coordinates and u S0 in
/// kernel coordinates.
struct Decomposition {
  std::vector<IntVector> complement;
  std::vector<IntVector> kernel;
  IntMatrix s1;  // |V| x |V|
  IntMatrix s0;  // |V| x |ker|
};

// KernelNotFixed when S moves a kernel vector; NotSymplectic when S1 does not
// preserve Omega restricted to V.
Decomposition decompose(const IntMatrix& s, const IntersectionForm& f,
                        const std::vector<IntVector>& complement);
IntMatrix reconstruct(const Decomposition& dec);

// The map u -> u + <u, v> e_sharp, built as T_{v - e_sharp} o T_v^-1.
IntMatrix shear(const IntVector& v, const IntVector& e_sharp, const IntersectionForm& f);

struct OqStructureReport {
  int d = 0;
  bool regular = false;            // Q(e_sharp) = 1
  std::size_t s1_group_order = 0;  // group generated by the S1 of the transvections
  std::size_t restricted_orthogonal_order = 0;
  int arf_restricted = -1;
  std::size_t v_image_size = 0;  // |{v_{S1}}| over Sp of the complement
  std::size_t v_image_expected = 0;
  bool cocycle_ok = false;
  bool s0_determined = false;  // S0 recovered from S1 and Q
  bool s1_injective = false;
  bool ok() const;
};

// Mod-2 structure of O(Q) for tau^(d), d odd in {7, 9, 11, ...}.
OqStructureReport oq_structure_check(int d, std::uint64_t seed = 1, int random_products = 1000,
                                     std::size_t group_cap = 100'000'000);

// Fresh letter of `extended` (the one with the largest id) and where it sits.
Insertion insertion_of(const Permutation& reduced, const Permutation& extended);

struct EmbeddingReport {
  int trials = 0;
  int failures = 0;
  bool arf_checked = false;
  bool arf_equal = false;
  bool ok() const { return failures == 0 && (!arf_checked || arf_equal); }
};

// Checks iota(u B_w^-1) = iota(u) B_{E(w)}^-1 for u in the unit complement of
// the reduced form and random forward walks w. GenusNotPreserved when the
// extension changes the genus.
EmbeddingReport embedding_check(const Permutation& reduced, const Insertion& ins, int trials,
                                std::mt19937_64& rng, int max_walk_length = 12);

struct HSubspace {
  std::vector<IntVector> basis;  // Z-basis of the column space of Omega
  int rank = 0;
  int genus = 0;
};

HSubspace h_subspace(const Permutation& p);
// Whether x -> B x maps the column lattice into itself.
bool preserves_h(const HSubspace& h, const IntMatrix& b);

}  // namespace rauzy
