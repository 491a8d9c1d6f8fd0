#pragma once

#include <string>
#include <string_view>

#include "rauzy/error.hpp"
#include "rauzy/intmat.hpp"
#include "rauzy/perm.hpp"

namespace rauzy::cli {

enum Exit { kPass = 0, kClaimFailed = 1, kParse = 2, kInvalid = 3, kBudget = 4 };

int exit_code(Errc code);

// Irreducible and nondegenerate, or an InvalidPermutation / NotIrreducible
// error naming the failed condition.
void require_valid(const Permutation& p);

// "(0,-1,1,0,0,0)" in top-row order, or "-e2+e3", "2*e5 - e6", "e0 + 2e1"
// over letter names.
IntVector parse_target(const Permutation& p, std::string_view text);

// Bit tuple of a mod-2 vector in top-row order.
std::string bit_tuple(const Permutation& p, std::uint64_t bits);

}  // namespace rauzy::cli
