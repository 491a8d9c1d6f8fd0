#include <limits>
#include <random>

#include "doctest.h"
#include "rauzy/error.hpp"
#include "rauzy/intmat.hpp"

using namespace rauzy;

namespace {

IntMatrix random_unimodular(int n, std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<int> idx(0, n - 1), coin(0, 1);
  IntMatrix m = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = coin(rng) ? 1 : -1;
    m = m * e;
  }
  return m;
}

}  // namespace

TEST_CASE("checked arithmetic reports overflow") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 6) == -24);
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), Error);
  try {
    checked_sub(-big - 1, 1);
    FAIL("no overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}

TEST_CASE("vector helpers") {
  IntVector a{1, -2, 3}, b{0, 5, -1};
  CHECK(add(a, b) == IntVector{1, 3, 2});
  CHECK(sub(a, b) == IntVector{1, -7, 4});
  CHECK(scale(-2, a) == IntVector{-2, 4, -6});
  CHECK(dot(a, b) == -13);
  CHECK(sign_normalized(IntVector{0, -1, 2}) == IntVector{0, 1, -2});
  CHECK(is_zero(IntVector{0, 0}));
  CHECK(unit_vector(3, 1) == IntVector{0, 1, 0});
}

TEST_CASE("row and column actions") {
  IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(IntVector{1, 1} * m == IntVector{4, 6});
  CHECK(apply_column(m, {1, 1}) == IntVector{3, 7});
  CHECK(m.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(m * IntMatrix::identity(2) == m);
}

TEST_CASE("unimodular inverse, property") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 6;
    IntMatrix m = random_unimodular(n, rng, 12);
    IntMatrix inv = inverse_unimodular(m);
    CHECK(m * inv == IntMatrix::identity(n));
    CHECK(inv * m == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("rank and left kernel, property") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 4;
    // Last row is a combination of two others, so rank <= n - 1.
    std::vector<IntVector> rows(n, IntVector(n));
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = c(rng);
    rows[n - 1] = add(scale(2, rows[0]), scale(-1, rows[1]));
    IntMatrix m = IntMatrix::from_rows(rows);
    const int r = rank(m);
    CHECK(r <= n - 1);
    auto ker = left_kernel_basis(m);
    CHECK(static_cast<int>(ker.size()) == n - r);
    for (const IntVector& u : ker) CHECK(is_zero(u * m));
  }
}

TEST_CASE("lattice basis and integer coordinates") {
  std::vector<IntVector> gens{{2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {0, 0, 3}};
  auto basis = lattice_basis(gens);
  CHECK(basis.size() == 3);
  for (const IntVector& g : gens) CHECK(integer_coordinates(basis, g).has_value());
  CHECK_FALSE(integer_coordinates(basis, {1, 0, 0}).has_value());
  CHECK_FALSE(integer_coordinates(basis, {0, 0, 1}).has_value());
}
