#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace rauzy {

constexpr int kMaxF2Dim = 64;

/// Vector over F2 of dimension at most 64; bit i is the coordinate of letter i.
struct F2Vector {
  std::uint64_t bits = 0;
  int dim = 0;

  F2Vector() = default;
  F2Vector(std::uint64_t b, int d);
  static F2Vector unit(int dim, int index);

  bool get(int i) const { return (bits >> i) & 1U; }
  int weight() const;

  friend F2Vector operator+(F2Vector a, F2Vector b);
  friend bool operator==(const F2Vector& a, const F2Vector& b) = default;
  friend bool operator<(const F2Vector& a, const F2Vector& b) { return a.bits < b.bits; }
};

std::uint64_t dim_mask(int dim);
inline bool parity(std::uint64_t x) { return __builtin_parityll(x); }
std::string to_string(const F2Vector& v);

/// Square matrix over F2 acting on row vectors.
class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(int dim);
  static F2Matrix identity(int dim);
  static F2Matrix from_rows(const std::vector<std::uint64_t>& rows, int dim);

  int dim() const { return dim_; }
  std::uint64_t row(int i) const { return rows_[i]; }
  void set_row(int i, std::uint64_t r) { rows_[i] = r & dim_mask(dim_); }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool v);
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  std::uint64_t apply(std::uint64_t u) const;  // u * M
  F2Vector apply(const F2Vector& u) const;
  F2Matrix transpose() const;
  int rank() const;
  bool invertible() const { return rank() == dim_; }
  F2Matrix inverse() const;

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  friend bool operator==(const F2Matrix& a, const F2Matrix& b) = default;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Basis of the radical {u : u * M = 0} of a symmetric matrix.
std::vector<std::uint64_t> f2_kernel(const F2Matrix& m);
// Indices of a maximal set of independent rows, greedy from the top.
std::vector<int> f2_independent_rows(const F2Matrix& m);
int f2_rank(const std::vector<std::uint64_t>& vectors);

/// Quadratic form over F2 polarizing a symmetric zero-diagonal matrix:
///   Q(u) = sum_{order(a) < order(b)} u_a W_ab u_b + sum_a c_a u_a.
/// For forms coming from a permutation, `order` is the top position of each
/// letter and the linear part c is all ones.
class QuadraticFormF2 {
 public:
  QuadraticFormF2() = default;
  QuadraticFormF2(F2Matrix omega, std::vector<int> order, std::uint64_t linear);

  int dim() const { return omega_.dim(); }
  const F2Matrix& omega() const { return omega_; }
  const std::vector<int>& ordering() const { return order_; }
  std::uint64_t linear() const { return linear_; }

  bool operator()(std::uint64_t u) const;
  bool operator()(const F2Vector& u) const { return (*this)(u.bits); }
  bool pairing(std::uint64_t u, std::uint64_t v) const;
  bool nondegenerate() const { return omega_.invertible(); }

  QuadraticFormF2 with_linear(std::uint64_t linear) const;
  // x -> Q(x * M), again a form polarizing omega when M is symplectic.
  QuadraticFormF2 pulled_back(const F2Matrix& m) const;

 private:
  F2Matrix omega_;
  std::vector<int> order_;
  std::uint64_t linear_ = 0;
  std::vector<std::uint64_t> upper_;  // letters after a in `order` pairing with a
};

bool is_symplectic_mod2(const F2Matrix& m, const F2Matrix& omega);
bool preserves_q(const F2Matrix& m, const QuadraticFormF2& q);

// x -> x + <x, v> v; requires Q(v) = 1.
F2Matrix orthogonal_transvection(std::uint64_t v, const QuadraticFormF2& q);
// x -> x + <x, v> v with no condition on v.
F2Matrix symplectic_transvection_mod2(std::uint64_t v, const F2Matrix& omega);
// Transvections along every nonzero vector of the space.
std::vector<F2Matrix> all_symplectic_transvections(const F2Matrix& omega);

// Least Q-closed set containing the seeds: closed under v + w whenever
// Q(v + w) = 1. Seeds must be non-singular. Sorted by bit value.
std::vector<std::uint64_t> q_closure(const std::vector<std::uint64_t>& seeds,
                                     const QuadraticFormF2& q);
// Fixpoint of S -> S u {v + s : v in S, s a seed, Q(v + s) = 1}.
std::vector<std::uint64_t> q_closure_seed_steps(const std::vector<std::uint64_t>& seeds,
                                                const QuadraticFormF2& q);

std::vector<std::uint64_t> nonsingular_vectors(const QuadraticFormF2& q);

/// Matrix group over F2 enumerated by breadth-first closure. Dimensions up to
/// 8 are packed into one 64-bit key per element.
class SubgroupEnumeration {
 public:
  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const F2Matrix& m) const;
  F2Matrix element(std::size_t i) const;
  const std::vector<std::uint64_t>& packed() const { return elements_; }
  // Order-independent 64-bit digest of the element set.
  std::uint64_t digest() const;

  static std::uint64_t pack(const F2Matrix& m);
  static F2Matrix unpack(std::uint64_t key, int dim);

 private:
  friend SubgroupEnumeration group_closure(const std::vector<F2Matrix>&, int, std::size_t);
  friend SubgroupEnumeration enumerate_orthogonal_group(const QuadraticFormF2&, std::size_t);
  int dim_ = 0;
  std::vector<std::uint64_t> elements_;
  std::unordered_set<std::uint64_t> index_;
};

SubgroupEnumeration group_closure(const std::vector<F2Matrix>& generators, int dim,
                                  std::size_t cap = 100'000'000);

// Direct enumeration of O(Q) by choosing images of the basis one at a time.
SubgroupEnumeration enumerate_orthogonal_group(const QuadraticFormF2& q,
                                               std::size_t cap = 100'000'000);

// Size of the orbit of q under Q -> Q o M for M ranging over the group
// generated by `sp_generators` (all symplectic). Requires nondegenerate Q.
std::size_t form_orbit_index(const QuadraticFormF2& q, const std::vector<F2Matrix>& sp_generators);

// 2^{g^2} prod_{i=1..g} (4^i - 1).
std::uint64_t sp2g_f2_order(int g);

}  // namespace rauzy
