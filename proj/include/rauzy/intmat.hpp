#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rauzy {

using IntVector = std::vector<std::int64_t>;

// Checked 64-bit arithmetic; throws Errc::Overflow instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntVector unit_vector(int dim, int index);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(std::int64_t c, const IntVector& a);
std::int64_t dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& a);
// Multiplies by -1 if needed so the first nonzero entry is positive.
IntVector sign_normalized(const IntVector& a);
std::string to_string(const IntVector& a);

/// Dense row-major integer matrix. Matrices act on row vectors: u -> u * M.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  IntVector row(int i) const;
  IntVector col(int j) const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::int64_t max_abs() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntVector& u, const IntMatrix& m);  // row action
IntVector apply_column(const IntMatrix& m, const IntVector& x);  // m * x

// Inverse of a unimodular matrix; OutOfRange if the matrix is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Rank over the rationals.
int rank(const IntMatrix& m);
int rank(const std::vector<IntVector>& rows);

// A Z-basis of {u : u * m = 0}, each vector sign-normalized.
std::vector<IntVector> left_kernel_basis(const IntMatrix& m);

// Indices of a maximal set of rationally independent rows, chosen greedily
// from the top.
std::vector<int> independent_rows(const IntMatrix& m);

// A Z-basis of the lattice spanned by the given vectors.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors);

// Coefficients c with sum c_i * basis_i == v, if they exist over the
// integers. The basis must be rationally independent.
std::optional<IntVector> integer_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v);

}  // namespace rauzy
