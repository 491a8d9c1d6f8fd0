#include "rauzy/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::Overflow, "integer subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer multiplication");
  return r;
}

IntVector unit_vector(int dim, int index) {
  if (index < 0 || index >= dim) fail(Errc::OutOfRange, "unit vector index");
  IntVector e(dim, 0);
  e[index] = 1;
  return e;
}

static void check_same_dim(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector dimensions differ");
}

IntVector add(const IntVector& a, const IntVector& b) {
  check_same_dim(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  check_same_dim(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVector scale(std::int64_t c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
  return r;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  check_same_dim(a, b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_zero(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

IntVector sign_normalized(const IntVector& a) {
  for (std::int64_t x : a) {
    if (x > 0) return a;
    if (x < 0) return scale(-1, a);
  }
  return a;
}

std::string to_string(const IntVector& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_)
      fail(Errc::DimensionMismatch, "ragged rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(int i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                   data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

IntVector IntMatrix::col(int j) const {
  IntVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t IntMatrix::max_abs() const {
  std::int64_t m = 0;
  for (std::int64_t x : data_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) os << rauzy::to_string(row(i)) << '\n';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "matrix product");
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) r(i, j) = checked_add(r(i, j), checked_mul(x, b(k, j)));
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "matrix sum");
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = checked_add(a(i, j), b(i, j));
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "matrix difference");
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = checked_sub(a(i, j), b(i, j));
  return r;
}

IntVector operator*(const IntVector& u, const IntMatrix& m) {
  if (static_cast<int>(u.size()) != m.rows()) fail(Errc::DimensionMismatch, "row action");
  IntVector r(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r[j] = checked_add(r[j], checked_mul(u[i], m(i, j)));
  }
  return r;
}

IntVector apply_column(const IntMatrix& m, const IntVector& x) {
  if (static_cast<int>(x.size()) != m.cols()) fail(Errc::DimensionMismatch, "column action");
  IntVector r(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && x[j] != 0) r[i] = checked_add(r[i], checked_mul(m(i, j), x[j]));
  return r;
}

namespace {

// Integer row echelon form by Euclidean row operations. The same operations
// are applied to `u`, so u_out * original == h_out.
struct Echelon {
  std::vector<IntVector> h;
  std::vector<IntVector> u;
  std::vector<int> pivots;  // pivot column of row i, for i < rank
};

void row_axpy(IntVector& dst, std::int64_t q, const IntVector& src) {
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (src[k] != 0) dst[k] = checked_sub(dst[k], checked_mul(q, src[k]));
}

Echelon echelon(std::vector<IntVector> rows) {
  Echelon e;
  const int n = static_cast<int>(rows.size());
  const int m = n ? static_cast<int>(rows[0].size()) : 0;
  e.u.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) e.u[i][i] = 1;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < n; ++i)
        if (rows[i][c] != 0 &&
            (best < 0 || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      std::swap(e.u[r], e.u[best]);
      bool clean = true;
      for (int i = r + 1; i < n; ++i) {
        if (rows[i][c] == 0) continue;
        std::int64_t q = rows[i][c] / rows[r][c];
        row_axpy(rows[i], q, rows[r]);
        row_axpy(e.u[i], q, e.u[r]);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] != 0) {
      e.pivots.push_back(c);
      ++r;
    }
  }
  e.h = std::move(rows);
  return e;
}

std::vector<IntVector> rows_of(const IntMatrix& m) {
  std::vector<IntVector> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  const int n = m.rows();
  Echelon e = echelon(rows_of(m));
  if (static_cast<int>(e.pivots.size()) != n) fail(Errc::OutOfRange, "matrix is singular");
  for (int i = n - 1; i >= 0; --i) {
    std::int64_t p = e.h[i][i];
    if (p != 1 && p != -1) fail(Errc::OutOfRange, "matrix is not unimodular");
    if (p == -1) {
      e.h[i] = scale(-1, e.h[i]);
      e.u[i] = scale(-1, e.u[i]);
    }
    for (int k = 0; k < i; ++k) {
      std::int64_t q = e.h[k][i];
      if (q == 0) continue;
      row_axpy(e.h[k], q, e.h[i]);
      row_axpy(e.u[k], q, e.u[i]);
    }
  }
  return IntMatrix::from_rows(e.u);
}

int rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(echelon(rows).pivots.size());
}

int rank(const IntMatrix& m) { return rank(rows_of(m)); }

std::vector<IntVector> left_kernel_basis(const IntMatrix& m) {
  Echelon e = echelon(rows_of(m));
  std::vector<IntVector> basis;
  for (std::size_t i = e.pivots.size(); i < e.u.size(); ++i)
    basis.push_back(sign_normalized(e.u[i]));
  return basis;
}

std::vector<int> independent_rows(const IntMatrix& m) {
  std::vector<int> chosen;
  std::vector<IntVector> rows;
  for (int i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
    if (rank(rows) > static_cast<int>(chosen.size()))
      chosen.push_back(i);
    else
      rows.pop_back();
  }
  return chosen;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return {};
  Echelon e = echelon(vectors);
  return std::vector<IntVector>(e.h.begin(), e.h.begin() + static_cast<std::ptrdiff_t>(e.pivots.size()));
}

std::optional<IntVector> integer_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  for (const auto& b : basis)
    if (b.size() != v.size()) fail(Errc::DimensionMismatch, "coordinates");
  Echelon e = echelon(basis);
  if (e.pivots.size() != basis.size()) fail(Errc::OutOfRange, "basis is dependent");
  IntVector rest = v;
  IntVector c(basis.size(), 0);  // coefficients on the echelon rows
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    int p = e.pivots[i];
    if (rest[p] % e.h[i][p] != 0) return std::nullopt;
    c[i] = rest[p] / e.h[i][p];
    row_axpy(rest, c[i], e.h[i]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return c * IntMatrix::from_rows(e.u);
}

}  // namespace rauzy
