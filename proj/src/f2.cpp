#include "rauzy/f2.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "rauzy/error.hpp"

namespace rauzy {

std::uint64_t dim_mask(int dim) {
  if (dim < 0 || dim > kMaxF2Dim) fail(Errc::DimensionTooLarge, "F2 dimension " + std::to_string(dim));
  return dim == 64 ? ~0ULL : ((1ULL << dim) - 1);
}

F2Vector::F2Vector(std::uint64_t b, int d) : bits(b), dim(d) {
  if (b & ~dim_mask(d)) fail(Errc::OutOfRange, "bits beyond dimension");
}

F2Vector F2Vector::unit(int dim, int index) {
  if (index < 0 || index >= dim) fail(Errc::OutOfRange, "unit index");
  return F2Vector(1ULL << index, dim);
}

int F2Vector::weight() const { return __builtin_popcountll(bits); }

F2Vector operator+(F2Vector a, F2Vector b) {
  if (a.dim != b.dim) fail(Errc::DimensionMismatch, "F2 vector sum");
  return F2Vector(a.bits ^ b.bits, a.dim);
}

std::string to_string(const F2Vector& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim; ++i) {
    if (i) s += ',';
    s += v.get(i) ? '1' : '0';
  }
  return s + ")";
}

F2Matrix::F2Matrix(int dim) : dim_(dim), rows_(dim, 0) { dim_mask(dim); }

F2Matrix F2Matrix::identity(int dim) {
  F2Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.rows_[i] = 1ULL << i;
  return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::uint64_t>& rows, int dim) {
  if (static_cast<int>(rows.size()) != dim) fail(Errc::DimensionMismatch, "row count");
  F2Matrix m(dim);
  for (int i = 0; i < dim; ++i) {
    if (rows[i] & ~dim_mask(dim)) fail(Errc::OutOfRange, "row bits beyond dimension");
    m.rows_[i] = rows[i];
  }
  return m;
}

void F2Matrix::set(int i, int j, bool v) {
  if (v)
    rows_[i] |= 1ULL << j;
  else
    rows_[i] &= ~(1ULL << j);
}

std::uint64_t F2Matrix::apply(std::uint64_t u) const {
  std::uint64_t r = 0;
  while (u) {
    int i = __builtin_ctzll(u);
    r ^= rows_[i];
    u &= u - 1;
  }
  return r;
}

F2Vector F2Matrix::apply(const F2Vector& u) const {
  if (u.dim != dim_) fail(Errc::DimensionMismatch, "F2 matrix action");
  return F2Vector(apply(u.bits), dim_);
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (get(i, j)) t.rows_[j] |= 1ULL << i;
  return t;
}

int f2_rank(const std::vector<std::uint64_t>& vectors) {
  std::array<std::uint64_t, 64> basis{};  // basis[b] has top bit b
  int r = 0;
  for (std::uint64_t v : vectors) {
    for (int b = 63; b >= 0 && v; --b) {
      if (!((v >> b) & 1U)) continue;
      if (!basis[b]) {
        basis[b] = v;
        ++r;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return r;
}

int F2Matrix::rank() const { return f2_rank(rows_); }

F2Matrix F2Matrix::inverse() const {
  std::vector<std::uint64_t> a = rows_;
  F2Matrix inv = identity(dim_);
  for (int c = 0; c < dim_; ++c) {
    int p = -1;
    for (int i = c; i < dim_; ++i)
      if ((a[i] >> c) & 1U) {
        p = i;
        break;
      }
    if (p < 0) fail(Errc::OutOfRange, "singular F2 matrix");
    std::swap(a[c], a[p]);
    std::swap(inv.rows_[c], inv.rows_[p]);
    for (int i = 0; i < dim_; ++i)
      if (i != c && ((a[i] >> c) & 1U)) {
        a[i] ^= a[c];
        inv.rows_[i] ^= inv.rows_[c];
      }
  }
  return inv;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.dim_ != b.dim_) fail(Errc::DimensionMismatch, "F2 matrix product");
  F2Matrix r(a.dim_);
  for (int i = 0; i < a.dim_; ++i) r.rows_[i] = b.apply(a.rows_[i]);
  return r;
}

std::vector<std::uint64_t> f2_kernel(const F2Matrix& m) {
  // Row reduce [M | I]; the identity part of zero rows spans the left kernel.
  const int n = m.dim();
  std::vector<std::uint64_t> a(m.rows());
  std::vector<std::uint64_t> u(n);
  for (int i = 0; i < n; ++i) u[i] = 1ULL << i;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if ((a[i] >> c) & 1U) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    std::swap(u[r], u[p]);
    for (int i = 0; i < n; ++i)
      if (i != r && ((a[i] >> c) & 1U)) {
        a[i] ^= a[r];
        u[i] ^= u[r];
      }
    ++r;
  }
  return std::vector<std::uint64_t>(u.begin() + r, u.end());
}

std::vector<int> f2_independent_rows(const F2Matrix& m) {
  std::vector<int> chosen;
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < m.dim(); ++i) {
    rows.push_back(m.row(i));
    if (f2_rank(rows) > static_cast<int>(chosen.size()))
      chosen.push_back(i);
    else
      rows.pop_back();
  }
  return chosen;
}

QuadraticFormF2::QuadraticFormF2(F2Matrix omega, std::vector<int> order, std::uint64_t linear)
    : omega_(std::move(omega)), order_(std::move(order)), linear_(linear) {
  const int n = omega_.dim();
  if (static_cast<int>(order_.size()) != n) fail(Errc::DimensionMismatch, "ordering size");
  if (linear_ & ~dim_mask(n)) fail(Errc::OutOfRange, "linear part beyond dimension");
  if (!(omega_ == omega_.transpose())) fail(Errc::DegenerateForm, "matrix is not symmetric");
  for (int i = 0; i < n; ++i)
    if (omega_.get(i, i)) fail(Errc::DegenerateForm, "nonzero diagonal");
  upper_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (order_[a] < order_[b] && omega_.get(a, b)) upper_[a] |= 1ULL << b;
}

bool QuadraticFormF2::operator()(std::uint64_t u) const {
  bool q = parity(u & linear_);
  std::uint64_t rest = u;
  while (rest) {
    int a = __builtin_ctzll(rest);
    q ^= parity(upper_[a] & u);
    rest &= rest - 1;
  }
  return q;
}

bool QuadraticFormF2::pairing(std::uint64_t u, std::uint64_t v) const {
  return parity(omega_.apply(u) & v);
}

QuadraticFormF2 QuadraticFormF2::with_linear(std::uint64_t linear) const {
  return QuadraticFormF2(omega_, order_, linear);
}

QuadraticFormF2 QuadraticFormF2::pulled_back(const F2Matrix& m) const {
  std::uint64_t c = 0;
  for (int a = 0; a < dim(); ++a)
    if ((*this)(m.row(a))) c |= 1ULL << a;
  return with_linear(c);
}

bool is_symplectic_mod2(const F2Matrix& m, const F2Matrix& omega) {
  if (m.dim() != omega.dim()) fail(Errc::DimensionMismatch, "symplectic check");
  return m * omega * m.transpose() == omega;
}

bool preserves_q(const F2Matrix& m, const QuadraticFormF2& q) {
  if (m.dim() != q.dim()) fail(Errc::DimensionMismatch, "orthogonality check");
  if (!is_symplectic_mod2(m, q.omega())) return false;
  // A symplectic map preserves Q iff it does so on a basis.
  for (int a = 0; a < q.dim(); ++a)
    if (q(m.row(a)) != q(1ULL << a)) return false;
  return true;
}

F2Matrix symplectic_transvection_mod2(std::uint64_t v, const F2Matrix& omega) {
  const int n = omega.dim();
  F2Matrix t = F2Matrix::identity(n);
  std::uint64_t wv = omega.apply(v);  // <e_i, v> = bit i of W v (W symmetric)
  for (int i = 0; i < n; ++i)
    if ((wv >> i) & 1U) t.set_row(i, t.row(i) ^ v);
  return t;
}

F2Matrix orthogonal_transvection(std::uint64_t v, const QuadraticFormF2& q) {
  if (!q(v)) fail(Errc::SingularVector, "orthogonal transvection needs Q(v) = 1");
  return symplectic_transvection_mod2(v, q.omega());
}

std::vector<F2Matrix> all_symplectic_transvections(const F2Matrix& omega) {
  if (omega.dim() > 20) fail(Errc::DimensionTooLarge, "too many transvections");
  std::vector<F2Matrix> out;
  for (std::uint64_t v = 1; v <= dim_mask(omega.dim()); ++v)
    out.push_back(symplectic_transvection_mod2(v, omega));
  return out;
}

std::vector<std::uint64_t> q_closure(const std::vector<std::uint64_t>& seeds,
                                     const QuadraticFormF2& q) {
  std::vector<std::uint64_t> list;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t s : seeds) {
    if (!q(s)) fail(Errc::SingularSeed, "seed " + to_string(F2Vector(s, q.dim())));
    if (seen.insert(s).second) list.push_back(s);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t s = list[i] ^ list[j];
      if (q(s) && seen.insert(s).second) list.push_back(s);
    }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<std::uint64_t> q_closure_seed_steps(const std::vector<std::uint64_t>& seeds,
                                                const QuadraticFormF2& q) {
  std::vector<std::uint64_t> list;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t s : seeds) {
    if (!q(s)) fail(Errc::SingularSeed, "seed " + to_string(F2Vector(s, q.dim())));
    if (seen.insert(s).second) list.push_back(s);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::uint64_t s : seeds) {
      std::uint64_t x = list[i] ^ s;
      if (q(x) && seen.insert(x).second) list.push_back(x);
    }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<std::uint64_t> nonsingular_vectors(const QuadraticFormF2& q) {
  if (q.dim() > 30) fail(Errc::DimensionTooLarge, "enumeration of 2^d vectors");
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 0; u <= dim_mask(q.dim()); ++u)
    if (q(u)) out.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------
// Packed group enumeration

namespace {

constexpr int kMaxPackedDim = 8;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Right multiplication by a fixed matrix, as a lookup table on packed rows.
struct RightMultiplier {
  int dim;
  std::array<std::uint8_t, 256> table{};

  RightMultiplier(const F2Matrix& g) : dim(g.dim()) {
    for (std::uint64_t x = 0; x < (1ULL << dim); ++x) table[x] = static_cast<std::uint8_t>(g.apply(x));
  }
  std::uint64_t operator()(std::uint64_t key) const {
    std::uint64_t r = 0;
    for (int i = 0; i < dim; ++i) r |= std::uint64_t{table[(key >> (8 * i)) & 0xFF]} << (8 * i);
    return r;
  }
};

}  // namespace

std::uint64_t SubgroupEnumeration::pack(const F2Matrix& m) {
  if (m.dim() > kMaxPackedDim) fail(Errc::DimensionTooLarge, "packing needs dim <= 8");
  std::uint64_t key = 0;
  for (int i = 0; i < m.dim(); ++i) key |= m.row(i) << (8 * i);
  return key;
}

F2Matrix SubgroupEnumeration::unpack(std::uint64_t key, int dim) {
  F2Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.set_row(i, (key >> (8 * i)) & 0xFF);
  return m;
}

bool SubgroupEnumeration::contains(const F2Matrix& m) const {
  return m.dim() == dim_ && index_.count(pack(m)) > 0;
}

F2Matrix SubgroupEnumeration::element(std::size_t i) const { return unpack(elements_.at(i), dim_); }

std::uint64_t SubgroupEnumeration::digest() const {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(dim_));
  for (std::uint64_t k : elements_) h += splitmix64(k);
  return h;
}

SubgroupEnumeration group_closure(const std::vector<F2Matrix>& generators, int dim,
                                  std::size_t cap) {
  if (dim > kMaxPackedDim) fail(Errc::DimensionTooLarge, "group closure needs dim <= 8");
  std::vector<RightMultiplier> mults;
  for (const F2Matrix& g : generators) {
    if (g.dim() != dim) fail(Errc::DimensionMismatch, "generator dimension");
    if (!g.invertible()) fail(Errc::OutOfRange, "generator is singular");
    mults.emplace_back(g);
    if (!(g * g == F2Matrix::identity(dim))) mults.emplace_back(g.inverse());
  }
  SubgroupEnumeration out;
  out.dim_ = dim;
  const std::uint64_t id = SubgroupEnumeration::pack(F2Matrix::identity(dim));
  out.elements_.push_back(id);
  out.index_.insert(id);
  for (std::size_t i = 0; i < out.elements_.size(); ++i) {
    for (const RightMultiplier& m : mults) {
      std::uint64_t next = m(out.elements_[i]);
      if (out.index_.insert(next).second) {
        out.elements_.push_back(next);
        if (out.elements_.size() > cap)
          fail(Errc::CapExceeded, "group closure exceeded " + std::to_string(cap));
      }
    }
  }
  return out;
}

SubgroupEnumeration enumerate_orthogonal_group(const QuadraticFormF2& q, std::size_t cap) {
  const int n = q.dim();
  if (n > kMaxPackedDim) fail(Errc::DimensionTooLarge, "orthogonal group needs dim <= 8");
  SubgroupEnumeration out;
  out.dim_ = n;
  std::vector<std::uint64_t> candidates[kMaxPackedDim];
  for (int i = 0; i < n; ++i)
    for (std::uint64_t x = 1; x < (1ULL << n); ++x)
      if (q(x) == q(1ULL << i)) candidates[i].push_back(x);
  std::vector<std::uint64_t> rows(n);
  // Depth-first choice of row images subject to the pairings with earlier rows.
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (f2_rank(rows) != n) return;
      std::uint64_t key = 0;
      for (int k = 0; k < n; ++k) key |= rows[k] << (8 * k);
      out.elements_.push_back(key);
      out.index_.insert(key);
      if (out.elements_.size() > cap) fail(Errc::CapExceeded, "orthogonal group enumeration");
      return;
    }
    for (std::uint64_t x : candidates[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = q.pairing(x, rows[j]) == q.omega().get(i, j);
      if (!ok) continue;
      rows[i] = x;
      std::vector<std::uint64_t> partial(rows.begin(), rows.begin() + i + 1);
      if (f2_rank(partial) != i + 1) continue;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

std::size_t form_orbit_index(const QuadraticFormF2& q, const std::vector<F2Matrix>& sp_generators) {
  if (!q.nondegenerate()) fail(Errc::DegenerateForm, "orbit index needs a nondegenerate form");
  for (const F2Matrix& g : sp_generators)
    if (!is_symplectic_mod2(g, q.omega())) fail(Errc::NotSymplectic, "generator");
  std::unordered_set<std::uint64_t> seen{q.linear()};
  std::deque<std::uint64_t> queue{q.linear()};
  while (!queue.empty()) {
    QuadraticFormF2 cur = q.with_linear(queue.front());
    queue.pop_front();
    for (const F2Matrix& g : sp_generators) {
      std::uint64_t c = cur.pulled_back(g).linear();
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return seen.size();
}

std::uint64_t sp2g_f2_order(int g) {
  if (g < 1 || g > 4) fail(Errc::OutOfRange, "Sp(2g,2) order kept below 2^64 for g <= 4");
  std::uint64_t order = 1ULL << (g * g);
  for (int i = 1; i <= g; ++i) order *= (1ULL << (2 * i)) - 1;
  return order;
}

}  // namespace rauzy
