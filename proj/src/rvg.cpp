#include "rauzy/rvg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "rauzy/error.hpp"
#include "rauzy/transvect.hpp"

namespace rauzy {

IntMatrix kz_arrow(const Arrow& a) {
  IntMatrix m = IntMatrix::identity(a.source.size());
  const bool forward = a.kind == ArrowKind::Top || a.kind == ArrowKind::Bottom;
  m(a.loser, a.winner) += forward ? 1 : -1;
  return m;
}

IntMatrix kz_walk(const Walk& w) {
  IntMatrix m = IntMatrix::identity(w.start.size());
  for (const Arrow& a : w.arrows) m = kz_arrow(a) * m;
  return m;
}

F2Matrix reduce_mod2(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() > kMaxF2Dim) fail(Errc::DimensionTooLarge, "reduce_mod2");
  F2Matrix r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, (m(i, j) & 1) != 0);
  return r;
}

Walk pure_cycle(const Permutation& p, Letter letter) {
  ArrowKind kind;
  if (letter == p.top_last())
    kind = ArrowKind::Top;
  else if (letter == p.bottom_last())
    kind = ArrowKind::Bottom;
  else
    fail(Errc::OutOfRange, "letter is not last on either row");
  Walk w{p, {}};
  do {
    w.append(rauzy_step(w.end(), kind));
    if (static_cast<int>(w.arrows.size()) > 2 * p.size())
      fail(Errc::ClassSearchFailed, "pure cycle does not close");
  } while (!(w.end() == p));
  return w;
}

DehnTwist dehn_twist_cycle(const Permutation& p, Letter letter, const RauzyClass& c) {
  auto start = c.index_of(p);
  if (!start) fail(Errc::ClassSearchFailed, "permutation is not in the class");
  auto is_goal = [&](const Permutation& q) { return q.top_last() == letter || q.bottom_last() == letter; };

  // Forward BFS to the nearest vertex with the letter last.
  std::vector<int> parent(c.size(), -2), via(c.size(), -1);
  std::deque<int> queue{*start};
  parent[*start] = -1;
  int goal = -1;
  while (!queue.empty() && goal < 0) {
    int i = queue.front();
    queue.pop_front();
    if (is_goal(c.vertices()[i])) {
      goal = i;
      break;
    }
    for (int k = 0; k < 2; ++k) {
      int j = c.out(i)[k];
      if (parent[j] != -2) continue;
      parent[j] = i;
      via[j] = k;
      queue.push_back(j);
    }
  }
  if (goal < 0) fail(Errc::ClassSearchFailed, "no vertex with the letter last");

  std::vector<ArrowKind> kinds;
  for (int i = goal; parent[i] >= 0; i = parent[i])
    kinds.push_back(via[i] == 0 ? ArrowKind::Top : ArrowKind::Bottom);
  std::reverse(kinds.begin(), kinds.end());
  Walk gamma{p, {}};
  for (ArrowKind k : kinds) gamma.append(rauzy_step(gamma.end(), k));

  Walk w = gamma;
  w.append(pure_cycle(gamma.end(), letter));
  w.append(gamma.inverse());

  const IntersectionForm f = omega(p);
  const IntMatrix b = kz_walk(w);
  const IntVector e = unit_vector(p.size(), letter);
  if (b == transvection_matrix(e, f, 1)) return DehnTwist{std::move(w), 1};
  if (b == transvection_matrix(e, f, -1)) return DehnTwist{std::move(w), -1};
  fail(Errc::ClassSearchFailed, "cycle matrix is not a twist along the letter");
}

namespace {

std::vector<std::uint64_t> span_of(const std::vector<std::uint64_t>& basis) {
  std::vector<std::uint64_t> out{0};
  for (std::uint64_t b : basis) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> unit_seeds(int d) {
  std::vector<std::uint64_t> s;
  for (int a = 0; a < d; ++a) s.push_back(1ULL << a);
  return s;
}

}  // namespace

RvMod2Report rv_mod2_check(const Permutation& p, int max_enum_dim, std::size_t group_cap) {
  if (!is_irreducible(p)) fail(Errc::NotIrreducible, "rv_mod2_check");
  const int d = p.size();
  const QuadraticFormF2 q = quadratic_form(p);
  RvMod2Report r;
  const std::vector<std::uint64_t> closure = q_closure(unit_seeds(d), q);
  const std::vector<std::uint64_t> ker = span_of(f2_kernel(q.omega()));
  std::vector<std::uint64_t> target;
  for (std::uint64_t v : nonsingular_vectors(q))
    if (!std::binary_search(ker.begin(), ker.end(), v)) target.push_back(v);
  std::sort(target.begin(), target.end());
  r.closure_size = closure.size();
  r.target_size = target.size();
  r.closure_equal = closure == target;

  if (d <= max_enum_dim) {
    std::vector<F2Matrix> gens;
    for (int a = 0; a < d; ++a) gens.push_back(orthogonal_transvection(1ULL << a, q));
    SubgroupEnumeration g = group_closure(gens, d, group_cap);
    SubgroupEnumeration o = enumerate_orthogonal_group(q, group_cap);
    r.group_enumerated = true;
    r.group_order = g.size();
    r.orthogonal_order = o.size();
    r.group_equal = g.size() == o.size() &&
                    std::all_of(gens.begin(), gens.end(), [&](const F2Matrix& m) { return o.contains(m); });
  }
  return r;
}

Decomposition decompose(const IntMatrix& s, const IntersectionForm& f, const std::vector<IntVector>& complement) {
  const int d = f.dim();
  if (s.rows() != d || s.cols() != d) fail(Errc::DimensionMismatch, "decompose");
  Decomposition dec{complement, kernel_basis(f), {}, {}};
  const int m = static_cast<int>(complement.size());
  const int k = static_cast<int>(dec.kernel.size());
  if (m + k != d) fail(Errc::DimensionMismatch, "complement has the wrong size");
  for (const IntVector& v : dec.kernel)
    if (!(v * s == v)) fail(Errc::KernelNotFixed, "S moves " + to_string(v));

  std::vector<IntVector> rows = complement;
  rows.insert(rows.end(), dec.kernel.begin(), dec.kernel.end());
  const IntMatrix basis = IntMatrix::from_rows(rows);
  const IntMatrix basis_inv = inverse_unimodular(basis);
  dec.s1 = IntMatrix(m, m);
  dec.s0 = IntMatrix(m, k);
  for (int i = 0; i < m; ++i) {
    IntVector c = (complement[i] * s) * basis_inv;
    for (int j = 0; j < m; ++j) dec.s1(i, j) = c[j];
    for (int j = 0; j < k; ++j) dec.s0(i, j) = c[m + j];
  }
  const IntMatrix cm = IntMatrix::from_rows(complement);
  const IntMatrix omega_v = cm * f.omega * cm.transpose();
  if (!(dec.s1 * omega_v * dec.s1.transpose() == omega_v))
    fail(Errc::NotSymplectic, "S1 does not preserve the restricted form");
  return dec;
}

IntMatrix reconstruct(const Decomposition& dec) {
  const int m = dec.s1.rows();
  const int k = static_cast<int>(dec.kernel.size());
  IntMatrix block = IntMatrix::identity(m + k);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) block(i, j) = dec.s1(i, j);
    for (int j = 0; j < k; ++j) block(i, m + j) = dec.s0(i, j);
  }
  std::vector<IntVector> rows = dec.complement;
  rows.insert(rows.end(), dec.kernel.begin(), dec.kernel.end());
  const IntMatrix basis = IntMatrix::from_rows(rows);
  return inverse_unimodular(basis) * block * basis;
}

IntMatrix shear(const IntVector& v, const IntVector& e_sharp, const IntersectionForm& f) {
  return compose(transvection_matrix(sub(v, e_sharp), f), transvection_matrix(v, f, -1));
}

// ---------------------------------------------------------------------------
// Mod-2 structure at odd d

bool OqStructureReport::ok() const {
  if (!cocycle_ok) return false;
  if (regular) return s0_determined && s1_injective;
  return s1_group_order == restricted_orthogonal_order && v_image_size == v_image_expected;
}

namespace {

struct SplitMod2 {
  F2Matrix s1;
  std::uint64_t s0 = 0;  // bit i: coefficient of e_sharp in S(e_i)
};

// Complement = first d-1 units, kernel = e_sharp = all ones.
SplitMod2 split_mod2(const F2Matrix& s) {
  const int d = s.dim();
  const std::uint64_t all = dim_mask(d);
  SplitMod2 out{F2Matrix(d - 1), 0};
  for (int i = 0; i < d - 1; ++i) {
    std::uint64_t r = s.row(i);
    const bool c = (r >> (d - 1)) & 1;
    if (c) r ^= all;
    out.s1.set_row(i, r);
    if (c) out.s0 |= 1ULL << i;
  }
  return out;
}

}  // namespace

OqStructureReport oq_structure_check(int d, std::uint64_t seed, int random_products, std::size_t group_cap) {
  if (d < 7 || d % 2 == 0) fail(Errc::OutOfRange, "oq_structure_check needs odd d >= 7");
  const Permutation p = reps::tau_d(d);
  const QuadraticFormF2 q = quadratic_form(p);
  const std::uint64_t sharp = dim_mask(d);
  if (f2_kernel(q.omega()) != std::vector<std::uint64_t>{sharp})
    fail(Errc::DegenerateForm, "kernel is not spanned by e_sharp");

  OqStructureReport r;
  r.d = d;
  r.regular = q(sharp);

  F2Matrix wv(d - 1);
  for (int i = 0; i < d - 1; ++i)
    for (int j = 0; j < d - 1; ++j) wv.set(i, j, q.omega().get(i, j));
  std::vector<int> order(q.ordering().begin(), q.ordering().end() - 1);
  const QuadraticFormF2 qv(wv, order, dim_mask(d - 1));
  r.arf_restricted = arf(qv);

  std::vector<F2Matrix> gens;
  for (int a = 0; a < d; ++a) gens.push_back(orthogonal_transvection(1ULL << a, q));

  // Random products, checked against the cocycle law as they are built.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1), len(1, 12);
  auto random_element = [&] {
    F2Matrix m = F2Matrix::identity(d);
    for (int i = len(rng); i > 0; --i) m = m * gens[pick(rng)];
    return m;
  };
  r.cocycle_ok = true;
  std::vector<F2Matrix> samples = gens;
  for (int t = 0; t < random_products; ++t) {
    F2Matrix s = random_element(), u = random_element();
    // Row matrices: the map u o s has matrix s * u.
    SplitMod2 a = split_mod2(s), b = split_mod2(u), ab = split_mod2(s * u);
    const bool kernel_fixed = s.apply(sharp) == sharp && u.apply(sharp) == sharp;
    std::uint64_t expect_s0 = 0;
    for (int i = 0; i < d - 1; ++i)
      if (parity(a.s1.row(i) & b.s0) ^ ((a.s0 >> i) & 1)) expect_s0 |= 1ULL << i;
    if (!kernel_fixed || !(ab.s1 == a.s1 * b.s1) || ab.s0 != expect_s0) r.cocycle_ok = false;
    samples.push_back(s);
  }

  if (r.regular) {
    // S0 is forced: S0(u) = e_sharp exactly when Q(u S1) != Q(u).
    r.s0_determined = true;
    std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> by_s1;
    r.s1_injective = true;
    for (const F2Matrix& s : samples) {
      SplitMod2 sp = split_mod2(s);
      for (int i = 0; i < d - 1; ++i) {
        const bool moved = qv(sp.s1.row(i)) != qv(1ULL << i);
        if (moved != (((sp.s0 >> i) & 1) != 0)) r.s0_determined = false;
      }
      auto [it, fresh] = by_s1.emplace(sp.s1.rows(), s.rows());
      if (!fresh && it->second != s.rows()) r.s1_injective = false;
    }
  } else {
    if (d - 1 > 8) fail(Errc::DimensionTooLarge, "S1 group enumeration needs d <= 9");
    std::vector<F2Matrix> s1_gens;
    for (const F2Matrix& g : gens) s1_gens.push_back(split_mod2(g).s1);
    r.s1_group_order = group_closure(s1_gens, d - 1, group_cap).size();
    r.restricted_orthogonal_order = enumerate_orthogonal_group(qv, group_cap).size();
  }
  // v_{S1} ranges over the differences Q o S1 - Q, one per form in the Sp-orbit of Q.
  r.v_image_size = form_orbit_index(qv, all_symplectic_transvections(wv));
  const int g = (d - 1) / 2;
  const std::size_t half = std::size_t{1} << (g - 1), full = std::size_t{1} << g;
  r.v_image_expected = half * (r.arf_restricted ? full - 1 : full + 1);
  return r;
}

// ---------------------------------------------------------------------------
// Extensions

Insertion insertion_of(const Permutation& reduced, const Permutation& extended) {
  const int d = reduced.size();
  if (extended.size() != d + 1) fail(Errc::IllegalInsertion, "sizes differ by more than one letter");
  const Letter fresh = d;
  const int jt = extended.top_pos(fresh), jb = extended.bottom_pos(fresh);
  if (jt + 1 >= extended.size() || jb + 1 >= extended.size())
    fail(Errc::IllegalInsertion, "fresh letter is last on a row");
  Insertion ins{extended.top()[jt + 1], extended.bottom()[jb + 1], extended.name(fresh)};
  if (!(simple_extension(reduced, ins) == extended))
    fail(Errc::IllegalInsertion, "not a simple extension of the reduced permutation");
  return ins;
}

EmbeddingReport embedding_check(const Permutation& reduced, const Insertion& ins, int trials,
                                std::mt19937_64& rng, int max_walk_length) {
  const Permutation extended = simple_extension(reduced, ins);
  const StratumProfile pr = stratum_profile(reduced), pe = stratum_profile(extended);
  if (pr.genus != pe.genus) fail(Errc::GenusNotPreserved, "extension changes the genus");
  const int d = reduced.size();
  const IntersectionForm fr = omega(reduced), fe = omega(extended);
  auto iota = [&](IntVector u) {
    u.push_back(0);
    return u;
  };
  std::vector<IntVector> basis;
  for (int a : complement_letters(fr)) basis.push_back(unit_vector(d, a));

  EmbeddingReport r;
  for (const IntVector& u : basis)
    for (const IntVector& v : basis)
      if (fr(u, v) != fe(iota(u), iota(v))) ++r.failures;

  std::uniform_int_distribution<int> len(0, max_walk_length);
  for (int t = 0; t < trials; ++t) {
    ++r.trials;
    Walk w = random_walk(reduced, len(rng), rng, true);
    bool good = true;
    try {
      Walk we = extension_map_on_walk(w, ins);
      const IntMatrix bi = inverse_unimodular(kz_walk(w));
      const IntMatrix bei = inverse_unimodular(kz_walk(we));
      for (const IntVector& u : basis)
        if (!(iota(u * bi) == iota(u) * bei)) good = false;
    } catch (const Error& e) {
      if (e.code() != Errc::IllegalInsertion && e.code() != Errc::ForbiddenPosition) throw;
      good = false;
    }
    if (!good) ++r.failures;
  }

  auto all_even = [](const StratumProfile& s) {
    return std::all_of(s.orders.begin(), s.orders.end(), [](int m) { return m % 2 == 0; });
  };
  if (all_even(pr) && all_even(pe)) {
    r.arf_checked = true;
    r.arf_equal = arf(quadratic_form(reduced)) == arf(quadratic_form(extended));
  } else {
    // Q restricted to the image of the complement carries the same Arf invariant.
    std::vector<std::uint64_t> image;
    for (int a : complement_letters(fr)) image.push_back(1ULL << a);
    r.arf_checked = true;
    r.arf_equal = arf_symplectic(quadratic_form(reduced)) == arf_symplectic_on(quadratic_form(extended), image);
  }
  return r;
}

// ---------------------------------------------------------------------------

HSubspace h_subspace(const Permutation& p) {
  const IntersectionForm f = omega(p);
  std::vector<IntVector> cols;
  for (int j = 0; j < f.dim(); ++j) cols.push_back(f.omega.col(j));
  HSubspace h;
  h.basis = lattice_basis(cols);
  h.rank = static_cast<int>(h.basis.size());
  h.genus = stratum_profile(p).genus;
  return h;
}

bool preserves_h(const HSubspace& h, const IntMatrix& b) {
  for (const IntVector& x : h.basis)
    if (!integer_coordinates(h.basis, apply_column(b, x))) return false;
  return true;
}

}  // namespace rauzy
