#include "rauzy/forms.hpp"

#include <algorithm>

#include "json.hpp"
#include "rauzy/error.hpp"

namespace rauzy {

std::int64_t IntersectionForm::operator()(const IntVector& u, const IntVector& v) const {
  return dot(u * omega, v);
}

IntersectionForm omega(const Permutation& p) {
  const int d = p.size();
  IntersectionForm f{IntMatrix(d, d), std::vector<int>(d)};
  for (Letter a = 0; a < d; ++a) {
    f.top_order[a] = p.top_pos(a);
    for (Letter b = 0; b < d; ++b) {
      bool top_before = p.top_pos(a) < p.top_pos(b);
      bool bottom_before = p.bottom_pos(a) < p.bottom_pos(b);
      if (top_before && !bottom_before && a != b) f.omega(a, b) = 1;
      if (!top_before && bottom_before && a != b) f.omega(a, b) = -1;
    }
  }
  return f;
}

QuadraticFormF2 quadratic_form(const Permutation& p) {
  const int d = p.size();
  IntersectionForm f = omega(p);
  F2Matrix w(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) w.set(a, b, f.omega(a, b) != 0);
  return QuadraticFormF2(w, f.top_order, dim_mask(d));
}

std::vector<IntVector> kernel_basis(const IntersectionForm& f) { return left_kernel_basis(f.omega); }

std::vector<int> complement_letters(const IntersectionForm& f) { return independent_rows(f.omega); }

bool q_eval(const QuadraticFormF2& q, const F2Vector& u) {
  if (u.dim != q.dim()) fail(Errc::DimensionMismatch, "q_eval");
  return q(u.bits);
}

NSCounts ns_counts_brute(const QuadraticFormF2& q) {
  const int d = q.dim();
  if (d > 30) fail(Errc::DimensionTooLarge, "brute NS count over 2^d vectors");
  NSCounts c;
  for (std::uint64_t u = 0; u <= dim_mask(d); ++u) {
    const bool odd = parity(u);
    if (q(u))
      ++(odd ? c.ns1 : c.ns0);
    else
      ++(odd ? c.s1 : c.s0);
  }
  return c;
}

NSCounts ns_counts_recurrence(Family family, int d) {
  const int base = family == Family::Tau ? 6 : 8;
  if (d < base || d > 62) fail(Errc::OutOfRange, "recurrence range");
  NSCounts c = family == Family::Tau ? NSCounts{16, 20, 16, 12} : NSCounts{56, 64, 72, 64};
  for (int k = base; k < d; ++k)
    c = NSCounts{c.ns0 + c.ns1, c.ns1 + c.s0, c.s0 + c.s1, c.s1 + c.ns0};
  return c;
}

NSCounts ns_counts_closed_form(Family family, int d) {
  if (d < 3 || d > 62) fail(Errc::OutOfRange, "closed form range");
  // cos_term = 2^{(d-2)/2} cos(d pi / 4), sin_term likewise, as exact integers.
  std::int64_t cos_term, sin_term;
  const int r = d % 8;
  if (d % 2 == 0) {
    const std::int64_t h = std::int64_t{1} << ((d - 2) / 2);
    static constexpr int cos_even[] = {1, 0, 0, 0, -1, 0, 0, 0};
    static constexpr int sin_even[] = {0, 0, 1, 0, 0, 0, -1, 0};
    cos_term = h * cos_even[r];
    sin_term = h * sin_even[r];
  } else {
    const std::int64_t h = std::int64_t{1} << ((d - 3) / 2);  // 2^{(d-2)/2} * sqrt(2)/2
    static constexpr int cos_odd[] = {0, 1, 0, -1, 0, -1, 0, 1};
    static constexpr int sin_odd[] = {0, 1, 0, 1, 0, -1, 0, -1};
    cos_term = h * cos_odd[r];
    sin_term = h * sin_odd[r];
  }
  if (family == Family::Sigma) {
    cos_term = -cos_term;
    sin_term = -sin_term;
  }
  const std::int64_t half = std::int64_t{1} << (d - 2);
  return NSCounts{static_cast<std::uint64_t>(half + cos_term), static_cast<std::uint64_t>(half - sin_term),
                  static_cast<std::uint64_t>(half - cos_term), static_cast<std::uint64_t>(half + sin_term)};
}

int arf_on_span(const QuadraticFormF2& q, const std::vector<std::uint64_t>& basis) {
  const int k = static_cast<int>(basis.size());
  if (k > 30) fail(Errc::DimensionTooLarge, "majority count over 2^k vectors");
  if (f2_rank(basis) != k) fail(Errc::OutOfRange, "arf_on_span needs independent vectors");
  std::uint64_t ns = 0, u = 0;
  for (std::uint64_t i = 0; i < (1ULL << k); ++i) {
    if (i) u ^= basis[__builtin_ctzll(i)];  // Gray code walk over the span
    ns += q(u);
  }
  const std::uint64_t total = 1ULL << k;
  if (2 * ns == total) fail(Errc::Tie, "|NS| = |S|");
  return 2 * ns > total ? 1 : 0;
}

static std::vector<std::uint64_t> complement_units(const QuadraticFormF2& q) {
  std::vector<std::uint64_t> basis;
  for (int a : f2_independent_rows(q.omega())) basis.push_back(1ULL << a);
  return basis;
}

int arf(const QuadraticFormF2& q) {
  std::vector<std::uint64_t> basis = complement_units(q);
  if (basis.size() <= 24) return arf_on_span(q, basis);
  return arf_symplectic(q);
}

int arf_symplectic(const QuadraticFormF2& q) { return arf_symplectic_on(q, complement_units(q)); }

int arf_symplectic_on(const QuadraticFormF2& q, std::vector<std::uint64_t> w) {
  int total = 0;
  while (!w.empty()) {
    std::uint64_t a = w.front();
    w.erase(w.begin());
    auto it = std::find_if(w.begin(), w.end(), [&](std::uint64_t x) { return q.pairing(a, x); });
    if (it == w.end()) fail(Errc::DegenerateForm, "form is degenerate on the span");
    std::uint64_t b = *it;
    w.erase(it);
    for (std::uint64_t& x : w) {
      std::uint64_t y = x;
      if (q.pairing(x, b)) y ^= a;
      if (q.pairing(x, a)) y ^= b;
      x = y;
    }
    total ^= q(a) & q(b);
  }
  return total;
}

Hyperelliptic hyperelliptic_test(const Permutation& p, std::size_t max_class_size) {
  const int d = p.size();
  std::vector<Letter> reversed(p.top().rbegin(), p.top().rend());
  Permutation target = Permutation::from_ids(p.top(), reversed, p.names());
  const std::size_t hyp_size = d < 63 ? (std::size_t{1} << (d - 1)) - 1 : SIZE_MAX;
  const std::size_t cap = std::min(max_class_size, hyp_size);
  try {
    return rauzy_class(p, cap).contains(target) ? Hyperelliptic::Yes : Hyperelliptic::No;
  } catch (const Error& e) {
    if (e.code() != Errc::SizeExceeded) throw;
    return cap == hyp_size ? Hyperelliptic::No : Hyperelliptic::Unknown;
  }
}

ComponentLabel component_label(const Permutation& p, std::size_t max_class_size) {
  if (!is_irreducible(p)) fail(Errc::NotIrreducible, "component_label");
  ComponentLabel label;
  label.profile = stratum_profile(p);
  const auto& orders = label.profile.orders;
  const int g = label.profile.genus;
  const bool all_even = std::all_of(orders.begin(), orders.end(), [](int m) { return m % 2 == 0; });
  if (all_even) label.spin = arf(quadratic_form(p));

  const bool hyp_capable = (orders == std::vector<int>{2 * g - 2}) ||
                           (orders == std::vector<int>{g - 1, g - 1});
  label.hyperelliptic = hyp_capable ? hyperelliptic_test(p, max_class_size) : Hyperelliptic::No;

  const std::string base = stratum_name(label.profile);
  auto spin_name = [&] { return std::string(*label.spin ? "odd" : "even"); };
  if (g <= 2) {
    label.name = base;  // H(2), H(1,1) and the genus <= 1 strata are connected
  } else if (hyp_capable) {
    switch (label.hyperelliptic) {
      case Hyperelliptic::Yes: label.name = base + "^hyp"; break;
      case Hyperelliptic::No: label.name = base + "^" + (all_even ? spin_name() : "nonhyp"); break;
      case Hyperelliptic::Unknown: label.name = all_even ? base + "^" + spin_name() + "?" : base; break;
    }
  } else if (all_even) {
    label.name = base + "^" + spin_name();
  } else {
    label.name = base;
  }
  return label;
}

std::string ComponentLabel::to_json() const {
  nlohmann::json j;
  j["profile"] = profile.orders;
  j["genus"] = profile.genus;
  j["spin"] = spin ? nlohmann::json(*spin ? "odd" : "even") : nlohmann::json(nullptr);
  switch (hyperelliptic) {
    case Hyperelliptic::Yes: j["hyperelliptic"] = true; break;
    case Hyperelliptic::No: j["hyperelliptic"] = false; break;
    case Hyperelliptic::Unknown: j["hyperelliptic"] = nullptr; break;
  }
  j["name"] = name;
  return j.dump();
}

}  // namespace rauzy
