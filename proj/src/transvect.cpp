#include "rauzy/transvect.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rauzy/error.hpp"

namespace rauzy {

IntMatrix transvection_matrix(const IntVector& v, const IntersectionForm& f, int power) {
  const int d = f.dim();
  if (static_cast<int>(v.size()) != d) fail(Errc::DimensionMismatch, "transvection vector");
  // u T_v = u + (u . a) v with a = v Omega; T_v^n = Id + n a^T v since v . a = 0.
  IntVector a = f.apply(v);
  IntMatrix m = IntMatrix::identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (a[i] != 0 && v[j] != 0) m(i, j) = checked_add(m(i, j), checked_mul(power, checked_mul(a[i], v[j])));
  return m;
}

bool is_symplectic(const IntMatrix& m, const IntersectionForm& f) {
  if (m.rows() != f.dim() || m.cols() != f.dim()) fail(Errc::DimensionMismatch, "symplectic check");
  return m * f.omega * m.transpose() == f.omega;
}

bool check_braid(const IntVector& v, const IntVector& w, const IntersectionForm& f) {
  if (f(v, w) != 1) fail(Errc::BadPairing, "check_braid needs <v, w> = 1");
  const IntMatrix tv = transvection_matrix(v, f), tw = transvection_matrix(w, f);
  const IntMatrix tv_inv = transvection_matrix(v, f, -1), tw_inv = transvection_matrix(w, f, -1);
  const IntMatrix plus = transvection_matrix(add(v, w), f);
  const IntMatrix minus = transvection_matrix(sub(v, w), f);
  return compose(tw_inv, compose(tv, tw)) == plus && compose(tv, compose(tw, tv_inv)) == plus &&
         compose(tw, compose(tv, tw_inv)) == minus && compose(tv_inv, compose(tw, tv)) == minus;
}

const IntMatrix& square_lemma_pattern() {
  static const IntMatrix pattern =
      IntMatrix::from_rows({{0, 0, 0, 1}, {0, 0, 1, 1}, {0, -1, 0, 1}, {-1, -1, -1, 0}});
  return pattern;
}

IntMatrix pairing_matrix(const std::vector<IntVector>& vs, const IntersectionForm& f) {
  const int n = static_cast<int>(vs.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f(vs[i], vs[j]);
  return m;
}

namespace {

// T_a^-2 T_b T_{2a+b} == T_{a+b}^2, as maps.
bool square_identity(const IntVector& a, const IntVector& b, const IntersectionForm& f) {
  IntMatrix lhs = compose(transvection_matrix(a, f, -2),
                          compose(transvection_matrix(b, f), transvection_matrix(add(scale(2, a), b), f)));
  return lhs == transvection_matrix(add(a, b), f, 2);
}

CertificateStep make_step(const IntVector& known, const IntVector& partner, int sign,
                          const IntersectionForm& f) {
  return CertificateStep{known, partner, f(known, partner),
                         sign > 0 ? add(known, partner) : sub(known, partner)};
}

}  // namespace

bool check_square_lemma(const Quadruple& q, const IntersectionForm& f) {
  if (!(pairing_matrix({q.v1, q.v2, q.v3, q.v4}, f) == square_lemma_pattern()))
    fail(Errc::WrongPairingPattern, "pairings differ from the required pattern");
  const IntVector& v1 = q.v1;
  const IntVector& v4 = q.v4;
  const IntVector neg_v1 = scale(-1, v1), neg_v3 = scale(-1, q.v3);

  // 2v1 + v2 and 2v1 - v3 through pairings equal to 1.
  ClosureCertificate chain{{q.v1, q.v2, q.v3, q.v4}, add(scale(2, v1), q.v2), {}};
  chain.steps.push_back(make_step(v1, v4, +1, f));                         // v1 + v4
  chain.steps.push_back(make_step(chain.steps.back().result, neg_v1, -1, f));  // 2v1 + v4
  chain.steps.push_back(make_step(chain.steps.back().result, neg_v3, +1, f));  // 2v1 - v3 + v4
  chain.steps.push_back(make_step(chain.steps.back().result, v4, -1, f));      // 2v1 - v3
  const IntVector two_v1_minus_v3 = chain.steps.back().result;
  chain.steps.push_back(make_step(two_v1_minus_v3, q.v2, +1, f));             // 2v1 + v2 - v3
  chain.steps.push_back(make_step(chain.steps.back().result, q.v3, +1, f));   // 2v1 + v2
  for (const CertificateStep& s : chain.steps)
    if (s.pairing != 1) return false;
  if (!verify_certificate(chain, f)) return false;
  ClosureCertificate chain2 = chain;
  chain2.target = two_v1_minus_v3;
  if (!verify_certificate(chain2, f)) return false;

  return square_identity(v1, q.v2, f) && square_identity(v1, neg_v3, f) &&
         square_identity(v1, q.v3, f) && square_identity(v1, scale(-1, q.v2), f);
}

std::optional<Quadruple> normalize_square_quadruple(const Quadruple& q, const IntersectionForm& f) {
  std::vector<IntVector> vs{q.v1, q.v2, q.v3, q.v4};
  for (int i = 0; i < 3; ++i) {
    std::int64_t s = f(vs[i], vs[3]);
    if (s != 1 && s != -1) return std::nullopt;
    if (s == -1) vs[i] = scale(-1, vs[i]);
  }
  if (f(vs[1], vs[2]) == -1) std::swap(vs[1], vs[2]);
  if (!(pairing_matrix(vs, f) == square_lemma_pattern())) return std::nullopt;
  return Quadruple{vs[0], vs[1], vs[2], vs[3]};
}

bool check_square_lemma_unsigned(const Quadruple& q, const IntersectionForm& f) {
  auto n = normalize_square_quadruple(q, f);
  if (!n) fail(Errc::WrongPairingPattern, "absolute pairings differ from the required pattern");
  return check_square_lemma(*n, f);
}

// ---------------------------------------------------------------------------
// Certificates

std::string ClosureCertificate::to_text() const {
  std::ostringstream os;
  os << "omega-closure-certificate 1\n";
  for (const IntVector& s : seeds) os << "seed " << to_string(s) << '\n';
  os << "target " << to_string(target) << '\n';
  for (const CertificateStep& s : steps)
    os << "step " << to_string(s.known) << ' ' << to_string(s.partner) << ' ' << s.pairing << ' '
       << to_string(s.result) << '\n';
  return os.str();
}

namespace {

IntVector parse_tuple(std::istream& in) {
  std::string tok;
  if (!(in >> tok) || tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
    fail(Errc::ParseError, "expected an integer tuple");
  IntVector v;
  std::istringstream body(tok.substr(1, tok.size() - 2));
  std::string part;
  while (std::getline(body, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad tuple entry '" + part + "'");
    }
  }
  return v;
}

}  // namespace

ClosureCertificate ClosureCertificate::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ClosureCertificate c;
  bool header = false, have_target = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (!header) {
      int version = 0;
      if (kw != "omega-closure-certificate" || !(ls >> version) || version != 1)
        fail(Errc::ParseError, "missing certificate header");
      header = true;
    } else if (kw == "seed") {
      c.seeds.push_back(parse_tuple(ls));
    } else if (kw == "target") {
      c.target = parse_tuple(ls);
      have_target = true;
    } else if (kw == "step") {
      CertificateStep s;
      s.known = parse_tuple(ls);
      s.partner = parse_tuple(ls);
      if (!(ls >> s.pairing)) fail(Errc::ParseError, "missing pairing");
      s.result = parse_tuple(ls);
      c.steps.push_back(std::move(s));
    } else {
      fail(Errc::ParseError, "unknown keyword '" + kw + "'");
    }
  }
  if (!header || !have_target) fail(Errc::ParseError, "incomplete certificate");
  return c;
}

bool verify_certificate(const ClosureCertificate& c, const IntersectionForm& f) {
  const std::size_t d = static_cast<std::size_t>(f.dim());
  std::set<IntVector> known;
  auto insert = [&](const IntVector& v) { known.insert(sign_normalized(v)); };
  auto has = [&](const IntVector& v) { return v.size() == d && known.count(sign_normalized(v)) > 0; };
  for (const IntVector& s : c.seeds) {
    if (s.size() != d) return false;
    insert(s);
  }
  for (const CertificateStep& s : c.steps) {
    if (!has(s.known) || !has(s.partner) || s.result.size() != d) return false;
    const std::int64_t p = f(s.known, s.partner);
    if (p != s.pairing || (p != 1 && p != -1)) return false;
    // X = -X, so the result may carry either global sign.
    const IntVector r = sign_normalized(s.result);
    if (!(r == sign_normalized(add(s.known, s.partner))) && !(r == sign_normalized(sub(s.known, s.partner))))
      return false;
    insert(s.result);
  }
  return has(c.target);
}

// ---------------------------------------------------------------------------
// Closure search

namespace {

using Key = std::string;

Key key_of(const IntVector& v) {
  Key k(v.size(), '\0');
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = static_cast<char>(v[i]);
  return k;
}

IntVector vector_of(const Key& k) {
  IntVector v(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) v[i] = static_cast<signed char>(k[i]);
  return v;
}

struct Node {
  Key parent;   // empty for roots
  int partner;  // index into the partner list
};

class Side {
 public:
  std::unordered_map<Key, Node> nodes;
  std::vector<Key> frontier;
};

}  // namespace

std::optional<ClosureCertificate> omega_closure_search(const std::vector<IntVector>& seeds,
                                                       const IntersectionForm& f,
                                                       const IntVector& target,
                                                       const SearchBounds& bounds,
                                                       const std::vector<ClosureCertificate>& lemmas) {
  const int d = f.dim();
  if (bounds.coeff_bound < 1 || bounds.coeff_bound > 100) fail(Errc::OutOfRange, "coefficient bound");
  auto in_bounds = [&](const IntVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](std::int64_t x) { return x >= -bounds.coeff_bound && x <= bounds.coeff_bound; });
  };
  if (static_cast<int>(target.size()) != d) fail(Errc::DimensionMismatch, "target");
  for (const IntVector& s : seeds)
    if (static_cast<int>(s.size()) != d) fail(Errc::DimensionMismatch, "seed");

  ClosureCertificate cert{seeds, target, {}};
  std::vector<IntVector> partners;
  for (const IntVector& s : seeds) partners.push_back(sign_normalized(s));
  // Lemma steps are replayed in order; a step whose result is already known
  // is dropped, which keeps shared sub-derivations from repeating.
  std::set<IntVector> derived;
  for (const IntVector& s : seeds) derived.insert(sign_normalized(s));
  for (const ClosureCertificate& l : lemmas) {
    for (const CertificateStep& s : l.steps)
      if (derived.insert(sign_normalized(s.result)).second) cert.steps.push_back(s);
    partners.push_back(sign_normalized(l.target));
  }
  const IntVector goal = sign_normalized(target);
  if (!in_bounds(goal)) return std::nullopt;
  for (const IntVector& p : partners)
    if (!in_bounds(p)) fail(Errc::OutOfRange, "partner outside the coefficient bound");

  // Neighbours of x: +-(x +- p) for partners p with <x, p> = +-1.
  auto neighbours = [&](const IntVector& x, auto&& visit) {
    IntVector xo = f.apply(x);
    for (std::size_t i = 0; i < partners.size(); ++i) {
      std::int64_t s = dot(xo, partners[i]);
      if (s != 1 && s != -1) continue;
      for (int sign : {1, -1}) {
        IntVector y = sign > 0 ? add(x, partners[i]) : sub(x, partners[i]);
        if (!in_bounds(y) || is_zero(y)) continue;
        visit(sign_normalized(y), static_cast<int>(i));
      }
    }
  };

  Side fwd, bwd;
  for (const IntVector& p : partners) {
    Key k = key_of(p);
    if (fwd.nodes.emplace(k, Node{Key(), -1}).second) fwd.frontier.push_back(k);
  }
  const Key goal_key = key_of(goal);
  bwd.nodes.emplace(goal_key, Node{Key(), -1});
  bwd.frontier.push_back(goal_key);

  std::optional<Key> meet;
  if (fwd.nodes.count(goal_key)) meet = goal_key;

  while (!meet && !fwd.frontier.empty() && !bwd.frontier.empty()) {
    Side& grow = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    const Side& other = &grow == &fwd ? bwd : fwd;
    std::vector<Key> next;
    for (const Key& k : grow.frontier) {
      neighbours(vector_of(k), [&](const IntVector& y, int partner) {
        if (meet) return;
        Key ky = key_of(y);
        if (!grow.nodes.emplace(ky, Node{k, partner}).second) return;
        next.push_back(ky);
        if (other.nodes.count(ky)) meet = ky;
      });
      if (meet) break;
      if (fwd.nodes.size() + bwd.nodes.size() > bounds.step_bound)
        fail(Errc::BoundsExceeded, "closure search visited more than " + std::to_string(bounds.step_bound) + " vectors");
    }
    grow.frontier = std::move(next);
  }
  if (!meet) return std::nullopt;

  // Forward chain: root partner -> ... -> meet.
  std::vector<Key> forward_chain;
  for (Key k = *meet;; k = fwd.nodes.at(k).parent) {
    forward_chain.push_back(k);
    if (fwd.nodes.at(k).parent.empty()) break;
  }
  std::reverse(forward_chain.begin(), forward_chain.end());
  auto emit = [&](const Key& from, const Key& to, int partner) {
    IntVector x = vector_of(from);
    const IntVector& p = partners[partner];
    IntVector plus = add(x, p);
    int sign = sign_normalized(plus) == vector_of(to) ? 1 : -1;
    cert.steps.push_back(make_step(x, p, sign, f));
  };
  for (std::size_t i = 1; i < forward_chain.size(); ++i)
    emit(forward_chain[i - 1], forward_chain[i], fwd.nodes.at(forward_chain[i]).partner);
  // Backward chain: meet -> ... -> goal, each edge reversed.
  for (Key k = *meet; !bwd.nodes.at(k).parent.empty(); k = bwd.nodes.at(k).parent)
    emit(k, bwd.nodes.at(k).parent, bwd.nodes.at(k).partner);

  if (!verify_certificate(cert, f)) fail(Errc::OutOfRange, "internal: search produced an invalid certificate");
  return cert;
}

// ---------------------------------------------------------------------------
// Level two

bool is_symplectic_basis(const std::vector<SymplecticPair>& basis, const IntersectionForm& f) {
  std::vector<IntVector> a, b;
  for (const auto& [x, y] : basis) {
    a.push_back(x);
    b.push_back(y);
  }
  const std::size_t g = basis.size();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (f(a[i], b[j]) != (i == j ? 1 : 0)) return false;
      if (f(a[i], a[j]) != 0 || f(b[i], b[j]) != 0) return false;
    }
  return true;
}

std::vector<IntMatrix> level_two_generators(const std::vector<SymplecticPair>& basis,
                                            const IntersectionForm& f) {
  if (!is_symplectic_basis(basis, f)) fail(Errc::NotSymplecticBasis, "level_two_generators");
  std::vector<IntVector> flat;
  for (const auto& [x, y] : basis) {
    flat.push_back(x);
    flat.push_back(y);
  }
  std::vector<IntMatrix> gens;
  for (const IntVector& b : flat) gens.push_back(transvection_matrix(b, f, 2));
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = i + 1; j < flat.size(); ++j)
      gens.push_back(transvection_matrix(add(flat[i], flat[j]), f, 2));
  return gens;
}

namespace {

// Matrix over Z/4 of size n <= 8 as two bit planes (value = lo + 2 hi), row i
// in bits 8i..8i+7 of each plane.
struct Mod4 {
  std::uint64_t lo = 0, hi = 0;
  friend bool operator==(const Mod4&, const Mod4&) = default;
};

struct Mod4Hash {
  std::size_t operator()(const Mod4& m) const {
    std::uint64_t x = m.lo * 0x9e3779b97f4a7c15ULL ^ (m.hi + 0x632be59bd9b4e019ULL + (m.lo << 6));
    x ^= x >> 31;
    return static_cast<std::size_t>(x * 0xbf58476d1ce4e5b9ULL);
  }
};

std::uint64_t plane_row(std::uint64_t plane, int i) { return (plane >> (8 * i)) & 0xFF; }

Mod4 reduce_mod4(const IntMatrix& m) {
  Mod4 r;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::int64_t x = ((m(i, j) % 4) + 4) % 4;
      if (x & 1) r.lo |= 1ULL << (8 * i + j);
      if (x & 2) r.hi |= 1ULL << (8 * i + j);
    }
  return r;
}

// Right multiplication by a fixed generator over Z/4.
struct Mod4Multiplier {
  int n;
  std::uint64_t glo[8], ghi[8];

  Mod4Multiplier(const Mod4& g, int n_) : n(n_) {
    for (int k = 0; k < n; ++k) {
      glo[k] = plane_row(g.lo, k);
      ghi[k] = plane_row(g.hi, k);
    }
  }

  Mod4 operator()(const Mod4& m) const {
    Mod4 r;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t ml = plane_row(m.lo, i), mh = plane_row(m.hi, i);
      // Sum of rows glo[k] for k in ml, as a two-bit counter per column.
      std::uint64_t lo = 0, hi = 0;
      for (std::uint64_t bits = ml; bits; bits &= bits - 1) {
        const int k = __builtin_ctzll(bits);
        hi ^= lo & glo[k];
        lo ^= glo[k];
        hi ^= ghi[k];  // 2 * ghi
      }
      for (std::uint64_t bits = mh; bits; bits &= bits - 1) hi ^= glo[__builtin_ctzll(bits)];
      r.lo |= lo << (8 * i);
      r.hi |= hi << (8 * i);
    }
    return r;
  }
};

}  // namespace

Mod4KernelResult mod4_kernel_check(const std::vector<IntMatrix>& generators, const IntersectionForm& f,
                                   std::size_t cap) {
  const int n = f.dim();
  if (n > 8) fail(Errc::DimensionTooLarge, "mod-4 enumeration needs dimension <= 8");
  if (n % 2 != 0 || rank(f.omega) != n) fail(Errc::DegenerateForm, "mod-4 kernel check needs a unimodular form");
  const int g = n / 2;
  Mod4KernelResult res;
  res.kernel_order = 1ULL << (g * (2 * g + 1));
  const Mod4 id = reduce_mod4(IntMatrix::identity(n));
  std::vector<Mod4Multiplier> mults;
  for (const IntMatrix& m : generators) {
    if (m.rows() != n || m.cols() != n) fail(Errc::DimensionMismatch, "generator");
    const Mod4 r = reduce_mod4(m);
    if (r.lo != id.lo) fail(Errc::OutOfRange, "generator is not the identity mod 2");
    IntMatrix c = m * f.omega * m.transpose() - f.omega;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c(i, j) % 4 != 0) fail(Errc::NotSymplectic, "generator is not symplectic mod 4");
    mults.emplace_back(r, n);
  }
  std::unordered_set<Mod4, Mod4Hash> seen{id};
  std::vector<Mod4> order{id};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const Mod4Multiplier& mul : mults) {
      Mod4 next = mul(order[i]);
      if (seen.insert(next).second) {
        order.push_back(next);
        if (order.size() > cap) fail(Errc::CapExceeded, "mod-4 enumeration");
      }
    }
  res.generated_order = order.size();
  return res;
}

}  // namespace rauzy
