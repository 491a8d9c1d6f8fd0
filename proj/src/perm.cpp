#include "rauzy/perm.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

constexpr int kMaxLetters = 64;

std::shared_ptr<const std::vector<std::string>> decimal_names(int d) {
  auto names = std::make_shared<std::vector<std::string>>();
  for (int i = 0; i < d; ++i) names->push_back(std::to_string(i));
  return names;
}

bool is_permutation_of_range(const std::vector<Letter>& row, int d) {
  std::vector<bool> seen(d, false);
  for (Letter a : row) {
    if (a < 0 || a >= d || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

}  // namespace

Permutation Permutation::from_names(const std::vector<std::string>& top,
                                    const std::vector<std::string>& bottom) {
  if (top.size() != bottom.size())
    fail(Errc::InvalidPermutation, "rows have different lengths");
  auto names = std::make_shared<std::vector<std::string>>(top);
  std::unordered_map<std::string, Letter> id;
  for (std::size_t i = 0; i < top.size(); ++i)
    if (!id.emplace(top[i], static_cast<Letter>(i)).second)
      fail(Errc::InvalidPermutation, "letter '" + top[i] + "' repeated on the top row");
  std::vector<Letter> t(top.size()), b;
  std::iota(t.begin(), t.end(), 0);
  for (const std::string& s : bottom) {
    auto it = id.find(s);
    if (it == id.end()) fail(Errc::InvalidPermutation, "letter '" + s + "' missing from the top row");
    b.push_back(it->second);
  }
  return from_ids(std::move(t), std::move(b), std::move(names));
}

Permutation Permutation::from_ids(std::vector<Letter> top, std::vector<Letter> bottom,
                                  std::shared_ptr<const std::vector<std::string>> names) {
  const int d = static_cast<int>(top.size());
  if (d < 3) fail(Errc::InvalidPermutation, "need at least 3 letters");
  if (d > kMaxLetters) fail(Errc::InvalidPermutation, "at most 64 letters");
  if (static_cast<int>(bottom.size()) != d || !is_permutation_of_range(top, d) ||
      !is_permutation_of_range(bottom, d))
    fail(Errc::InvalidPermutation, "rows are not permutations of one alphabet");
  if (!names) names = decimal_names(d);
  if (static_cast<int>(names->size()) != d) fail(Errc::InvalidPermutation, "name table size");
  Permutation p;
  p.top_ = std::move(top);
  p.bottom_ = std::move(bottom);
  p.names_ = std::move(names);
  p.index();
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.size() != 2)
    fail(Errc::ParseError, "expected two non-empty lines, got " + std::to_string(rows.size()));
  if (rows[0].size() != rows[1].size())
    fail(Errc::ParseError, "rows have different lengths");
  std::multiset<std::string> a(rows[0].begin(), rows[0].end()), b(rows[1].begin(), rows[1].end());
  if (a != b) fail(Errc::ParseError, "rows are not rearrangements of each other");
  return from_names(rows[0], rows[1]);
}

void Permutation::index() {
  const int d = size();
  top_pos_.assign(d, 0);
  bottom_pos_.assign(d, 0);
  for (int i = 0; i < d; ++i) {
    top_pos_[top_[i]] = i;
    bottom_pos_[bottom_[i]] = i;
  }
}

Letter Permutation::letter(std::string_view name) const {
  for (int a = 0; a < size(); ++a)
    if ((*names_)[a] == name) return a;
  fail(Errc::OutOfRange, "no letter named '" + std::string(name) + "'");
}

std::string Permutation::encode() const {
  std::string s;
  s.reserve(2 * top_.size());
  for (Letter a : top_) s.push_back(static_cast<char>(a));
  for (Letter a : bottom_) s.push_back(static_cast<char>(a));
  return s;
}

std::string Permutation::to_text() const {
  std::string s;
  for (const auto* row : {&top_, &bottom_}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      if (i) s += ' ';
      s += name((*row)[i]);
    }
    s += '\n';
  }
  return s;
}

bool is_irreducible(const Permutation& p) {
  const int d = p.size();
  std::vector<int> seen(d, 0);
  int common = 0;
  for (int k = 0; k + 1 < d; ++k) {
    if (++seen[p.top()[k]] == 2) ++common;
    if (++seen[p.bottom()[k]] == 2) ++common;
    if (common == k + 1) return false;
  }
  return true;
}

std::optional<DegeneracyWitness> degeneracy_witness(const Permutation& p) {
  const int d = p.size();
  // pb(j): 1-based bottom position of the j-th top letter.
  auto pb = [&](int j) { return p.bottom_pos(p.top()[j - 1]) + 1; };
  for (int j = 1; j < d; ++j) {
    if (pb(j) == d && pb(j + 1) == 1 && pb(1) == pb(d) + 1) return DegeneracyWitness{1, j};
    if (pb(j + 1) == 1 && pb(1) == pb(j) + 1) return DegeneracyWitness{2, j};
    if (pb(j) == d && pb(j + 1) == pb(d) + 1) return DegeneracyWitness{3, j};
  }
  return std::nullopt;
}

bool is_degenerate(const Permutation& p) { return degeneracy_witness(p).has_value(); }

bool is_standard(const Permutation& p) {
  return p.bottom_pos(p.top_last()) == 0 && p.bottom_pos(p.top()[0]) == p.size() - 1;
}

const char* arrow_kind_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::Top: return "top";
    case ArrowKind::Bottom: return "bottom";
    case ArrowKind::InverseTop: return "inverse-top";
    case ArrowKind::InverseBottom: return "inverse-bottom";
  }
  return "?";
}

Arrow rauzy_step(const Permutation& p, ArrowKind kind) {
  const int d = p.size();
  std::vector<Letter> top = p.top(), bottom = p.bottom();
  Letter winner, loser;
  switch (kind) {
    case ArrowKind::Top: {
      winner = p.top_last();
      loser = p.bottom_last();
      if (winner == loser) fail(Errc::NotIrreducible, "last letters coincide");
      int k = p.bottom_pos(winner);
      bottom.pop_back();
      bottom.insert(bottom.begin() + k + 1, loser);
      break;
    }
    case ArrowKind::Bottom: {
      winner = p.bottom_last();
      loser = p.top_last();
      if (winner == loser) fail(Errc::NotIrreducible, "last letters coincide");
      int k = p.top_pos(winner);
      top.pop_back();
      top.insert(top.begin() + k + 1, loser);
      break;
    }
    case ArrowKind::InverseTop: {
      winner = p.top_last();
      int k = p.bottom_pos(winner);
      if (k == d - 1) fail(Errc::NotIrreducible, "last letters coincide");
      loser = bottom[k + 1];
      bottom.erase(bottom.begin() + k + 1);
      bottom.push_back(loser);
      break;
    }
    case ArrowKind::InverseBottom: {
      winner = p.bottom_last();
      int k = p.top_pos(winner);
      if (k == d - 1) fail(Errc::NotIrreducible, "last letters coincide");
      loser = top[k + 1];
      top.erase(top.begin() + k + 1);
      top.push_back(loser);
      break;
    }
    default:
      fail(Errc::OutOfRange, "arrow kind");
  }
  return Arrow{p, kind, winner, loser, Permutation::from_ids(std::move(top), std::move(bottom), p.names())};
}

static ArrowKind inverse_kind(ArrowKind k) {
  switch (k) {
    case ArrowKind::Top: return ArrowKind::InverseTop;
    case ArrowKind::Bottom: return ArrowKind::InverseBottom;
    case ArrowKind::InverseTop: return ArrowKind::Top;
    case ArrowKind::InverseBottom: return ArrowKind::Bottom;
  }
  return k;
}

void Walk::append(const Arrow& a) {
  if (!(a.source == end())) fail(Errc::NotComposable, "arrow does not start at the walk's end");
  arrows.push_back(a);
}

void Walk::append(const Walk& w) {
  for (const Arrow& a : w.arrows) append(a);
  if (w.arrows.empty() && !(w.start == end())) fail(Errc::NotComposable, "empty walk elsewhere");
}

Walk Walk::inverse() const {
  Walk w{end(), {}};
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it)
    w.arrows.push_back(Arrow{it->target, inverse_kind(it->kind), it->winner, it->loser, it->source});
  return w;
}

std::optional<int> RauzyClass::index_of(const Permutation& p) const {
  auto it = index_.find(p.encode());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RauzyClass rauzy_class(const Permutation& p, std::size_t max_size) {
  if (!is_irreducible(p)) fail(Errc::NotIrreducible, "rauzy_class of a reducible permutation");
  std::unordered_map<std::string, int> seen;
  std::vector<Permutation> found{p};
  seen.emplace(p.encode(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ArrowKind k : {ArrowKind::Top, ArrowKind::Bottom}) {
      Permutation q = rauzy_step(found[i], k).target;
      if (seen.emplace(q.encode(), static_cast<int>(found.size())).second) {
        found.push_back(std::move(q));
        if (found.size() > max_size)
          fail(Errc::SizeExceeded, "Rauzy class larger than " + std::to_string(max_size));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Permutation& a, const Permutation& b) { return a.encode() < b.encode(); });
  RauzyClass c;
  c.vertices_ = std::move(found);
  for (std::size_t i = 0; i < c.vertices_.size(); ++i)
    c.index_.emplace(c.vertices_[i].encode(), static_cast<int>(i));
  c.out_.resize(c.vertices_.size());
  for (std::size_t i = 0; i < c.vertices_.size(); ++i)
    for (int k = 0; k < 2; ++k)
      c.out_[i][k] = c.index_.at(
          rauzy_step(c.vertices_[i], k == 0 ? ArrowKind::Top : ArrowKind::Bottom).target.encode());
  return c;
}

namespace {

// BFS over the class graph; `moves` lists the arrow kinds usable from a vertex.
Walk class_path(const RauzyClass& c, const Permutation& from, const Permutation& to,
                bool undirected) {
  auto src = c.index_of(from), dst = c.index_of(to);
  if (!src || !dst) fail(Errc::ClassSearchFailed, "endpoint outside the class");
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<std::pair<int, ArrowKind>>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].push_back({c.out(i)[0], ArrowKind::Top});
    adj[i].push_back({c.out(i)[1], ArrowKind::Bottom});
    if (undirected) {
      adj[c.out(i)[0]].push_back({i, ArrowKind::InverseTop});
      adj[c.out(i)[1]].push_back({i, ArrowKind::InverseBottom});
    }
  }
  std::vector<int> parent(n, -1);
  std::vector<ArrowKind> via(n, ArrowKind::Top);
  std::deque<int> queue{*src};
  parent[*src] = *src;
  while (!queue.empty() && parent[*dst] < 0) {
    int u = queue.front();
    queue.pop_front();
    for (auto [v, k] : adj[u])
      if (parent[v] < 0) {
        parent[v] = u;
        via[v] = k;
        queue.push_back(v);
      }
  }
  if (parent[*dst] < 0) fail(Errc::ClassSearchFailed, "no path inside the class");
  std::vector<ArrowKind> kinds;
  for (int v = *dst; v != *src; v = parent[v]) kinds.push_back(via[v]);
  Walk w{from, {}};
  for (auto it = kinds.rbegin(); it != kinds.rend(); ++it) w.append(rauzy_step(w.end(), *it));
  return w;
}

}  // namespace

Walk forward_path(const RauzyClass& c, const Permutation& from, const Permutation& to) {
  return class_path(c, from, to, false);
}

Walk undirected_path(const RauzyClass& c, const Permutation& from, const Permutation& to) {
  return class_path(c, from, to, true);
}

Walk random_walk(const Permutation& p, int length, std::mt19937_64& rng, bool forward_only) {
  static constexpr ArrowKind kinds[] = {ArrowKind::Top, ArrowKind::Bottom, ArrowKind::InverseTop,
                                        ArrowKind::InverseBottom};
  std::uniform_int_distribution<int> pick(0, forward_only ? 1 : 3);
  Walk w{p, {}};
  for (int i = 0; i < length; ++i) w.append(rauzy_step(w.end(), kinds[pick(rng)]));
  return w;
}

Walk random_cycle(const RauzyClass& c, const Permutation& p, int length, std::mt19937_64& rng) {
  Walk w = random_walk(p, length, rng);
  w.append(undirected_path(c, w.end(), p));
  return w;
}

OrbitMap orbit_map(const Permutation& p) {
  const int d = p.size();
  const auto& t = p.top();
  const auto& b = p.bottom();
  OrbitMap s;
  s.next.assign(2 * d, -1);
  for (int j = 0; j < d; ++j) {
    s.next[OrbitMap::encode(t[j], 0)] = j > 0 ? OrbitMap::encode(t[j - 1], 1) : OrbitMap::encode(t[d - 1], 0);
    s.next[OrbitMap::encode(b[j], 1)] = j < d - 1 ? OrbitMap::encode(b[j + 1], 0) : OrbitMap::encode(b[0], 1);
  }
  return s;
}

bool OrbitMap::is_bijection() const {
  std::vector<bool> hit(next.size(), false);
  for (int y : next) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<std::vector<int>> OrbitMap::orbits() const {
  if (!is_bijection()) fail(Errc::OutOfRange, "s is not a bijection for this permutation");
  std::vector<bool> done(next.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < next.size(); ++x) {
    if (done[x]) continue;
    std::vector<int> orbit;
    for (int y = static_cast<int>(x); !done[y]; y = next[y]) {
      done[y] = true;
      orbit.push_back(y);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace {

struct ConePoint {
  std::vector<int> sides;  // orbit without the two excluded pairs, in s-order
  int order;
};

// Orbits of s with their singularity orders. Each `sides` list starts at the
// least pair of the orbit that is not excluded.
std::vector<ConePoint> cone_points(const Permutation& p) {
  const int d = p.size();
  const int ex1 = OrbitMap::encode(p.top()[0], 0);
  const int ex2 = OrbitMap::encode(p.bottom()[d - 1], 1);
  std::vector<ConePoint> out;
  for (const auto& orbit : orbit_map(p).orbits()) {
    ConePoint c;
    for (int x : orbit)
      if (x != ex1 && x != ex2) c.sides.push_back(x);
    const int n = static_cast<int>(c.sides.size());
    if (n < 2 || n % 2 != 0)
      fail(Errc::ProfileInconsistent, "orbit with cone angle " + std::to_string(n) + " pi");
    c.order = n / 2 - 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

StratumProfile stratum_profile(const Permutation& p) {
  // Identify polygon vertices through the side gluings. Top vertex j is node
  // j and bottom vertex k is node d + 1 + k. A cone point of angle 2 pi (m+1)
  // meets 2 (m+1) of the interior vertices 1..d-1 on the two rows.
  const int d = p.size();
  std::vector<int> parent(2 * (d + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  const int B = d + 1;
  unite(0, B);
  unite(d, B + d);
  for (Letter a = 0; a < d; ++a) {
    unite(p.top_pos(a), B + p.bottom_pos(a));
    unite(p.top_pos(a) + 1, B + p.bottom_pos(a) + 1);
  }
  std::unordered_map<int, int> interior;
  for (int j = 1; j < d; ++j) {
    ++interior[find(j)];
    ++interior[find(B + j)];
  }
  StratumProfile s;
  int total = 0;
  for (auto [root, n] : interior) {
    if (n % 2 != 0) fail(Errc::ProfileInconsistent, "cone angle " + std::to_string(n) + " pi");
    s.orders.push_back(n / 2 - 1);
    total += n / 2 - 1;
  }
  std::sort(s.orders.begin(), s.orders.end());
  if (total % 2 != 0) fail(Errc::ProfileInconsistent, "odd total order");
  s.genus = total / 2 + 1;
  if (d != 2 * s.genus + static_cast<int>(s.orders.size()) - 1)
    fail(Errc::ProfileInconsistent, "d != 2g + n - 1");
  return s;
}

StratumProfile stratum_profile_from_orbits(const Permutation& p) {
  StratumProfile s;
  int total = 0;
  for (const ConePoint& c : cone_points(p)) {
    s.orders.push_back(c.order);
    total += c.order;
  }
  std::sort(s.orders.begin(), s.orders.end());
  if (total % 2 != 0) fail(Errc::ProfileInconsistent, "odd total order");
  s.genus = total / 2 + 1;
  if (p.size() != 2 * s.genus + static_cast<int>(s.orders.size()) - 1)
    fail(Errc::ProfileInconsistent, "d != 2g + n - 1");
  return s;
}

std::string stratum_name(const StratumProfile& s) {
  std::string name = "H(";
  for (std::size_t i = 0; i < s.orders.size(); ++i) name += (i ? "," : "") + std::to_string(s.orders[i]);
  return name + ")";
}

Permutation simple_reduction(const Permutation& p, Letter a) {
  const int d = p.size();
  if (a < 0 || a >= d) fail(Errc::OutOfRange, "letter id");
  if (d - 1 < 3) fail(Errc::InvalidPermutation, "reduction would leave fewer than 3 letters");
  auto relabel = [a](const std::vector<Letter>& row) {
    std::vector<Letter> out;
    for (Letter x : row)
      if (x != a) out.push_back(x > a ? x - 1 : x);
    return out;
  };
  auto names = std::make_shared<std::vector<std::string>>(*p.names());
  names->erase(names->begin() + a);
  Permutation q = Permutation::from_ids(relabel(p.top()), relabel(p.bottom()), std::move(names));
  if (!is_irreducible(q)) fail(Errc::NotIrreducible, "erasing '" + p.name(a) + "' gives a reducible permutation");
  return q;
}

Permutation simple_extension(const Permutation& p, const Insertion& ins) {
  const int d = p.size();
  if (ins.before_top < 0 || ins.before_top >= d || ins.before_bottom < 0 || ins.before_bottom >= d)
    fail(Errc::OutOfRange, "insertion letter");
  if (ins.before_top == p.top()[0] && ins.before_bottom == p.bottom()[0])
    fail(Errc::ForbiddenPosition, "new letter would lead both rows");
  auto names = std::make_shared<std::vector<std::string>>(*p.names());
  std::string name = ins.name;
  if (name.empty()) {
    name = "x" + std::to_string(d);
    while (std::find(names->begin(), names->end(), name) != names->end()) name += "'";
  }
  if (std::find(names->begin(), names->end(), name) != names->end())
    fail(Errc::InvalidPermutation, "letter name '" + name + "' already used");
  names->push_back(name);
  std::vector<Letter> top = p.top(), bottom = p.bottom();
  top.insert(top.begin() + p.top_pos(ins.before_top), d);
  bottom.insert(bottom.begin() + p.bottom_pos(ins.before_bottom), d);
  return Permutation::from_ids(std::move(top), std::move(bottom), std::move(names));
}

Permutation split_singularity(const Permutation& p, int m11, std::optional<int> m1) {
  if (!is_standard(p)) fail(Errc::NotStandard, "split_singularity needs a standard permutation");
  StratumProfile before = stratum_profile(p);
  const int order = m1 ? *m1 : before.orders.back();
  if (order < 2 || std::find(before.orders.begin(), before.orders.end(), order) == before.orders.end())
    fail(Errc::NoSuchSingularity, "no singularity of order " + std::to_string(order));
  if (m11 < 1 || m11 > order - 1) fail(Errc::BadSplit, "m11 outside 1..m1-1");

  // Top vertex over the chosen cone point: a letter a != t_1 whose top side
  // lies in the orbit, with the smallest top position.
  std::vector<ConePoint> points = cone_points(p);
  Letter alpha = -1;
  for (int j = 1; j < p.size() && alpha < 0; ++j) {
    int side = OrbitMap::encode(p.top()[j], 0);
    for (const ConePoint& c : points)
      if (c.order == order && std::find(c.sides.begin(), c.sides.end(), side) != c.sides.end())
        alpha = p.top()[j];
  }
  if (alpha < 0) fail(Errc::BadSplit, "no top vertex over the singularity");

  const OrbitMap s = orbit_map(p);
  const int ex1 = OrbitMap::encode(p.top()[0], 0);
  const int ex2 = OrbitMap::encode(p.bottom().back(), 1);
  const int start = OrbitMap::encode(alpha, 0);
  std::vector<int> ordered;
  int x = start;
  do {
    if (x != ex1 && x != ex2) ordered.push_back(x);
    x = s.next[x];
  } while (x != start);
  if (static_cast<int>(ordered.size()) != 2 + 2 * order) fail(Errc::BadSplit, "orbit size");
  const int pick = ordered[2 + 2 * m11];  // the (3 + 2 m11)-th element
  if (pick % 2 != 0) fail(Errc::BadSplit, "selected side is not on the top row");
  const Letter beta = pick / 2;

  Permutation q = simple_extension(p, Insertion{alpha, beta, ""});
  StratumProfile after = stratum_profile(q);
  std::vector<int> expected = before.orders;
  expected.erase(std::find(expected.begin(), expected.end(), order));
  expected.push_back(m11);
  expected.push_back(order - m11);
  std::sort(expected.begin(), expected.end());
  if (after.orders != expected || after.genus != before.genus)
    fail(Errc::BadSplit, "resulting profile " + stratum_name(after));
  return q;
}

Walk extension_map_on_walk(const Walk& w, const Insertion& ins) {
  Walk out{simple_extension(w.start, ins), {}};
  for (const Arrow& a : w.arrows) {
    int steps = 1;
    if (a.kind == ArrowKind::Top) {
      if (ins.before_bottom == a.source.bottom_last()) steps = 2;
    } else if (a.kind == ArrowKind::Bottom) {
      if (ins.before_top == a.source.top_last()) steps = 2;
    } else {
      fail(Errc::IllegalInsertion, "extension map is defined on forward walks");
    }
    for (int i = 0; i < steps; ++i) out.append(rauzy_step(out.end(), a.kind));
    if (!(out.end() == simple_extension(a.target, ins)))
      fail(Errc::IllegalInsertion, "extended arrow misses the extended target");
  }
  return out;
}

namespace reps {

namespace {

Permutation from_ints(const std::vector<int>& top, const std::vector<int>& bottom) {
  std::vector<std::string> t, b;
  for (int x : top) t.push_back(std::to_string(x));
  for (int x : bottom) b.push_back(std::to_string(x));
  return Permutation::from_names(t, b);
}

std::vector<int> minimal_top(int g) {
  std::vector<int> top{0, 1};
  for (int k = 1; k <= g - 1; ++k) {
    top.push_back(3 * k - 1);
    top.push_back(3 * k);
  }
  return top;
}

}  // namespace

Permutation tau_minimal(int g) {
  if (g < 3) fail(Errc::OutOfRange, "tau_minimal needs g >= 3");
  std::vector<int> bottom;
  for (int k = 1; k <= g - 1; ++k) {
    bottom.push_back(3 * k);
    bottom.push_back(3 * k - 1);
  }
  bottom.push_back(1);
  bottom.push_back(0);
  return from_ints(minimal_top(g), bottom);
}

Permutation sigma_minimal(int g) {
  if (g < 4) fail(Errc::OutOfRange, "sigma_minimal needs g >= 4");
  std::vector<int> bottom{6, 5, 3, 2};
  for (int k = 3; k <= g - 1; ++k) {
    bottom.push_back(3 * k);
    bottom.push_back(3 * k - 1);
  }
  bottom.push_back(1);
  bottom.push_back(0);
  return from_ints(minimal_top(g), bottom);
}

Permutation tau_d(int d) {
  if (d < 6) fail(Errc::OutOfRange, "tau_d needs d >= 6");
  std::vector<int> top(d), bottom;
  std::iota(top.begin(), top.end(), 1);
  for (int x = d; x >= 6; --x) bottom.push_back(x);
  for (int x : {3, 2, 5, 4, 1}) bottom.push_back(x);
  return from_ints(top, bottom);
}

Permutation sigma_d(int d) {
  if (d < 8) fail(Errc::OutOfRange, "sigma_d needs d >= 8");
  std::vector<int> top(d), bottom;
  std::iota(top.begin(), top.end(), 1);
  for (int x = d; x >= 8; --x) bottom.push_back(x);
  for (int x : {3, 2, 7, 6, 5, 4, 1}) bottom.push_back(x);
  return from_ints(top, bottom);
}

Permutation tau_even_zeros(int g) {
  if (g < 3) fail(Errc::OutOfRange, "tau_even_zeros needs g >= 3");
  std::vector<int> top(3 * g - 2), bottom{3, 2};
  std::iota(top.begin(), top.end(), 0);
  for (int k = 1; k <= g - 2; ++k)
    for (int x : {3 * k + 1, 3 * k + 3, 3 * k + 2}) bottom.push_back(x);
  bottom.push_back(1);
  bottom.push_back(0);
  return from_ints(top, bottom);
}

Permutation sigma_even_zeros(int g) {
  if (g < 4) fail(Errc::OutOfRange, "sigma_even_zeros needs g >= 4");
  std::vector<int> top(3 * g - 2), bottom{6, 5, 4, 3, 2};
  std::iota(top.begin(), top.end(), 0);
  for (int k = 2; k <= g - 2; ++k)
    for (int x : {3 * k + 1, 3 * k + 3, 3 * k + 2}) bottom.push_back(x);
  bottom.push_back(1);
  bottom.push_back(0);
  return from_ints(top, bottom);
}

Permutation hyperelliptic(int d) {
  std::vector<int> top(d), bottom(d);
  std::iota(top.begin(), top.end(), 1);
  std::iota(bottom.rbegin(), bottom.rend(), 1);
  return from_ints(top, bottom);
}

Permutation by_name(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(Errc::ParseError, "representative must look like family:n");
  std::string_view family = text.substr(0, colon), arg = text.substr(colon + 1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) fail(Errc::ParseError, "bad family parameter");
  if (family == "tau-min") return tau_minimal(n);
  if (family == "sigma-min") return sigma_minimal(n);
  if (family == "tau-d") return tau_d(n);
  if (family == "sigma-d") return sigma_d(n);
  if (family == "tau-even") return tau_even_zeros(n);
  if (family == "sigma-even") return sigma_even_zeros(n);
  if (family == "hyp") return hyperelliptic(n);
  fail(Errc::ParseError, "unknown family '" + std::string(family) + "'");
}

}  // namespace reps

}  // namespace rauzy
