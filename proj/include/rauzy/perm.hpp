#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rauzy {

using Letter = int;

/// Generalized permutation on letters 0..d-1, stored as its two rows.
/// Letter ids are fixed at construction and survive Rauzy moves, so the
/// intersection forms of all vertices of a class share one coordinate system.
/// User-facing names live in a shared side table.
class Permutation {
 public:
  Permutation() = default;

  // Letters get ids in order of appearance on the top row.
  static Permutation from_names(const std::vector<std::string>& top,
                                const std::vector<std::string>& bottom);
  // Rows given by ids; names default to the decimal ids.
  static Permutation from_ids(std::vector<Letter> top, std::vector<Letter> bottom,
                              std::shared_ptr<const std::vector<std::string>> names = nullptr);
  // Two lines of whitespace-separated letter names.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(top_.size()); }
  const std::vector<Letter>& top() const { return top_; }
  const std::vector<Letter>& bottom() const { return bottom_; }
  Letter top_last() const { return top_.back(); }
  Letter bottom_last() const { return bottom_.back(); }
  // 0-based positions.
  int top_pos(Letter a) const { return top_pos_[a]; }
  int bottom_pos(Letter a) const { return bottom_pos_[a]; }

  const std::string& name(Letter a) const { return (*names_)[a]; }
  const std::shared_ptr<const std::vector<std::string>>& names() const { return names_; }
  Letter letter(std::string_view name) const;  // OutOfRange if absent

  std::string encode() const;  // compact key over ids
  std::string to_text() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }

 private:
  void index();

  std::vector<Letter> top_, bottom_;
  std::vector<int> top_pos_, bottom_pos_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_irreducible(const Permutation& p);

struct DegeneracyWitness {
  int condition;  // 1, 2 or 3
  int j;          // 1-based index in the top row
};
std::optional<DegeneracyWitness> degeneracy_witness(const Permutation& p);
bool is_degenerate(const Permutation& p);
// Last top letter is first on the bottom and first top letter is last on the bottom.
bool is_standard(const Permutation& p);

enum class ArrowKind { Top, Bottom, InverseTop, InverseBottom };
const char* arrow_kind_name(ArrowKind k);

/// A labeled arrow of a Rauzy diagram. For inverse kinds, winner and loser are
/// those of the forward arrow target -> source.
struct Arrow {
  Permutation source;
  ArrowKind kind;
  Letter winner;
  Letter loser;
  Permutation target;
};

Arrow rauzy_step(const Permutation& p, ArrowKind kind);

struct Walk {
  Permutation start;
  std::vector<Arrow> arrows;

  const Permutation& end() const { return arrows.empty() ? start : arrows.back().target; }
  void append(const Arrow& a);  // NotComposable unless a.source == end()
  void append(const Walk& w);
  Walk inverse() const;
  bool is_cycle() const { return end() == start; }
};

/// Vertices of a Rauzy class sorted by encoding, with forward arrow targets.
class RauzyClass {
 public:
  const std::vector<Permutation>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Target indices of the top and bottom arrows out of vertex i.
  const std::array<int, 2>& out(int i) const { return out_[i]; }
  std::optional<int> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  friend RauzyClass rauzy_class(const Permutation&, std::size_t);
  std::vector<Permutation> vertices_;
  std::vector<std::array<int, 2>> out_;
  std::unordered_map<std::string, int> index_;
};

RauzyClass rauzy_class(const Permutation& p, std::size_t max_size = 1'000'000);

// Shortest walk from `from` to `to` along forward arrows only.
Walk forward_path(const RauzyClass& c, const Permutation& from, const Permutation& to);
// Shortest walk using arrows in both directions.
Walk undirected_path(const RauzyClass& c, const Permutation& from, const Permutation& to);
// Uniform random walk of `length` arrows in both directions, starting at p.
Walk random_walk(const Permutation& p, int length, std::mt19937_64& rng, bool forward_only = false);
// Random walk followed by the shortest return path.
Walk random_cycle(const RauzyClass& c, const Permutation& p, int length, std::mt19937_64& rng);

/// Successor map on (letter, row) pairs, encoded as 2 * letter + row with
/// row 0 = top and 1 = bottom. It is a bijection exactly when the last top
/// letter is first on the bottom row, e.g. for standard permutations.
struct OrbitMap {
  std::vector<int> next;
  static int encode(Letter a, int row) { return 2 * a + row; }
  bool is_bijection() const;
  std::vector<std::vector<int>> orbits() const;  // each starting at its least element
};
OrbitMap orbit_map(const Permutation& p);

struct StratumProfile {
  std::vector<int> orders;  // ascending
  int genus = 0;
  friend bool operator==(const StratumProfile&, const StratumProfile&) = default;
};
// Orders of the cone points, found by gluing polygon vertices.
StratumProfile stratum_profile(const Permutation& p);
// Same, read off the orbits of s; needs s to be a bijection.
StratumProfile stratum_profile_from_orbits(const Permutation& p);
std::string stratum_name(const StratumProfile& s);

// Erase a letter; the remaining ids are compacted in order.
Permutation simple_reduction(const Permutation& p, Letter a);

struct Insertion {
  Letter before_top;
  Letter before_bottom;
  std::string name;  // name of the fresh letter
};
// Insert a fresh letter (id d) just before the given letters.
Permutation simple_extension(const Permutation& p, const Insertion& ins);

// Split a singularity of order m1 >= 2 of a standard permutation into orders
// (m11, m1 - m11). By default the largest singularity is split.
Permutation split_singularity(const Permutation& p, int m11, std::optional<int> m1 = std::nullopt);

// Image of a forward walk under the extension map determined by `ins`.
Walk extension_map_on_walk(const Walk& w, const Insertion& ins);

namespace reps {
// Minimal stratum, genus g >= 3.
Permutation tau_minimal(int g);
Permutation sigma_minimal(int g);  // g >= 4
// Families indexed by the number of letters.
Permutation tau_d(int d);    // d >= 6
Permutation sigma_d(int d);  // d >= 8
// Strata H(2,...,2) with g - 1 zeros.
Permutation tau_even_zeros(int g);    // g >= 3
Permutation sigma_even_zeros(int g);  // g >= 4
// (1..d / d..1).
Permutation hyperelliptic(int d);
// Parse "tau-min:3", "sigma-d:8", "hyp:5", ...
Permutation by_name(std::string_view text);
}  // namespace reps

}  // namespace rauzy
