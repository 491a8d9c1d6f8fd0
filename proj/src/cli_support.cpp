#include "rauzy/cli_support.hpp"

#include <cctype>
#include <charconv>

namespace rauzy::cli {

int exit_code(Errc code) {
  if (is_budget_error(code)) return kBudget;
  if (code == Errc::ParseError) return kParse;
  return kInvalid;
}

void require_valid(const Permutation& p) {
  if (!is_irreducible(p)) fail(Errc::NotIrreducible, "permutation is reducible");
  if (auto w = degeneracy_witness(p))
    fail(Errc::InvalidPermutation, "degenerate: condition " + std::to_string(w->condition) + " holds at j = " +
                                       std::to_string(w->j));
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(Errc::ParseError, "bad integer '" + std::string(s) + "'");
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

}  // namespace

IntVector parse_target(const Permutation& p, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) fail(Errc::ParseError, "empty target");
  IntVector v(p.size(), 0);
  if (s.front() == '(') {
    if (s.back() != ')') fail(Errc::ParseError, "unterminated tuple");
    std::vector<std::int64_t> xs;
    std::size_t i = 1;
    while (i < s.size() - 1) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos || j > s.size() - 1) j = s.size() - 1;
      xs.push_back(parse_int(std::string_view(s).substr(i, j - i)));
      i = j + 1;
    }
    if (static_cast<int>(xs.size()) != p.size())
      fail(Errc::ParseError, "tuple has " + std::to_string(xs.size()) + " entries, expected " + std::to_string(p.size()));
    for (int k = 0; k < p.size(); ++k) v[p.top()[k]] = xs[k];
    return v;
  }
  // Sum of terms [+-][c[*]]e<name>.
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail(Errc::ParseError, "expected + or - in '" + s + "'");
    }
    const std::size_t e = s.find('e', i);
    if (e == std::string::npos) fail(Errc::ParseError, "term without e<letter> in '" + s + "'");
    std::string coeff = s.substr(i, e - i);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    const std::int64_t c = coeff.empty() ? 1 : parse_int(coeff);
    std::size_t end = s.find_first_of("+-", e + 1);
    if (end == std::string::npos) end = s.size();
    const std::string name = s.substr(e + 1, end - e - 1);
    Letter a;
    try {
      a = p.letter(name);
    } catch (const Error&) {
      fail(Errc::ParseError, "unknown letter '" + name + "'");
    }
    v[a] = checked_add(v[a], checked_mul(sign, c));
    i = end;
  }
  return v;
}

std::string bit_tuple(const Permutation& p, std::uint64_t bits) {
  std::string s = "(";
  for (int k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += ((bits >> p.top()[k]) & 1) ? "1" : "0";
  }
  return s + ")";
}

}  // namespace rauzy::cli
