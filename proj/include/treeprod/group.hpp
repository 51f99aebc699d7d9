#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treeprod/errors.hpp"

namespace treeprod {

/// One syllable of the free product Z^2 * Z: either a^m b^k with
/// (m, k) != (0, 0), or t^t_pow with t_pow != 0.
struct Syllable {
  bool plane = true;
  long long m = 0, k = 0;  // plane factor
  long long t = 0;         // cyclic factor

  static Syllable ab(long long m, long long k) { return {true, m, k, 0}; }
  static Syllable tt(long long t) { return {false, 0, 0, t}; }

  bool is_zero() const { return plane ? (m == 0 && k == 0) : t == 0; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Alternating-syllable normal form; the empty list is the identity.
class GroupElement {
 public:
  GroupElement() = default;

  /// Normalizes: merges same-factor neighbors, drops zero syllables.
  static GroupElement from_syllables(const std::vector<Syllable>& syls);

  static GroupElement identity() { return {}; }

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }

  /// Right-multiplies by one syllable, keeping normal form.
  void push(const Syllable& s);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<Syllable> syls_;
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// Word length over the generators {a, b, t} and inverses:
/// |a^m b^k| = |m| + |k| inside Z^2, |t^p| = |p|, summed over syllables.
long long word_length(const GroupElement& g);

long long group_dist(const GroupElement& g, const GroupElement& h);

/// A single generator letter with exponent; gen is 'a', 'b' or 't'.
struct Letter {
  char gen;
  long long exp;
};

GroupElement normal_form(const std::vector<Letter>& word);

/// Parses "a t a-1 b2 t-3" (letter with optional signed exponent, spaces
/// between letters); throws ParseError on anything else.
std::vector<Letter> parse_letters(std::string_view text);

/// Compact serialization of a normal form, e.g. "A3,-2;B5;A1,0".
std::string element_key(const GroupElement& g);
GroupElement parse_element_key(std::string_view key);

/// Exact distances for the whole closed ball of the given radius in the
/// Cayley graph of Z^2 * Z over {a, b, t}^{+-1}, sphere by sphere.
struct BfsBall {
  int radius = 0;
  std::vector<std::pair<GroupElement, int>> elements;  // BFS order
};

BfsBall bfs_oracle(int radius);

}  // namespace treeprod
