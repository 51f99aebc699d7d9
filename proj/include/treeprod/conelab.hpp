#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treeprod/descriptor.hpp"
#include "treeprod/group.hpp"

namespace treeprod {

/// Stable label -> positive code assignment, in order of first appearance
/// across the descriptors under comparison. Codes feed the t-power
/// separators and the A(j, j) conjugators of the compiler.
class CompileRegistry {
 public:
  int code(const std::string& key);

  static std::string copy_key(const std::string& copy) { return "copy:" + copy; }
  static std::string branch_key(const std::string& label) { return "branch:" + label; }
  static std::string tree_key() { return "tree"; }

  /// Registers every separator and branch key of f, in step order.
  void scan(const Descriptor<Rational>& f);

 private:
  std::map<std::string, int> codes_;
  int next_ = 1;
};

/// Nearest integer to q * n, ties away from zero. Exact whenever n is a
/// multiple of q's denominator.
long long round_scaled(const Rational& q, long long n);

/// LCM of all coordinate and length denominators appearing in f.
long long denominator_lcm(const Descriptor<Rational>& f);

/// Group image of a descriptor at scale n. Each step contributes a t-power
/// separator coded by its space, then its body: plane steps map to
/// A(round(dx*n), round(dy*n)); a tree step from x to y maps to
/// elt(x)^-1 elt(y), where each branch letter (l, len) of a word becomes
/// U B(round(len*n)) U^-1 with U = A(j, j), j = code(l).
GroupElement compile(const Descriptor<Rational>& f, long long n,
                     CompileRegistry& reg);

/// Additive cost budget of f's junction material: separator codes plus
/// 2|U_j| per branch-letter conjugator, summed over all steps.
long long junction_bound(const Descriptor<Rational>& f, CompileRegistry& reg);

struct ConvergeRow {
  long long n = 0;
  long long dist = 0;
  Rational scaled;     // dist / n
  Rational metric;     // D(f, g)
  Rational abs_error;  // |scaled - metric|
  long long bound = 0; // the budget C
  bool within_bound = false;
};

struct ConvergenceReport {
  std::vector<ConvergeRow> rows;
  long long bound = 0;
  Rational max_error_times_n;
  bool all_within_bound = true;
  bool slope_defined = false;
  double loglog_slope = 0.0;
};

/// Compares the scaled group distance with the tree-product metric at each
/// n. With strict = true, n values that are not multiples of the corpus
/// denominator LCM are rejected.
ConvergenceReport converge_check(const Descriptor<Rational>& f,
                                 const Descriptor<Rational>& g,
                                 const std::vector<long long>& ns,
                                 bool strict = true);

/// Seeded pairs over the L1 plane and the tree, with denominators dividing
/// 4 so scales 16, 64, ... are exact.
std::vector<std::pair<Descriptor<Rational>, Descriptor<Rational>>>
descriptor_corpus(std::uint64_t seed, int count);

/// JSON cache of a BFS ball, keyed by normal-form serialization.
void save_bfs_cache(const BfsBall& ball, const std::string& path);
BfsBall load_bfs_cache(const std::string& path);

}  // namespace treeprod
