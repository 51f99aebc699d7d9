#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "treeprod/errors.hpp"
#include "treeprod/numeric.hpp"

namespace treeprod {

enum class Norm { L1, L2, Linf };

/// Which model metric space a point lives in: a normed plane R^n or the
/// branch-word tree. Copies of a plane are distinguished elsewhere (by the
/// copy label on a descriptor step); the tree is a single space.
struct PieceSpec {
  enum class Model { Plane, Tree };

  Model model = Model::Tree;
  int dim = 0;
  Norm norm = Norm::L1;

  static PieceSpec plane(int dim, Norm norm) {
    return PieceSpec{Model::Plane, dim, norm};
  }
  static PieceSpec tree() { return PieceSpec{Model::Tree, 0, Norm::L1}; }

  bool is_tree() const { return model == Model::Tree; }
  bool is_plane() const { return model == Model::Plane; }

  friend bool operator==(const PieceSpec& a, const PieceSpec& b) {
    if (a.model != b.model) return false;
    if (a.is_tree()) return true;
    return a.dim == b.dim && a.norm == b.norm;
  }
};

/// One branch segment of a tree point: follow branch `label` for `length`.
template <class S>
struct TreeLetter {
  std::string label;
  S length{};
};

/// A tree point is a reduced branch word: positive lengths, no two adjacent
/// equal labels. The empty word is the tree's base point.
template <class S>
using TreeWord = std::vector<TreeLetter<S>>;

template <class S>
class PiecePoint {
 public:
  PiecePoint() = default;

  static PiecePoint plane(std::vector<S> coords) {
    PiecePoint p;
    p.coords_ = std::move(coords);
    p.tree_ = false;
    return p;
  }
  static PiecePoint tree(TreeWord<S> word) {
    PiecePoint p;
    p.word_ = std::move(word);
    p.tree_ = true;
    return p;
  }
  static PiecePoint tree_base() { return tree({}); }

  bool is_tree() const { return tree_; }
  const std::vector<S>& coords() const { return coords_; }
  const TreeWord<S>& word() const { return word_; }

 private:
  bool tree_ = false;
  std::vector<S> coords_;
  TreeWord<S> word_;
};

template <class S>
bool point_eq(const PiecePoint<S>& a, const PiecePoint<S>& b) {
  if (a.is_tree() != b.is_tree()) return false;
  if (a.is_tree()) {
    if (a.word().size() != b.word().size()) return false;
    for (size_t i = 0; i < a.word().size(); ++i) {
      if (a.word()[i].label != b.word()[i].label) return false;
      if (!scalar_eq(a.word()[i].length, b.word()[i].length)) return false;
    }
    return true;
  }
  if (a.coords().size() != b.coords().size()) return false;
  for (size_t i = 0; i < a.coords().size(); ++i)
    if (!scalar_eq(a.coords()[i], b.coords()[i])) return false;
  return true;
}

/// Spec-level well-formedness; empty string when fine.
template <class S>
std::string check_spec(const PieceSpec& spec) {
  if (spec.is_tree()) return {};
  if (spec.dim < 1) return "plane dimension must be at least 1";
  if (spec.norm == Norm::L2 && scalar_traits<S>::exact)
    return "L2 planes are float-only";
  return {};
}

template <class S>
std::string check_point(const PieceSpec& spec, const PiecePoint<S>& p) {
  if (auto bad = check_spec<S>(spec); !bad.empty()) return bad;
  if (spec.is_tree()) {
    if (!p.is_tree()) return "plane point in a tree spec";
    const auto& w = p.word();
    for (size_t i = 0; i < w.size(); ++i) {
      if (scalar_le(w[i].length, S{})) return "tree word with non-positive length";
      if (i > 0 && w[i].label == w[i - 1].label)
        return "tree word with adjacent equal labels";
    }
    return {};
  }
  if (p.is_tree()) return "tree point in a plane spec";
  if (static_cast<int>(p.coords().size()) != spec.dim)
    return "coordinate count does not match dimension";
  return {};
}

template <class S>
void require_point(const PieceSpec& spec, const PiecePoint<S>& p) {
  std::string bad = check_point(spec, p);
  if (bad.empty()) return;
  if (bad.find("L2") != std::string::npos) throw NormUnsupported(bad);
  if (spec.is_tree() || p.is_tree()) {
    if (bad.find("tree word") != std::string::npos) throw InvalidTreeWord(bad);
  }
  throw DimensionMismatch(bad);
}

namespace detail {

template <class S>
S tree_length(const TreeWord<S>& w) {
  S total{};
  for (const auto& letter : w) total += letter.length;
  return total;
}

/// Measure of the longest common prefix of two reduced words.
template <class S>
S tree_common_prefix(const TreeWord<S>& x, const TreeWord<S>& y) {
  S common{};
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    if (x[i].label != y[i].label) break;
    if (scalar_eq(x[i].length, y[i].length)) {
      common += x[i].length;
      continue;
    }
    common += x[i].length < y[i].length ? x[i].length : y[i].length;
    break;
  }
  return common;
}

/// Initial subword of measure `target` (0 <= target <= |w|).
template <class S>
TreeWord<S> tree_truncate(const TreeWord<S>& w, const S& target) {
  TreeWord<S> out;
  S acc{};
  for (const auto& letter : w) {
    if (scalar_eq(acc, target)) break;
    S room = target - acc;
    if (scalar_le(letter.length, room)) {
      out.push_back(letter);
      acc += letter.length;
    } else {
      out.push_back({letter.label, room});
      break;
    }
  }
  return out;
}

}  // namespace detail

template <class S>
S piece_dist(const PieceSpec& spec, const PiecePoint<S>& x,
             const PiecePoint<S>& y) {
  require_point(spec, x);
  require_point(spec, y);
  if (spec.is_tree()) {
    S lx = detail::tree_length(x.word());
    S ly = detail::tree_length(y.word());
    S common = detail::tree_common_prefix(x.word(), y.word());
    return lx + ly - common - common;
  }
  const auto& a = x.coords();
  const auto& b = y.coords();
  switch (spec.norm) {
    case Norm::L1: {
      S sum{};
      for (int i = 0; i < spec.dim; ++i) sum += scalar_abs<S>(b[i] - a[i]);
      return sum;
    }
    case Norm::Linf: {
      S best{};
      for (int i = 0; i < spec.dim; ++i) {
        S d = scalar_abs<S>(b[i] - a[i]);
        if (best < d) best = d;
      }
      return best;
    }
    case Norm::L2: {
      if constexpr (scalar_traits<S>::exact) {
        throw NormUnsupported("L2 planes are float-only");
      } else {
        S sum{};
        for (int i = 0; i < spec.dim; ++i) sum += (b[i] - a[i]) * (b[i] - a[i]);
        return std::sqrt(sum);
      }
    }
  }
  throw Error("unreachable norm");
}

/// Deterministic geodesic choice when the norm admits several. L1 moves one
/// coordinate at a time; Reversed processes coordinates last-to-first and is
/// only distinct from CoordinateOrder for L1.
enum class PathSelector { CoordinateOrder, ReversedOrder };

template <class S>
PiecePoint<S> piece_geodesic_eval(const PieceSpec& spec, const PiecePoint<S>& x,
                                  const PiecePoint<S>& y, const S& u,
                                  PathSelector sel = PathSelector::CoordinateOrder) {
  S d = piece_dist(spec, x, y);
  if (scalar_lt(u, S{}) || scalar_lt(d, u)) throw OutOfRange("parameter outside [0, dist]");
  if (scalar_eq(u, S{})) return x;
  if (scalar_eq(u, d)) return y;

  if (spec.is_tree()) {
    S lx = detail::tree_length(x.word());
    S common = detail::tree_common_prefix(x.word(), y.word());
    S back = lx - common;  // backward walk along x down to the meet point
    if (scalar_le(u, back))
      return PiecePoint<S>::tree(detail::tree_truncate(x.word(), S(lx - u)));
    return PiecePoint<S>::tree(
        detail::tree_truncate(y.word(), S(u - lx + common + common)));
  }

  const auto& a = x.coords();
  const auto& b = y.coords();
  std::vector<S> p = a;
  switch (spec.norm) {
    case Norm::L1: {
      S rem = u;
      for (int idx = 0; idx < spec.dim; ++idx) {
        int i = sel == PathSelector::CoordinateOrder ? idx : spec.dim - 1 - idx;
        S leg = scalar_abs<S>(b[i] - a[i]);
        if (scalar_le(leg, rem)) {
          p[i] = b[i];
          rem -= leg;
        } else {
          p[i] = a[i] < b[i] ? S(a[i] + rem) : S(a[i] - rem);
          break;
        }
      }
      break;
    }
    case Norm::Linf: {
      // Every coordinate advances at unit speed until it reaches its target.
      for (int i = 0; i < spec.dim; ++i) {
        S leg = scalar_abs<S>(b[i] - a[i]);
        S move = scalar_le(leg, u) ? leg : u;
        p[i] = a[i] < b[i] ? S(a[i] + move) : S(a[i] - move);
      }
      break;
    }
    case Norm::L2: {
      if constexpr (!scalar_traits<S>::exact) {
        S f = u / d;
        for (int i = 0; i < spec.dim; ++i) p[i] = a[i] + f * (b[i] - a[i]);
      }
      break;
    }
  }
  return PiecePoint<S>::plane(std::move(p));
}

/// Representative of the Isom-orbit of an ordered pair of distinct points.
template <class S>
struct CanonicalPair {
  PieceSpec spec;
  PiecePoint<S> first, second;

  S separation() const { return piece_dist(spec, first, second); }
};

template <class S>
bool cpair_eq(const CanonicalPair<S>& a, const CanonicalPair<S>& b) {
  return a.spec == b.spec && point_eq(a.first, b.first) &&
         point_eq(a.second, b.second);
}

template <class S>
CanonicalPair<S> canonical_pair(const PieceSpec& spec, const PiecePoint<S>& x,
                                const PiecePoint<S>& y) {
  S d = piece_dist(spec, x, y);
  if (scalar_eq(d, S{})) throw EqualPoints("canonical pair needs distinct points");
  if (spec.is_tree()) {
    TreeWord<S> w;
    w.push_back({"0", d});
    return {spec, PiecePoint<S>::tree_base(), PiecePoint<S>::tree(std::move(w))};
  }
  std::vector<S> zero(spec.dim, S{});
  if (spec.norm == Norm::L2) {
    std::vector<S> rep(spec.dim, S{});
    rep[0] = d;
    return {spec, PiecePoint<S>::plane(std::move(zero)),
            PiecePoint<S>::plane(std::move(rep))};
  }
  // Signed permutations: the orbit invariant is the multiset of |deltas|.
  std::vector<S> diffs(spec.dim);
  for (int i = 0; i < spec.dim; ++i)
    diffs[i] = scalar_abs<S>(y.coords()[i] - x.coords()[i]);
  std::sort(diffs.begin(), diffs.end(), [](const S& a, const S& b) { return b < a; });
  return {spec, PiecePoint<S>::plane(std::move(zero)),
          PiecePoint<S>::plane(std::move(diffs))};
}

template <class S>
bool same_orbit(const PieceSpec& spec, const PiecePoint<S>& x,
                const PiecePoint<S>& y, const PiecePoint<S>& x2,
                const PiecePoint<S>& y2) {
  return cpair_eq(canonical_pair(spec, x, y), canonical_pair(spec, x2, y2));
}

template <class S>
PiecePoint<S> base_point(const PieceSpec& spec) {
  if (spec.is_tree()) return PiecePoint<S>::tree_base();
  return PiecePoint<S>::plane(std::vector<S>(spec.dim, S{}));
}

}  // namespace treeprod
