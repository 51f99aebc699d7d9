#pragma once

#include <string>
#include <vector>

#include "treeprod/geometry.hpp"

namespace treeprod {

/// One labeled interval of a type: the direction crosses a piece between arc
/// lengths a and b, through a pair of points in the given canonical orbit.
template <class S>
struct TypeInterval {
  S a{}, b{};
  CanonicalPair<S> cpair;
};

/// The itinerary of a limit direction: which canonical piece-pairs it
/// traverses and where. Gaps between intervals are transversal-tree travel.
/// The initial gap is always positive; an empty interval list is the trivial
/// type (pure tree travel).
template <class S>
struct QType {
  S total{};
  std::vector<TypeInterval<S>> intervals;

  bool trivial() const { return intervals.empty(); }
};

template <class S>
bool qtype_eq(const QType<S>& x, const QType<S>& y) {
  if (!scalar_eq(x.total, y.total)) return false;
  if (x.intervals.size() != y.intervals.size()) return false;
  for (size_t i = 0; i < x.intervals.size(); ++i) {
    const auto& p = x.intervals[i];
    const auto& q = y.intervals[i];
    if (!scalar_eq(p.a, q.a) || !scalar_eq(p.b, q.b)) return false;
    if (!cpair_eq(p.cpair, q.cpair)) return false;
  }
  return true;
}

/// Structural soundness; empty string when fine. Intervals may touch (two
/// pieces meeting in a point) but the first must start after 0.
template <class S>
std::string check_qtype(const QType<S>& t) {
  if (scalar_le(t.total, S{})) return "total must be positive";
  S prev_b{};
  bool first = true;
  for (const auto& iv : t.intervals) {
    if (iv.cpair.spec.is_tree()) return "interval pairs must be plane pairs";
    if (first && scalar_le(iv.a, S{})) return "first interval must start after 0";
    if (!first && scalar_lt(iv.a, prev_b)) return "intervals must be disjoint and sorted";
    if (scalar_le(iv.b, iv.a)) return "interval must have positive length";
    if (!scalar_eq(S(iv.b - iv.a), iv.cpair.separation()))
      return "interval length must equal the pair separation";
    prev_b = iv.b;
    first = false;
  }
  if (!t.intervals.empty() && scalar_lt(t.total, t.intervals.back().b))
    return "intervals must end by total";
  return {};
}

enum class DirectionKind { Trivial, NonLimit, Limit };

template <class S>
struct DirectionType {
  DirectionKind kind = DirectionKind::Trivial;
  QType<S> type;  // meaningful only for Limit
};

/// Type of the direction from the base point toward f. Plane-first
/// directions have no type (non-limit); otherwise plane steps become the
/// labeled intervals and tree steps the gaps.
template <class S>
DirectionType<S> type_of(const Descriptor<S>& f) {
  DirectionType<S> out;
  if (f.is_empty()) {
    out.kind = DirectionKind::Trivial;
    return out;
  }
  if (!f.steps().front().alpha.is_tree()) {
    out.kind = DirectionKind::NonLimit;
    return out;
  }
  out.kind = DirectionKind::Limit;
  S pos{};
  for (const auto& step : f.steps()) {
    S len = step.length();
    if (!step.alpha.is_tree()) {
      out.type.intervals.push_back(TypeInterval<S>{
          pos, pos + len, canonical_pair(step.alpha.spec, step.entry, step.exit)});
    }
    pos += len;
  }
  out.type.total = pos;
  return out;
}

/// Restriction of a type to ]0, r[. r must not cut an interval.
template <class S>
QType<S> initial_subtype(const QType<S>& t, const S& r) {
  if (scalar_le(r, S{}) || scalar_lt(t.total, r))
    throw OutOfRange("subtype length outside ]0, total]");
  QType<S> out;
  out.total = r;
  for (const auto& iv : t.intervals) {
    if (scalar_lt(iv.a, r) && scalar_lt(r, iv.b))
      throw RInsideInterval("cut point interior to an interval");
    if (scalar_le(iv.b, r)) out.intervals.push_back(iv);
  }
  return out;
}

/// Equivalence of nontrivial types: equality of some nontrivial initial
/// subtype, which for finite types reduces to equality of the first
/// intervals.
template <class S>
bool types_equivalent(const QType<S>& x, const QType<S>& y) {
  if (x.trivial() || y.trivial())
    throw TrivialInput("types_equivalent needs nontrivial types");
  const auto& p = x.intervals.front();
  const auto& q = y.intervals.front();
  return scalar_eq(p.a, q.a) && scalar_eq(p.b, q.b) && cpair_eq(p.cpair, q.cpair);
}

inline std::string derive_label(const std::string& salt, int index) {
  return salt + ":" + std::to_string(index);
}

/// Builds a direction of the given type out of `at`, using salted fresh
/// labels so distinct salts give directions into distinct components.
template <class S>
Descriptor<S> realize_type(const Descriptor<S>& at, const QType<S>& t,
                           const std::string& salt) {
  if (std::string bad = check_qtype(t); !bad.empty()) throw Error("bad type: " + bad);
  std::vector<Step<S>> steps;
  S pos{};
  int index = 0;
  auto tree_gap = [&](const S& len) {
    TreeWord<S> w;
    w.push_back({derive_label(salt, index++), len});
    steps.push_back(Step<S>{Alpha::tree(), PiecePoint<S>::tree_base(),
                            PiecePoint<S>::tree(std::move(w))});
  };
  for (const auto& iv : t.intervals) {
    if (scalar_lt(pos, iv.a)) tree_gap(iv.a - pos);
    steps.push_back(Step<S>{
        Alpha::piece(iv.cpair.spec, derive_label(salt, index++)),
        iv.cpair.first, iv.cpair.second});
    pos = iv.b;
  }
  if (scalar_lt(pos, t.total)) tree_gap(t.total - pos);
  Descriptor<S> g(std::move(steps));
  return phi_inv(at, g);
}

/// N directions of type t out of `at`, pairwise in different components.
template <class S>
std::vector<Descriptor<S>> distinct_components(const Descriptor<S>& at,
                                               const QType<S>& t, int n) {
  std::vector<Descriptor<S>> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(realize_type(at, t, std::to_string(i)));
  return out;
}

template <class S>
struct PieceWitnesses {
  std::vector<PiecePlacement<S>> placements;
  std::vector<Descriptor<S>> witnesses;
};

/// N distinct copies of a plane spec attached at `at`, each witnessed by a
/// unit step into the copy.
template <class S>
PieceWitnesses<S> distinct_pieces(const Descriptor<S>& at, const PieceSpec& spec,
                                  int n) {
  if (spec.is_tree()) throw TreeSpec("distinct_pieces needs a plane spec");
  if (std::string bad = check_spec<S>(spec); !bad.empty()) throw UnsupportedSpec(bad);
  PieceWitnesses<S> out;
  std::vector<S> unit(spec.dim, S{});
  unit[0] = S(1);
  PiecePoint<S> target = PiecePoint<S>::plane(std::move(unit));
  for (int i = 0; i < n; ++i) {
    Alpha alpha = Alpha::piece(spec, derive_label("p", i));
    out.placements.push_back(
        detail::normalize_placement(at, alpha, base_point<S>(spec)));
    out.witnesses.push_back(
        phi_inv(at, make_single_step(alpha, base_point<S>(spec), target)));
  }
  return out;
}

}  // namespace treeprod
