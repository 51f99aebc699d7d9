#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "treeprod/descriptor.hpp"

namespace treeprod {

namespace detail {

template <class S>
std::vector<Step<S>> slice(const Descriptor<S>& f, std::size_t from) {
  const auto& s = f.steps();
  return std::vector<Step<S>>(s.begin() + static_cast<std::ptrdiff_t>(from),
                              s.end());
}

template <class S>
std::vector<Step<S>> reversed_slice(const Descriptor<S>& f, std::size_t from) {
  std::vector<Step<S>> out;
  const auto& s = f.steps();
  out.reserve(s.size() - from);
  for (std::size_t i = s.size(); i > from; --i)
    out.push_back(Step<S>{s[i - 1].alpha, s[i - 1].exit, s[i - 1].entry});
  return out;
}

template <class S>
Descriptor<S> checked(std::vector<Step<S>> steps, const char* op) {
  Descriptor<S> d(std::move(steps));
  ValidationReport report = validate(d);
  if (!report.ok())
    throw InternalValidation(std::string(op) + " produced " + report.describe());
  return d;
}

}  // namespace detail

/// The isometry taking f to the base point. Its image of g walks backward
/// along f to the divergence, bridges inside the shared piece when there is
/// one, and continues along g.
template <class S>
Descriptor<S> phi(const Descriptor<S>& f, const Descriptor<S>& g) {
  DivergenceResult<S> dv = divergence(f, g);
  std::size_t j = dv.common_steps;
  std::vector<Step<S>> out;
  if (dv.pair_case == PairCase::Case1) {
    out = detail::reversed_slice(f, j + 1);
    out.push_back(Step<S>{dv.alpha, dv.exit_f, dv.exit_g});
    auto tail = detail::slice(g, j + 1);
    out.insert(out.end(), tail.begin(), tail.end());
  } else {
    out = detail::reversed_slice(f, j);
    auto tail = detail::slice(g, j);
    out.insert(out.end(), tail.begin(), tail.end());
  }
  return detail::checked(std::move(out), "phi");
}

/// Inverse translation: the unique h with phi(f, h) = g, built by matching g
/// against the reversal of f.
template <class S>
Descriptor<S> phi_inv(const Descriptor<S>& f, const Descriptor<S>& g) {
  Descriptor<S> fhat = reverse(f);
  DivergenceResult<S> dv = divergence(fhat, g);
  std::size_t j = dv.common_steps;
  std::size_t k = f.size();
  std::vector<Step<S>> out;
  const auto& fs = f.steps();
  if (dv.pair_case == PairCase::Case1) {
    // fhat's diverging step is the reversal of f's step k-j-1.
    out.assign(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k - j - 1));
    out.push_back(Step<S>{dv.alpha, dv.exit_f, dv.exit_g});
    auto tail = detail::slice(g, j + 1);
    out.insert(out.end(), tail.begin(), tail.end());
  } else {
    out.assign(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k - j));
    auto tail = detail::slice(g, j);
    out.insert(out.end(), tail.begin(), tail.end());
  }
  return detail::checked(std::move(out), "phi_inv");
}

/// Point at arc length t on the canonical geodesic from f to g.
template <class S>
Descriptor<S> geodesic_point(const Descriptor<S>& f, const Descriptor<S>& g,
                             const S& t,
                             PathSelector sel = PathSelector::CoordinateOrder) {
  Descriptor<S> image = phi(f, g);
  return phi_inv(f, restrict_prefix(image, t, sel));
}

/// A piece of the space: the copy of alpha's model attached to the endpoint
/// of `prefix` through `entry`. Canonical form: the prefix never ends with a
/// step of the same alpha arriving at `entry`.
template <class S>
struct PiecePlacement {
  Descriptor<S> prefix;
  Alpha alpha;
  PiecePoint<S> entry;
};

namespace detail {

template <class S>
PiecePlacement<S> normalize_placement(Descriptor<S> prefix, Alpha alpha,
                                      PiecePoint<S> entry) {
  if (!prefix.is_empty()) {
    const Step<S>& last = prefix.steps().back();
    if (last.alpha == alpha && point_eq(last.exit, entry)) {
      std::vector<Step<S>> trimmed = prefix.steps();
      PiecePoint<S> attach = last.entry;
      trimmed.pop_back();
      return {Descriptor<S>(std::move(trimmed)), std::move(alpha),
              std::move(attach)};
    }
  }
  return {std::move(prefix), std::move(alpha), std::move(entry)};
}

}  // namespace detail

/// Descriptor of the placement's model point y.
template <class S>
Descriptor<S> placement_point(const PiecePlacement<S>& pl, const PiecePoint<S>& y) {
  if (point_eq(pl.entry, y)) return pl.prefix;
  return concat_normalized(pl.prefix, make_single_step(pl.alpha, pl.entry, y));
}

/// Median of a triangle: either a single point or a piece with three gate
/// points (toward f, g, h respectively) through which the sides pass.
template <class S>
struct Median {
  bool is_point = true;
  Descriptor<S> point;

  PiecePlacement<S> placement;
  PiecePoint<S> gate_a, gate_b, gate_c;
};

template <class S>
Median<S> median(const Descriptor<S>& f, const Descriptor<S>& g,
                 const Descriptor<S>& h) {
  Descriptor<S> gi = phi(f, g);
  Descriptor<S> hi = phi(f, h);
  DivergenceResult<S> dv = divergence(gi, hi);
  std::vector<Step<S>> prefix_steps(
      gi.steps().begin(),
      gi.steps().begin() + static_cast<std::ptrdiff_t>(dv.common_steps));
  Descriptor<S> back = phi_inv(f, Descriptor<S>(std::move(prefix_steps)));
  Median<S> m;
  if (dv.pair_case == PairCase::Case2) {
    m.is_point = true;
    m.point = std::move(back);
    return m;
  }
  m.is_point = false;
  m.gate_a = dv.entry;
  m.gate_b = dv.exit_f;  // toward g: first argument of divergence(gi, hi)
  m.gate_c = dv.exit_g;  // toward h
  m.placement = detail::normalize_placement(std::move(back), dv.alpha, dv.entry);
  return m;
}

enum class ComponentRelation { Same, Different };

/// Do g and h lie in the same connected component when `center` is removed?
template <class S>
ComponentRelation component_relation(const Descriptor<S>& center,
                                     const Descriptor<S>& g,
                                     const Descriptor<S>& h) {
  if (descriptor_eq(center, g) || descriptor_eq(center, h))
    throw CenterEqualsPoint("component_relation needs points distinct from center");
  Descriptor<S> gi = phi(center, g);
  Descriptor<S> hi = phi(center, h);
  DivergenceResult<S> dv = divergence(gi, hi);
  if (scalar_lt(S{}, dv.s)) return ComponentRelation::Same;
  if (dv.pair_case == PairCase::Case2) return ComponentRelation::Different;
  if (!dv.alpha.is_tree()) return ComponentRelation::Same;
  // In the tree, the entry point separates its branches: same side exactly
  // when the geodesic between the exits misses it.
  S through = piece_dist(dv.alpha.spec, dv.exit_f, dv.entry) +
              piece_dist(dv.alpha.spec, dv.entry, dv.exit_g);
  S direct = piece_dist(dv.alpha.spec, dv.exit_f, dv.exit_g);
  return scalar_lt(direct, through) ? ComponentRelation::Same
                                    : ComponentRelation::Different;
}

template <class S>
struct DirectionClass {
  bool limit = false;
  PiecePlacement<S> placement;  // meaningful only when !limit
};

/// A direction out of `center` either starts inside a plane piece (non-limit,
/// with that piece's placement) or enters the transversal tree (limit).
template <class S>
DirectionClass<S> classify_direction(const Descriptor<S>& center,
                                     const Descriptor<S>& g) {
  if (descriptor_eq(center, g))
    throw CenterEqualsPoint("classify_direction needs a point distinct from center");
  Descriptor<S> gi = phi(center, g);
  if (gi.is_empty())
    throw CenterEqualsPoint("point indistinguishable from center");
  const Step<S>& first = gi.steps().front();
  DirectionClass<S> out;
  if (first.alpha.is_tree()) {
    out.limit = true;
    return out;
  }
  out.limit = false;
  out.placement = detail::normalize_placement(center, first.alpha, first.entry);
  return out;
}

/// Per-spec point maps inducing a map between tree products. Plane specs are
/// mapped through the listed entries; tree steps carry over unchanged.
template <class S>
struct PieceMap {
  struct Entry {
    PieceSpec source;
    PieceSpec target;
    std::function<PiecePoint<S>(const PiecePoint<S>&)> map;
  };
  std::vector<Entry> entries;
};

/// Identity-coordinate map between two plane specs of equal dimension.
template <class S>
typename PieceMap<S>::Entry identity_coords_entry(const PieceSpec& source,
                                                  const PieceSpec& target) {
  return {source, target, [](const PiecePoint<S>& p) { return p; }};
}

template <class S>
Descriptor<S> map_pieces(const Descriptor<S>& f, const PieceMap<S>& pm) {
  std::vector<Step<S>> out;
  out.reserve(f.size());
  for (const auto& step : f.steps()) {
    if (step.alpha.is_tree()) {
      out.push_back(step);
      continue;
    }
    const typename PieceMap<S>::Entry* entry = nullptr;
    for (const auto& e : pm.entries) {
      if (e.source == step.alpha.spec) {
        entry = &e;
        break;
      }
    }
    if (!entry) throw SpecNotMapped("no map entry for a step's spec");
    out.push_back(Step<S>{Alpha::piece(entry->target, step.alpha.copy),
                          entry->map(step.entry), entry->map(step.exit)});
  }
  return detail::checked(std::move(out), "map_pieces");
}

}  // namespace treeprod
