#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeprod/pieces.hpp"

namespace treeprod {

/// Identity of the space a step runs through: the tree, or a labeled copy of
/// a plane spec. Two plane copies are the same space only if spec and copy
/// label both agree; the tree is one space and carries no label.
struct Alpha {
  PieceSpec spec;
  std::string copy;

  static Alpha tree() { return Alpha{PieceSpec::tree(), {}}; }
  static Alpha piece(PieceSpec spec, std::string copy) {
    return Alpha{spec, std::move(copy)};
  }

  bool is_tree() const { return spec.is_tree(); }

  friend bool operator==(const Alpha& a, const Alpha& b) {
    if (!(a.spec == b.spec)) return false;
    return a.spec.is_tree() || a.copy == b.copy;
  }
};

/// One traversal of a piece or a transversal-tree segment, from entry to
/// exit. The step's length is the piece distance between its endpoints.
template <class S>
struct Step {
  Alpha alpha;
  PiecePoint<S> entry, exit;

  S length() const { return piece_dist(alpha.spec, entry, exit); }
};

template <class S>
bool step_eq(const Step<S>& a, const Step<S>& b) {
  return a.alpha == b.alpha && point_eq(a.entry, b.entry) &&
         point_eq(a.exit, b.exit);
}

/// A point of the tree product: the finite sequence of entry/exit pairs a
/// path records on its way from the base point. The empty descriptor is the
/// base point itself.
template <class S>
class Descriptor {
 public:
  Descriptor() = default;
  explicit Descriptor(std::vector<Step<S>> steps) : steps_(std::move(steps)) {}

  static Descriptor empty() { return Descriptor{}; }

  const std::vector<Step<S>>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool is_empty() const { return steps_.empty(); }

  S total_length() const {
    S total{};
    for (const auto& s : steps_) total += s.length();
    return total;
  }

  /// b_0 = 0 < b_1 < ... < b_k = total_length().
  std::vector<S> break_points() const {
    std::vector<S> b;
    b.reserve(steps_.size() + 1);
    S acc{};
    b.push_back(acc);
    for (const auto& s : steps_) {
      acc += s.length();
      b.push_back(acc);
    }
    return b;
  }

 private:
  std::vector<Step<S>> steps_;
};

template <class S>
bool descriptor_eq(const Descriptor<S>& f, const Descriptor<S>& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!step_eq(f.steps()[i], g.steps()[i])) return false;
  return true;
}

struct ValidationIssue {
  enum class Kind {
    BadPoint,      // malformed point or spec/mode mismatch
    EqualPoints,   // zero-length step
    FakeExit,      // consecutive steps (x1,x2),(x2,x3) in one space
    Backtracking,  // junction pattern (x,y),(y,x) in one space
  };
  Kind kind;
  std::size_t index = 0;  // step index, or junction index (= later step)
  std::string detail;
};

struct ValidationReport {
  std::optional<ValidationIssue> issue;

  bool ok() const { return !issue.has_value(); }

  std::string describe() const {
    if (ok()) return "ok";
    const char* what = nullptr;
    switch (issue->kind) {
      case ValidationIssue::Kind::BadPoint: what = "bad point"; break;
      case ValidationIssue::Kind::EqualPoints: what = "equal entry and exit"; break;
      case ValidationIssue::Kind::FakeExit: what = "fake exit"; break;
      case ValidationIssue::Kind::Backtracking: what = "backtracking"; break;
    }
    return std::string(what) + " at index " + std::to_string(issue->index) +
           (issue->detail.empty() ? "" : ": " + issue->detail);
  }
};

namespace detail {

/// True when appending `next` after `prev` breaks the no-fake-exit rule.
template <class S>
bool junction_fake_exit(const Step<S>& prev, const Step<S>& next) {
  return prev.alpha == next.alpha && point_eq(prev.exit, next.entry);
}

/// The reversal pattern; subsumed by the fake-exit check but still verified
/// on its own at every junction.
template <class S>
bool junction_backtracking(const Step<S>& prev, const Step<S>& next) {
  return prev.alpha == next.alpha && point_eq(prev.exit, next.entry) &&
         point_eq(prev.entry, next.exit);
}

}  // namespace detail

template <class S>
ValidationReport validate(const Descriptor<S>& f) {
  const auto& steps = f.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    std::string bad = check_point(s.alpha.spec, s.entry);
    if (bad.empty()) bad = check_point(s.alpha.spec, s.exit);
    if (!bad.empty())
      return {ValidationIssue{ValidationIssue::Kind::BadPoint, i, bad}};
    if (point_eq(s.entry, s.exit))
      return {ValidationIssue{ValidationIssue::Kind::EqualPoints, i, {}}};
  }
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (detail::junction_fake_exit(steps[i], steps[i + 1]))
      return {ValidationIssue{ValidationIssue::Kind::FakeExit, i + 1, {}}};
    if (detail::junction_backtracking(steps[i], steps[i + 1]))
      return {ValidationIssue{ValidationIssue::Kind::Backtracking, i + 1, {}}};
  }
  return {};
}

template <class S>
S total_length(const Descriptor<S>& f) {
  return f.total_length();
}

enum class PairCase { Case1, Case2 };

/// Where two descriptors stop agreeing. `s` is the length of the longest
/// common step prefix. Case 1 holds when both continue into the same space
/// through the same entry point (and necessarily exit differently); the
/// Case-1 payload carries the shared entry, both exits, and the end
/// positions a_f, a_g of the two diverging steps.
template <class S>
struct DivergenceResult {
  S s{};
  std::size_t common_steps = 0;
  PairCase pair_case = PairCase::Case2;

  Alpha alpha;
  PiecePoint<S> entry, exit_f, exit_g;
  S a_f{}, a_g{};
};

template <class S>
DivergenceResult<S> divergence(const Descriptor<S>& f, const Descriptor<S>& g) {
  DivergenceResult<S> r;
  const auto& fs = f.steps();
  const auto& gs = g.steps();
  std::size_t j = 0;
  S s{};
  while (j < fs.size() && j < gs.size() && step_eq(fs[j], gs[j])) {
    s += fs[j].length();
    ++j;
  }
  r.s = s;
  r.common_steps = j;
  if (j < fs.size() && j < gs.size() && fs[j].alpha == gs[j].alpha &&
      point_eq(fs[j].entry, gs[j].entry)) {
    r.pair_case = PairCase::Case1;
    r.alpha = fs[j].alpha;
    r.entry = fs[j].entry;
    r.exit_f = fs[j].exit;
    r.exit_g = gs[j].exit;
    r.a_f = s + fs[j].length();
    r.a_g = s + gs[j].length();
  }
  return r;
}

/// The tree-product metric.
template <class S>
S dist(const Descriptor<S>& f, const Descriptor<S>& g) {
  DivergenceResult<S> dv = divergence(f, g);
  if (dv.pair_case == PairCase::Case1) {
    return f.total_length() - dv.a_f + g.total_length() - dv.a_g +
           piece_dist(dv.alpha.spec, dv.exit_f, dv.exit_g);
  }
  return f.total_length() - dv.s + g.total_length() - dv.s;
}

template <class S>
Descriptor<S> reverse(const Descriptor<S>& f) {
  std::vector<Step<S>> out;
  out.reserve(f.size());
  for (auto it = f.steps().rbegin(); it != f.steps().rend(); ++it)
    out.push_back(Step<S>{it->alpha, it->exit, it->entry});
  return Descriptor<S>(std::move(out));
}

/// Initial segment of length t, cutting the step containing t (if any) at
/// the selector's geodesic point.
template <class S>
Descriptor<S> restrict_prefix(const Descriptor<S>& f, const S& t,
                              PathSelector sel = PathSelector::CoordinateOrder) {
  S d = f.total_length();
  if (scalar_lt(t, S{}) || scalar_lt(d, t))
    throw OutOfRange("prefix length outside [0, total]");
  std::vector<Step<S>> out;
  S rem = t;
  for (const auto& step : f.steps()) {
    if (scalar_eq(rem, S{})) break;
    S len = step.length();
    if (scalar_le(len, rem)) {
      out.push_back(step);
      rem -= len;
    } else {
      PiecePoint<S> mid =
          piece_geodesic_eval(step.alpha.spec, step.entry, step.exit, rem, sel);
      out.push_back(Step<S>{step.alpha, step.entry, mid});
      break;
    }
  }
  return Descriptor<S>(std::move(out));
}

/// Raw concatenation; fails when the junction violates the step rules.
template <class S>
std::optional<Descriptor<S>> concat_raw(const Descriptor<S>& f,
                                        const Descriptor<S>& g,
                                        ValidationReport* why = nullptr) {
  if (!f.is_empty() && !g.is_empty()) {
    const auto& prev = f.steps().back();
    const auto& next = g.steps().front();
    if (detail::junction_fake_exit(prev, next)) {
      if (why)
        *why = {ValidationIssue{detail::junction_backtracking(prev, next)
                                    ? ValidationIssue::Kind::Backtracking
                                    : ValidationIssue::Kind::FakeExit,
                                f.size(), "junction"}};
      return std::nullopt;
    }
  }
  if (why) *why = {};
  std::vector<Step<S>> out = f.steps();
  out.insert(out.end(), g.steps().begin(), g.steps().end());
  return Descriptor<S>(std::move(out));
}

/// Concatenation as path composition: junction steps through the same space
/// merge, and a full excursion out and back cancels. The result describes
/// the endpoint of the composite path and can be shorter than d(f) + d(g).
template <class S>
Descriptor<S> concat_normalized(const Descriptor<S>& f, const Descriptor<S>& g) {
  std::vector<Step<S>> out = f.steps();
  const auto& gs = g.steps();
  std::size_t i = 0;
  while (i < gs.size()) {
    if (out.empty()) break;
    const Step<S>& prev = out.back();
    const Step<S>& next = gs[i];
    if (!(prev.alpha == next.alpha) || !point_eq(prev.exit, next.entry)) break;
    if (point_eq(prev.entry, next.exit)) {
      out.pop_back();
      ++i;
      continue;
    }
    out.back() = Step<S>{prev.alpha, prev.entry, next.exit};
    ++i;
    break;
  }
  out.insert(out.end(), gs.begin() + static_cast<std::ptrdiff_t>(i), gs.end());
  return Descriptor<S>(std::move(out));
}

template <class S>
Descriptor<S> make_single_step(const Alpha& alpha, const PiecePoint<S>& x,
                               const PiecePoint<S>& y) {
  require_point(alpha.spec, x);
  require_point(alpha.spec, y);
  if (point_eq(x, y)) throw EqualPoints("single-step descriptor needs distinct points");
  return Descriptor<S>({Step<S>{alpha, x, y}});
}

/// True when the point lies in the transversal tree at the base point.
template <class S>
bool is_transversal_base(const Descriptor<S>& f) {
  for (const auto& s : f.steps())
    if (!s.alpha.is_tree()) return false;
  return true;
}

}  // namespace treeprod
