#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "treeprod/descriptor.hpp"
#include "treeprod/qtypes.hpp"

namespace treeprod {

/// Deterministic generator. mt19937_64 has a standard-fixed sequence and we
/// reduce by modulo, so identical seeds give identical samples on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool one_in(std::uint64_t n) { return below(n) == 0; }

 private:
  std::mt19937_64 eng_;
};

template <class S>
S make_scalar(long long num, long long den);

template <>
inline Rational make_scalar<Rational>(long long num, long long den) {
  return make_rational(num, den);
}

template <>
inline double make_scalar<double>(long long num, long long den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

template <class S>
struct SamplerOptions {
  int max_steps = 3;       // continuation length
  int max_prefix = 2;      // shared prefix length for pairs
  bool use_tree = true;
  bool use_linf = false;
  bool use_l2 = false;     // float mode only
  int dim = 2;
  long long den = 4;       // denominators divide this (power of two)
  long long max_num = 16;  // numerators in [-max_num, max_num]
  int copies = 3;
  int labels = 4;
};

namespace sampling_detail {

template <class S>
S positive_scalar(Rng& rng, const SamplerOptions<S>& o) {
  long long den = 1LL << rng.below(3);  // 1, 2, 4
  if (den > o.den) den = o.den;
  return make_scalar<S>(rng.range(1, o.max_num), den);
}

inline std::string branch_label(Rng& rng, int pool, int avoid = -1) {
  int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(pool)));
  if (i == avoid) i = (i + 1) % pool;
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  return names[i % 8];
}

}  // namespace sampling_detail

template <class S>
PiecePoint<S> sample_plane_point(Rng& rng, const PieceSpec& spec,
                                 const SamplerOptions<S>& o) {
  std::vector<S> coords(spec.dim);
  for (int i = 0; i < spec.dim; ++i) {
    long long den = 1LL << rng.below(3);
    if (den > o.den) den = o.den;
    coords[i] = make_scalar<S>(rng.range(-o.max_num, o.max_num), den);
  }
  return PiecePoint<S>::plane(std::move(coords));
}

template <class S>
PiecePoint<S> sample_tree_point(Rng& rng, const SamplerOptions<S>& o) {
  int letters = static_cast<int>(rng.below(4));  // 0..3
  TreeWord<S> w;
  int prev = -1;
  for (int i = 0; i < letters; ++i) {
    int pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(o.labels)));
    if (pick == prev) pick = (pick + 1) % o.labels;
    prev = pick;
    static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
    w.push_back({names[pick % 8], sampling_detail::positive_scalar(rng, o)});
  }
  return PiecePoint<S>::tree(std::move(w));
}

template <class S>
Alpha sample_alpha(Rng& rng, const SamplerOptions<S>& o) {
  if (o.use_tree && rng.below(3) == 0) return Alpha::tree();
  Norm norm = Norm::L1;
  if (o.use_l2 && rng.one_in(3)) norm = Norm::L2;
  else if (o.use_linf && rng.one_in(3)) norm = Norm::Linf;
  return Alpha::piece(PieceSpec::plane(o.dim, norm),
                      "c" + std::to_string(rng.below(static_cast<std::uint64_t>(o.copies))));
}

template <class S>
PiecePoint<S> sample_point(Rng& rng, const Alpha& alpha, const SamplerOptions<S>& o) {
  return alpha.is_tree() ? sample_tree_point(rng, o)
                         : sample_plane_point(rng, alpha.spec, o);
}

template <class S>
PiecePoint<S> sample_point_distinct(Rng& rng, const Alpha& alpha,
                                    const SamplerOptions<S>& o,
                                    const PiecePoint<S>& avoid) {
  for (;;) {
    PiecePoint<S> p = sample_point(rng, alpha, o);
    if (!point_eq(p, avoid)) return p;
  }
}

/// A step that attaches validly after `prev` (if any).
template <class S>
Step<S> sample_step(Rng& rng, const SamplerOptions<S>& o, const Step<S>* prev) {
  for (int attempt = 0;; ++attempt) {
    Alpha alpha = sample_alpha(rng, o);
    if (attempt >= 8 && prev && alpha == prev->alpha) {
      alpha = prev->alpha.is_tree()
                  ? Alpha::piece(PieceSpec::plane(o.dim, Norm::L1), "c0")
                  : Alpha::tree();
      if (!o.use_tree && alpha.is_tree())
        alpha = Alpha::piece(prev->alpha.spec,
                             prev->alpha.copy == "c0" ? "c1" : "c0");
    }
    PiecePoint<S> entry = sample_point(rng, alpha, o);
    if (prev && prev->alpha == alpha && point_eq(prev->exit, entry)) continue;
    PiecePoint<S> exit = sample_point_distinct(rng, alpha, o, entry);
    return Step<S>{std::move(alpha), std::move(entry), std::move(exit)};
  }
}

template <class S>
Descriptor<S> sample_descriptor(Rng& rng, const SamplerOptions<S>& o, int steps) {
  std::vector<Step<S>> out;
  out.reserve(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i)
    out.push_back(sample_step<S>(rng, o, out.empty() ? nullptr : &out.back()));
  return Descriptor<S>(std::move(out));
}

template <class S>
Descriptor<S> sample_descriptor(Rng& rng, const SamplerOptions<S>& o) {
  return sample_descriptor(rng, o, static_cast<int>(rng.below(static_cast<std::uint64_t>(o.max_steps) + 1)));
}

/// Pair with a shared prefix. Mixes independent continuations, forced
/// same-piece divergence, and prefix/extension pairs.
template <class S>
std::pair<Descriptor<S>, Descriptor<S>> sample_pair(Rng& rng,
                                                    const SamplerOptions<S>& o) {
  int prefix_len = static_cast<int>(rng.below(static_cast<std::uint64_t>(o.max_prefix) + 1));
  Descriptor<S> prefix = sample_descriptor(rng, o, prefix_len);
  const Step<S>* last = prefix.is_empty() ? nullptr : &prefix.steps().back();

  std::vector<Step<S>> fs = prefix.steps(), gs = prefix.steps();
  int shape = static_cast<int>(rng.below(3));
  if (shape == 0) {
    // Same space, same entry, different exits.
    Step<S> a = sample_step(rng, o, last);
    Step<S> b{a.alpha, a.entry, sample_point_distinct(rng, a.alpha, o, a.entry)};
    while (point_eq(b.exit, a.exit))
      b.exit = sample_point_distinct(rng, b.alpha, o, b.entry);
    fs.push_back(a);
    gs.push_back(b);
    for (int i = static_cast<int>(rng.below(2)); i > 0; --i)
      fs.push_back(sample_step<S>(rng, o, &fs.back()));
    for (int i = static_cast<int>(rng.below(2)); i > 0; --i)
      gs.push_back(sample_step<S>(rng, o, &gs.back()));
  } else {
    int fn = static_cast<int>(rng.below(static_cast<std::uint64_t>(o.max_steps) + 1));
    int gn = shape == 1 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(o.max_steps) + 1));
    for (int i = 0; i < fn; ++i)
      fs.push_back(sample_step<S>(rng, o, fs.empty() ? nullptr : &fs.back()));
    for (int i = 0; i < gn; ++i)
      gs.push_back(sample_step<S>(rng, o, gs.empty() ? nullptr : &gs.back()));
  }
  return {Descriptor<S>(std::move(fs)), Descriptor<S>(std::move(gs))};
}

/// A descriptor whose steps all run through the tree.
template <class S>
Descriptor<S> sample_transversal(Rng& rng, const SamplerOptions<S>& o, int steps) {
  std::vector<Step<S>> out;
  for (int i = 0; i < steps; ++i) {
    for (;;) {
      PiecePoint<S> entry = sample_tree_point(rng, o);
      if (!out.empty() && point_eq(out.back().exit, entry)) continue;
      PiecePoint<S> exit = sample_point_distinct(rng, Alpha::tree(), o, entry);
      out.push_back(Step<S>{Alpha::tree(), std::move(entry), std::move(exit)});
      break;
    }
  }
  return Descriptor<S>(std::move(out));
}

/// A finite type: sorted plane intervals (sometimes touching) with positive
/// initial gap.
template <class S>
QType<S> sample_qtype(Rng& rng, const SamplerOptions<S>& o) {
  QType<S> t;
  int k = static_cast<int>(rng.below(4));
  S pos{};
  for (int i = 0; i < k; ++i) {
    bool touch = i > 0 && rng.one_in(4);
    S a = touch ? pos : S(pos + sampling_detail::positive_scalar(rng, o));
    PieceSpec spec = PieceSpec::plane(o.dim, Norm::L1);
    PiecePoint<S> x = sample_plane_point(rng, spec, o);
    PiecePoint<S> y = sample_point_distinct(rng, Alpha::piece(spec, ""), o, x);
    CanonicalPair<S> cp = canonical_pair(spec, x, y);
    S b = a + cp.separation();
    t.intervals.push_back(TypeInterval<S>{a, b, std::move(cp)});
    pos = b;
  }
  t.total = rng.one_in(2) ? pos : S(pos + sampling_detail::positive_scalar(rng, o));
  if (scalar_le(t.total, S{})) t.total = sampling_detail::positive_scalar(rng, o);
  return t;
}

}  // namespace treeprod
