#include "treeprod/suites.hpp"

#include <array>
#include <sstream>

#include "treeprod/sampling.hpp"

namespace treeprod {

namespace {

struct Tally {
  SuiteResult* result;

  void check(bool ok) {
    ++result->checks;
    if (!ok) ++result->violations;
  }
};

template <class S>
SamplerOptions<S> corpus_options(NumericMode mode, bool with_l2) {
  SamplerOptions<S> o;
  o.use_l2 = with_l2 && mode == NumericMode::Float;
  return o;
}

template <class S>
Descriptor<S> sample_continuation(Rng& rng, const SamplerOptions<S>& o,
                                  const Descriptor<S>& f, int steps) {
  std::vector<Step<S>> out;
  const Step<S>* prev = f.is_empty() ? nullptr : &f.steps().back();
  for (int i = 0; i < steps; ++i) {
    out.push_back(sample_step<S>(rng, o, prev));
    prev = &out.back();
  }
  return Descriptor<S>(std::move(out));
}

template <class S>
std::array<Descriptor<S>, 3> sample_triple(Rng& rng, const SamplerOptions<S>& o) {
  auto [f, g] = sample_pair(rng, o);
  Descriptor<S> h;
  switch (rng.below(3)) {
    case 0:
      h = sample_descriptor(rng, o);
      break;
    case 1: {
      std::size_t keep = rng.below(f.size() + 1);
      std::vector<Step<S>> hs(f.steps().begin(),
                              f.steps().begin() + static_cast<std::ptrdiff_t>(keep));
      Descriptor<S> base(std::move(hs));
      auto ext = sample_continuation(rng, o, base, static_cast<int>(rng.below(3)));
      h = *concat_raw(base, ext);
      break;
    }
    default: {
      std::size_t keep = rng.below(g.size() + 1);
      std::vector<Step<S>> hs(g.steps().begin(),
                              g.steps().begin() + static_cast<std::ptrdiff_t>(keep));
      Descriptor<S> base(std::move(hs));
      auto ext = sample_continuation(rng, o, base, static_cast<int>(rng.below(3)));
      h = *concat_raw(base, ext);
      break;
    }
  }
  return {std::move(f), std::move(g), std::move(h)};
}

template <class S>
void metric_suite(SuiteResult& r, std::uint64_t seed, long long samples,
                  NumericMode mode) {
  Rng rng(seed);
  SamplerOptions<S> o = corpus_options<S>(mode, false);
  Tally t{&r};
  r.csv.push_back("case,df,dg,dh,dfg,dfh,dgh,violations_before");
  for (long long i = 0; i < samples; ++i) {
    auto [f, g, h] = sample_triple(rng, o);
    long long before = r.violations;
    S dfg = dist(f, g), dfh = dist(f, h), dgh = dist(g, h);
    t.check(scalar_eq(dfg, dist(g, f)));
    t.check(scalar_eq(dist(f, f), S{}));
    t.check(scalar_eq(dfg, S{}) == descriptor_eq(f, g));
    t.check(scalar_le(dfh, S(dfg + dgh)));
    t.check(scalar_le(dfg, S(dfh + dgh)));
    t.check(scalar_le(dgh, S(dfg + dfh)));

    // |d(f)-d(g)| <= D(f,g) <= d(f)+d(g)-2 div, and type-1 pairs separate.
    S df = f.total_length(), dg = g.total_length();
    DivergenceResult<S> dv = divergence(f, g);
    t.check(scalar_le(scalar_abs<S>(df - dg), dfg));
    t.check(scalar_le(dfg, S(df + dg - dv.s - dv.s)));
    if (dv.pair_case == PairCase::Case1) t.check(scalar_lt(S{}, dfg));

    // D(f|_|g1, f|_|g2) = D(g1, g2) for junction-clean concatenations.
    Descriptor<S> g1 = sample_continuation(rng, o, f, static_cast<int>(rng.below(3)));
    Descriptor<S> g2 = sample_continuation(rng, o, f, static_cast<int>(rng.below(3)));
    auto c1 = concat_raw(f, g1), c2 = concat_raw(f, g2);
    t.check(c1.has_value() && c2.has_value());
    if (c1 && c2) t.check(scalar_eq(dist(*c1, *c2), dist(g1, g2)));

    std::ostringstream row;
    row << i << ',' << scalar_str(df) << ',' << scalar_str(dg) << ','
        << scalar_str(h.total_length()) << ',' << scalar_str(dfg) << ','
        << scalar_str(dfh) << ',' << scalar_str(dgh) << ',' << before;
    r.csv.push_back(row.str());
    ++r.cases;
  }
}

template <class S>
void isometry_suite(SuiteResult& r, std::uint64_t seed, long long samples,
                    NumericMode mode) {
  Rng rng(seed);
  SamplerOptions<S> o = corpus_options<S>(mode, false);
  Tally t{&r};
  r.csv.push_back("case,dgh,ok");
  for (long long i = 0; i < samples; ++i) {
    auto [f, g, h] = sample_triple(rng, o);
    long long before = r.violations;
    S dgh = dist(g, h);
    t.check(scalar_eq(dist(phi(f, g), phi(f, h)), dgh));
    t.check(phi(f, f).is_empty());
    t.check(descriptor_eq(phi(f, phi_inv(f, g)), g));
    t.check(descriptor_eq(phi_inv(f, phi(f, g)), g));

    std::ostringstream row;
    row << i << ',' << scalar_str(dgh) << ',' << (r.violations == before);
    r.csv.push_back(row.str());
    ++r.cases;
  }
}

template <class S>
void geodesic_suite(SuiteResult& r, std::uint64_t seed, long long samples,
                    NumericMode mode) {
  Rng rng(seed);
  SamplerOptions<S> o = corpus_options<S>(mode, true);
  Tally t{&r};
  r.csv.push_back("case,D,params,ok");
  constexpr int kParams = 10;
  for (long long i = 0; i < samples; ++i) {
    auto [f, g] = sample_pair(rng, o);
    S d = dist(f, g);
    if (scalar_eq(d, S{})) {
      g = *concat_raw(g, sample_continuation(rng, o, g, 1));
      d = dist(f, g);
    }
    long long before = r.violations;
    std::array<S, kParams> ts;
    std::array<Descriptor<S>, kParams> pts;
    for (int j = 0; j < kParams; ++j) {
      ts[j] = S(d * make_scalar<S>(j, kParams - 1));
      pts[j] = geodesic_point(f, g, ts[j]);
    }
    t.check(descriptor_eq(pts.front(), f));
    t.check(descriptor_eq(pts.back(), g));
    for (int a = 0; a < kParams; ++a)
      for (int b = a + 1; b < kParams; ++b)
        t.check(scalar_eq(dist(pts[a], pts[b]), scalar_abs<S>(ts[b] - ts[a])));

    std::ostringstream row;
    row << i << ',' << scalar_str(d) << ',' << kParams << ','
        << (r.violations == before);
    r.csv.push_back(row.str());
    ++r.cases;
  }
}

template <class S>
void types_suite(SuiteResult& r, std::uint64_t seed, long long samples,
                 NumericMode mode) {
  Rng rng(seed);
  SamplerOptions<S> o = corpus_options<S>(mode, false);
  Tally t{&r};
  r.csv.push_back("case,intervals,total,ok");
  for (long long i = 0; i < samples; ++i) {
    QType<S> tau = sample_qtype(rng, o);
    long long before = r.violations;
    std::string salt = "s" + std::to_string(i);

    Descriptor<S> realized = realize_type(Descriptor<S>::empty(), tau, salt);
    DirectionType<S> dt = type_of(realized);
    t.check(dt.kind == DirectionKind::Limit);
    t.check(qtype_eq(dt.type, tau));

    // Types ignore the salt: a re-labeled realization has the same type.
    Descriptor<S> relabeled = realize_type(Descriptor<S>::empty(), tau, salt + "x");
    t.check(qtype_eq(type_of(relabeled).type, tau));

    if (!tau.trivial()) {
      t.check(types_equivalent(tau, tau));

      QType<S> extended = tau;
      PieceSpec spec = PieceSpec::plane(o.dim, Norm::L1);
      PiecePoint<S> x = sample_plane_point(rng, spec, o);
      PiecePoint<S> y = sample_point_distinct(rng, Alpha::piece(spec, ""), o, x);
      CanonicalPair<S> cp = canonical_pair(spec, x, y);
      S a2 = extended.total + make_scalar<S>(1, 2);
      extended.intervals.push_back(TypeInterval<S>{a2, S(a2 + cp.separation()), cp});
      extended.total = extended.intervals.back().b;
      t.check(types_equivalent(tau, extended));

      S b1 = tau.intervals.front().b;
      t.check(qtype_eq(initial_subtype(tau, b1), initial_subtype(extended, b1)));

      QType<S> shifted = tau;
      shifted.intervals.front().a += make_scalar<S>(1, 4);
      shifted.intervals.front().b += make_scalar<S>(1, 4);
      if (shifted.intervals.size() == 1 || check_qtype(shifted).empty()) {
        shifted.total += make_scalar<S>(1, 4);
        t.check(!types_equivalent(tau, shifted));
      }
    }

    // Fresh salts land in pairwise different components, at any base point.
    Descriptor<S> at = sample_descriptor(rng, o);
    auto comps = distinct_components(at, tau, 4);
    for (size_t a = 0; a < comps.size(); ++a)
      for (size_t b = a + 1; b < comps.size(); ++b)
        t.check(component_relation(at, comps[a], comps[b]) ==
                ComponentRelation::Different);

    auto pieces = distinct_pieces(at, PieceSpec::plane(o.dim, Norm::L1), 4);
    for (size_t a = 0; a < pieces.witnesses.size(); ++a)
      for (size_t b = a + 1; b < pieces.witnesses.size(); ++b) {
        DivergenceResult<S> dv =
            divergence(phi(at, pieces.witnesses[a]), phi(at, pieces.witnesses[b]));
        t.check(dv.pair_case == PairCase::Case2 && scalar_eq(dv.s, S{}));
        t.check(scalar_eq(dist(pieces.witnesses[a], pieces.witnesses[b]), S(2)));
      }

    std::ostringstream row;
    row << i << ',' << tau.intervals.size() << ',' << scalar_str(tau.total) << ','
        << (r.violations == before);
    r.csv.push_back(row.str());
    ++r.cases;
  }
}

/// True when the step's geodesics depend on the selector.
template <class S>
bool selector_sensitive(const Step<S>& s) {
  if (s.alpha.is_tree() || s.alpha.spec.norm != Norm::L1) return false;
  int moving = 0;
  for (int i = 0; i < s.alpha.spec.dim; ++i)
    if (!scalar_eq(s.entry.coords()[i], s.exit.coords()[i])) ++moving;
  return moving >= 2;
}

template <class S>
void bigon_suite(SuiteResult& r, std::uint64_t seed, long long samples,
                 NumericMode mode) {
  Rng rng(seed);
  SamplerOptions<S> o = corpus_options<S>(mode, false);
  Tally t{&r};
  r.csv.push_back("case,steps,wide_steps,params,ok");
  for (long long i = 0; i < samples; ++i) {
    Descriptor<S> f, g, m;
    int wide = 0;
    do {
      auto pair = sample_pair(rng, o);
      f = std::move(pair.first);
      g = std::move(pair.second);
      m = phi(f, g);
      wide = 0;
      for (const auto& s : m.steps()) wide += selector_sensitive(s) ? 1 : 0;
    } while (wide == 0);

    long long before = r.violations;
    int params = 0;
    std::vector<S> breaks = m.break_points();
    for (std::size_t k = 0; k < m.size(); ++k) {
      const Step<S>& step = m.steps()[k];
      const S& lo = breaks[k];
      const S& hi = breaks[k + 1];
      S mid = S((lo + hi) * make_scalar<S>(1, 2));
      S quarter = S((lo + mid) * make_scalar<S>(1, 2));
      for (const S& tt : {lo, hi}) {
        // Outside every open piece interval the two geodesics agree.
        t.check(descriptor_eq(geodesic_point(f, g, tt, PathSelector::CoordinateOrder),
                              geodesic_point(f, g, tt, PathSelector::ReversedOrder)));
        ++params;
      }
      for (const S& tt : {quarter, mid}) {
        Descriptor<S> a = geodesic_point(f, g, tt, PathSelector::CoordinateOrder);
        Descriptor<S> b = geodesic_point(f, g, tt, PathSelector::ReversedOrder);
        ++params;
        if (!selector_sensitive(step)) {
          t.check(descriptor_eq(a, b));
          continue;
        }
        // Inside a selector-sensitive interval both geodesics stay within
        // the single placement the interval crosses.
        for (const Descriptor<S>* pt : {&a, &b}) {
          Descriptor<S> image = phi(f, *pt);
          bool contained = image.size() == k + 1;
          for (std::size_t j = 0; contained && j < k; ++j)
            contained = step_eq(image.steps()[j], m.steps()[j]);
          if (contained) {
            const Step<S>& last = image.steps()[k];
            contained = last.alpha == step.alpha && point_eq(last.entry, step.entry);
          }
          t.check(contained);
        }
        t.check(scalar_le(dist(a, b), S(step.length() + step.length())));
      }
    }

    std::ostringstream row;
    row << i << ',' << m.size() << ',' << wide << ',' << params << ','
        << (r.violations == before);
    r.csv.push_back(row.str());
    ++r.cases;
  }
}

void ble_suite(SuiteResult& r, std::uint64_t seed, long long samples) {
  using S = double;
  Rng rng(seed);
  SamplerOptions<S> o;  // L1 + tree source corpus
  Tally t{&r};
  r.csv.push_back("case,ds,dt,ok");
  PieceMap<S> pm;
  pm.entries.push_back(
      identity_coords_entry<S>(PieceSpec::plane(2, Norm::L1), PieceSpec::plane(2, Norm::L2)));
  const double k = std::sqrt(2.0);
  const double slack = 1e-9;
  for (long long i = 0; i < samples; ++i) {
    auto [f, g] = sample_pair(rng, o);
    long long before = r.violations;
    S ds = dist(f, g);
    Descriptor<S> fm = map_pieces(f, pm);
    Descriptor<S> gm = map_pieces(g, pm);
    S dt = dist(fm, gm);
    t.check(dt <= k * ds + slack);
    t.check(ds <= k * dt + slack);

    std::ostringstream row;
    row << i << ',' << scalar_str(ds) << ',' << scalar_str(dt) << ','
        << (r.violations == before);
    r.csv.push_back(row.str());
    ++r.cases;
  }
}

long long default_samples(const std::string& name) {
  if (name == "metric" || name == "isometry") return 10000;
  return 1000;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"metric", "isometry", "geodesic", "types", "bigon", "ble"};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteResult r;
  r.name = name;
  long long samples = config.samples > 0 ? config.samples : default_samples(name);
  bool exact = config.mode == NumericMode::Exact;

  if (name == "metric") {
    exact ? metric_suite<Rational>(r, config.seed, samples, config.mode)
          : metric_suite<double>(r, config.seed, samples, config.mode);
  } else if (name == "isometry") {
    exact ? isometry_suite<Rational>(r, config.seed, samples, config.mode)
          : isometry_suite<double>(r, config.seed, samples, config.mode);
  } else if (name == "geodesic") {
    exact ? geodesic_suite<Rational>(r, config.seed, samples, config.mode)
          : geodesic_suite<double>(r, config.seed, samples, config.mode);
  } else if (name == "types") {
    exact ? types_suite<Rational>(r, config.seed, samples, config.mode)
          : types_suite<double>(r, config.seed, samples, config.mode);
  } else if (name == "bigon") {
    exact ? bigon_suite<Rational>(r, config.seed, samples, config.mode)
          : bigon_suite<double>(r, config.seed, samples, config.mode);
  } else if (name == "ble") {
    ble_suite(r, config.seed, samples);  // needs L2 targets, so float-only
  } else {
    throw Error("unknown suite '" + name + "'");
  }

  if (config.inject_failure) {
    ++r.checks;
    ++r.violations;
    r.csv.push_back("injected,,,,0");
  }
  return r;
}

}  // namespace treeprod
