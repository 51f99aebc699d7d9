#include "treeprod/conelab.hpp"

#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "treeprod/sampling.hpp"

namespace treeprod {

int CompileRegistry::code(const std::string& key) {
  auto [it, inserted] = codes_.try_emplace(key, next_);
  if (inserted) ++next_;
  return it->second;
}

void CompileRegistry::scan(const Descriptor<Rational>& f) {
  for (const auto& step : f.steps()) {
    if (step.alpha.is_tree()) {
      code(tree_key());
      for (const auto& l : step.entry.word()) code(branch_key(l.label));
      for (const auto& l : step.exit.word()) code(branch_key(l.label));
    } else {
      code(copy_key(step.alpha.copy));
    }
  }
}

long long round_scaled(const Rational& q, long long n) {
  Rational scaled = q * Rational(static_cast<long>(n));
  mpz_class num = scaled.get_num(), den = scaled.get_den();
  mpz_class twice_num = num * 2;
  mpz_class quotient;
  if (num >= 0)
    mpz_fdiv_q(quotient.get_mpz_t(), mpz_class(twice_num + den).get_mpz_t(),
               mpz_class(den * 2).get_mpz_t());
  else
    mpz_cdiv_q(quotient.get_mpz_t(), mpz_class(twice_num - den).get_mpz_t(),
               mpz_class(den * 2).get_mpz_t());
  return quotient.get_si();
}

namespace {

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

long long den_of(const Rational& q) { return q.get_den().get_si(); }

long long point_den(const PiecePoint<Rational>& p) {
  long long acc = 1;
  if (p.is_tree()) {
    for (const auto& l : p.word()) acc = lcm_ll(acc, den_of(l.length));
  } else {
    for (const auto& c : p.coords()) acc = lcm_ll(acc, den_of(c));
  }
  return acc;
}

GroupElement tree_point_element(const PiecePoint<Rational>& p, long long n,
                                CompileRegistry& reg) {
  GroupElement out;
  for (const auto& letter : p.word()) {
    long long j = reg.code(CompileRegistry::branch_key(letter.label));
    out.push(Syllable::ab(j, j));
    out.push(Syllable::tt(round_scaled(letter.length, n)));
    out.push(Syllable::ab(-j, -j));
  }
  return out;
}

}  // namespace

long long denominator_lcm(const Descriptor<Rational>& f) {
  long long acc = 1;
  for (const auto& step : f.steps()) {
    acc = lcm_ll(acc, point_den(step.entry));
    acc = lcm_ll(acc, point_den(step.exit));
  }
  return acc;
}

GroupElement compile(const Descriptor<Rational>& f, long long n,
                     CompileRegistry& reg) {
  if (n <= 0) throw OutOfRange("scale must be positive");
  GroupElement out;
  for (const auto& step : f.steps()) {
    if (step.alpha.is_tree()) {
      out.push(Syllable::tt(reg.code(CompileRegistry::tree_key())));
      GroupElement from = tree_point_element(step.entry, n, reg);
      GroupElement to = tree_point_element(step.exit, n, reg);
      out = mul(out, mul(inverse(from), to));
    } else {
      if (!(step.alpha.spec == PieceSpec::plane(2, Norm::L1)))
        throw UnsupportedSpec("compile handles L1 planes of dimension 2");
      out.push(Syllable::tt(reg.code(CompileRegistry::copy_key(step.alpha.copy))));
      Rational dx = step.exit.coords()[0] - step.entry.coords()[0];
      Rational dy = step.exit.coords()[1] - step.entry.coords()[1];
      out.push(Syllable::ab(round_scaled(dx, n), round_scaled(dy, n)));
    }
  }
  return out;
}

long long junction_bound(const Descriptor<Rational>& f, CompileRegistry& reg) {
  long long total = 0;
  for (const auto& step : f.steps()) {
    if (step.alpha.is_tree()) {
      total += reg.code(CompileRegistry::tree_key());
      for (const auto& l : step.entry.word())
        total += 4 * reg.code(CompileRegistry::branch_key(l.label));
      for (const auto& l : step.exit.word())
        total += 4 * reg.code(CompileRegistry::branch_key(l.label));
    } else {
      total += reg.code(CompileRegistry::copy_key(step.alpha.copy));
    }
  }
  return total;
}

ConvergenceReport converge_check(const Descriptor<Rational>& f,
                                 const Descriptor<Rational>& g,
                                 const std::vector<long long>& ns,
                                 bool strict) {
  CompileRegistry reg;
  reg.scan(f);
  reg.scan(g);

  long long lcm = lcm_ll(denominator_lcm(f), denominator_lcm(g));
  ConvergenceReport report;
  report.bound = junction_bound(f, reg) + junction_bound(g, reg);
  report.max_error_times_n = Rational(0);

  Rational metric = dist(f, g);
  std::vector<std::pair<double, double>> loglog;
  for (long long n : ns) {
    if (n <= 0) throw OutOfRange("scale must be positive");
    if (strict && n % lcm != 0)
      throw OutOfRange("scale " + std::to_string(n) +
                       " is not a multiple of the denominator lcm " +
                       std::to_string(lcm));
    ConvergeRow row;
    row.n = n;
    row.dist = group_dist(compile(f, n, reg), compile(g, n, reg));
    row.scaled = make_rational(row.dist, n);
    row.metric = metric;
    row.abs_error = abs(row.scaled - metric);
    row.bound = report.bound;
    Rational scaled_err = row.abs_error * Rational(static_cast<long>(n));
    row.within_bound = scaled_err <= Rational(static_cast<long>(report.bound));
    if (!row.within_bound) report.all_within_bound = false;
    if (report.max_error_times_n < scaled_err)
      report.max_error_times_n = scaled_err;
    if (row.abs_error > 0)
      loglog.emplace_back(std::log(static_cast<double>(n)),
                          std::log(row.abs_error.get_d()));
    report.rows.push_back(std::move(row));
  }

  if (loglog.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : loglog) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double k = static_cast<double>(loglog.size());
    double denom = k * sxx - sx * sx;
    if (denom != 0) {
      report.slope_defined = true;
      report.loglog_slope = (k * sxy - sx * sy) / denom;
    }
  }
  return report;
}

std::vector<std::pair<Descriptor<Rational>, Descriptor<Rational>>>
descriptor_corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  SamplerOptions<Rational> opts;
  opts.max_steps = 3;
  opts.max_prefix = 2;
  opts.den = 4;
  opts.max_num = 8;
  std::vector<std::pair<Descriptor<Rational>, Descriptor<Rational>>> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    auto pair = sample_pair(rng, opts);
    if (descriptor_eq(pair.first, pair.second)) continue;
    out.push_back(std::move(pair));
  }
  return out;
}

void save_bfs_cache(const BfsBall& ball, const std::string& path) {
  nlohmann::json dist = nlohmann::json::object();
  for (const auto& [g, d] : ball.elements) dist[element_key(g)] = d;
  nlohmann::json doc;
  doc["radius"] = ball.radius;
  doc["dist"] = std::move(dist);
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << doc.dump() << "\n";
}

BfsBall load_bfs_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.contains("radius") || !doc.contains("dist"))
    throw ParseError("malformed BFS cache " + path);
  BfsBall ball;
  ball.radius = doc["radius"].get<int>();
  for (auto it = doc["dist"].begin(); it != doc["dist"].end(); ++it)
    ball.elements.emplace_back(parse_element_key(it.key()), it.value().get<int>());
  return ball;
}

}  // namespace treeprod
