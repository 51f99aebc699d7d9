// Command-line front end: validation, distances, geodesics, translations,
// medians, types, type realization, the convergence harness, and the
// deterministic property suites.
//
// Exit codes: 0 success, 1 usage or parse problem, 2 validation or property
// failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeprod/conelab.hpp"
#include "treeprod/io.hpp"
#include "treeprod/suites.hpp"

namespace {

using namespace treeprod;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON in " + path);
  return j;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

struct Options {
  std::string mode = "EXACT";
  std::string out;

  bool exact() const { return mode == "EXACT"; }
};

template <class S>
int run_validate(const std::string& path) {
  Descriptor<S> f = descriptor_from_json<S>(read_json(path));
  ValidationReport report = validate(f);
  std::cout << report.describe() << "\n";
  return report.ok() ? kOk : kFailure;
}

template <class S>
int run_dist(const Options& opt, const std::string& fpath, const std::string& gpath) {
  Descriptor<S> f = descriptor_from_json<S>(read_json(fpath));
  Descriptor<S> g = descriptor_from_json<S>(read_json(gpath));
  DivergenceResult<S> dv = divergence(f, g);
  std::ostringstream line;
  line << scalar_str(dist(f, g)) << ' '
       << (dv.pair_case == PairCase::Case1 ? "CASE1" : "CASE2") << " s="
       << scalar_str(dv.s) << "\n";
  write_output(opt.out, line.str());
  return kOk;
}

template <class S>
int run_geodesic(const Options& opt, const std::string& fpath,
                 const std::string& gpath, const std::string& t_text) {
  Descriptor<S> f = descriptor_from_json<S>(read_json(fpath));
  Descriptor<S> g = descriptor_from_json<S>(read_json(gpath));
  auto t = parse_scalar<S>(t_text);
  if (!t) throw ParseError("bad parameter '" + t_text + "'");
  write_output(opt.out, descriptor_to_json(geodesic_point(f, g, *t)).dump() + "\n");
  return kOk;
}

template <class S>
int run_phi(const Options& opt, const std::string& fpath, const std::string& gpath,
            bool inverse) {
  Descriptor<S> f = descriptor_from_json<S>(read_json(fpath));
  Descriptor<S> g = descriptor_from_json<S>(read_json(gpath));
  Descriptor<S> image = inverse ? phi_inv(f, g) : phi(f, g);
  write_output(opt.out, descriptor_to_json(image).dump() + "\n");
  return kOk;
}

template <class S>
int run_median(const Options& opt, const std::string& fpath,
               const std::string& gpath, const std::string& hpath) {
  Descriptor<S> f = descriptor_from_json<S>(read_json(fpath));
  Descriptor<S> g = descriptor_from_json<S>(read_json(gpath));
  Descriptor<S> h = descriptor_from_json<S>(read_json(hpath));
  write_output(opt.out, median_to_json(median(f, g, h)).dump() + "\n");
  return kOk;
}

template <class S>
int run_type(const Options& opt, const std::string& fpath) {
  Descriptor<S> f = descriptor_from_json<S>(read_json(fpath));
  DirectionType<S> dt = type_of(f);
  Json out;
  switch (dt.kind) {
    case DirectionKind::Trivial: out = Json{{"kind", "trivial"}}; break;
    case DirectionKind::NonLimit: out = Json{{"kind", "nonlimit"}}; break;
    case DirectionKind::Limit:
      out = Json{{"kind", "limit"}, {"type", qtype_to_json(dt.type)}};
      break;
  }
  write_output(opt.out, out.dump() + "\n");
  return kOk;
}

template <class S>
int run_realize(const Options& opt, const std::string& type_path,
                const std::string& salt, const std::string& at_path) {
  QType<S> t = qtype_from_json<S>(read_json(type_path));
  Descriptor<S> at = at_path.empty()
                         ? Descriptor<S>::empty()
                         : descriptor_from_json<S>(read_json(at_path));
  write_output(opt.out, descriptor_to_json(realize_type(at, t, salt)).dump() + "\n");
  return kOk;
}

int run_converge(const Options& opt, std::uint64_t seed, int count,
                 const std::vector<long long>& ns, bool lenient) {
  if (ns.empty()) {
    std::cerr << "converge: no scales given\n";
    return kUsage;
  }
  auto corpus = descriptor_corpus(seed, count);
  std::ostringstream csv;
  csv << "pair_id,n,dist,scaled,D,abs_error,bound_C\n";
  bool all_ok = true;
  for (int i = 0; i < count; ++i) {
    ConvergenceReport report =
        converge_check(corpus[i].first, corpus[i].second, ns, !lenient);
    for (const auto& row : report.rows) {
      csv << i << ',' << row.n << ',' << row.dist << ',' << scalar_str(row.scaled)
          << ',' << scalar_str(row.metric) << ',' << scalar_str(row.abs_error)
          << ',' << row.bound << "\n";
      all_ok = all_ok && row.within_bound;
    }
  }
  write_output(opt.out, csv.str());
  return all_ok ? kOk : kFailure;
}

int run_suite_cmd(const Options& opt, const std::string& name, std::uint64_t seed,
                  long long samples, bool inject_failure) {
  SuiteConfig config;
  config.seed = seed;
  config.samples = samples;
  config.mode = opt.exact() ? NumericMode::Exact : NumericMode::Float;
  config.inject_failure = inject_failure;
  SuiteResult result = run_suite(name, config);
  std::ostringstream csv;
  for (const auto& row : result.csv) csv << row << "\n";
  write_output(opt.out, csv.str());
  std::cerr << "suite " << result.name << ": " << result.cases << " cases, "
            << result.checks << " checks, " << result.violations
            << " violations\n";
  return result.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree products of metric spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--mode", opt.mode, "numeric mode")
      ->check(CLI::IsMember({"EXACT", "FLOAT"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "write output to a file instead of stdout");

  std::string fpath, gpath, hpath, t_text = "0", salt = "s", at_path, type_path;
  bool inverse = false, lenient = false, inject = false;
  std::uint64_t seed = 42;
  int count = 50;
  long long samples = 0;
  std::vector<long long> ns;
  std::string suite_name;

  auto* validate_cmd = app.add_subcommand("validate", "check a descriptor file");
  validate_cmd->add_option("file", fpath)->required();

  auto* dist_cmd = app.add_subcommand("dist", "distance between two descriptors");
  dist_cmd->add_option("f", fpath)->required();
  dist_cmd->add_option("g", gpath)->required();

  auto* geo_cmd = app.add_subcommand("geodesic", "point on the geodesic from f to g");
  geo_cmd->add_option("f", fpath)->required();
  geo_cmd->add_option("g", gpath)->required();
  geo_cmd->add_option("--t", t_text, "arc length from f")->required();

  auto* phi_cmd = app.add_subcommand("phi", "translate g by the isometry taking f to the base point");
  phi_cmd->add_option("f", fpath)->required();
  phi_cmd->add_option("g", gpath)->required();
  phi_cmd->add_flag("--inverse", inverse, "apply the inverse translation");

  auto* median_cmd = app.add_subcommand("median", "median of a triangle");
  median_cmd->set_help_flag("--help");
  median_cmd->add_option("f", fpath)->required();
  median_cmd->add_option("g", gpath)->required();
  median_cmd->add_option("h", hpath)->required();

  auto* type_cmd = app.add_subcommand("type", "type of the direction toward a descriptor");
  type_cmd->add_option("f", fpath)->required();

  auto* realize_cmd = app.add_subcommand("realize", "build a direction of a given type");
  realize_cmd->add_option("type", type_path)->required();
  realize_cmd->add_option("--salt", salt, "label salt")->capture_default_str();
  realize_cmd->add_option("--at", at_path, "base point descriptor");

  auto* converge_cmd = app.add_subcommand("converge", "scaled word metric vs. tree-product metric");
  converge_cmd->add_option("--seed", seed)->capture_default_str();
  converge_cmd->add_option("--count", count)->capture_default_str();
  converge_cmd->add_option("--n", ns, "scales")->required();
  converge_cmd->add_flag("--lenient", lenient, "allow scales off the denominator grid");

  auto* suite_cmd = app.add_subcommand("suite", "run a property suite");
  suite_cmd->add_option("name", suite_name)->required()->check(CLI::IsMember(treeprod::suite_names()));
  suite_cmd->add_option("--seed", seed)->capture_default_str();
  suite_cmd->add_option("--samples", samples, "0 = suite default")->capture_default_str();
  suite_cmd->add_flag("--inject-failure", inject, "runner self-test: force a violation");

  CLI11_PARSE(app, argc, argv);

  try {
    bool exact = opt.exact();
    if (validate_cmd->parsed())
      return exact ? run_validate<treeprod::Rational>(fpath) : run_validate<double>(fpath);
    if (dist_cmd->parsed())
      return exact ? run_dist<treeprod::Rational>(opt, fpath, gpath)
                   : run_dist<double>(opt, fpath, gpath);
    if (geo_cmd->parsed())
      return exact ? run_geodesic<treeprod::Rational>(opt, fpath, gpath, t_text)
                   : run_geodesic<double>(opt, fpath, gpath, t_text);
    if (phi_cmd->parsed())
      return exact ? run_phi<treeprod::Rational>(opt, fpath, gpath, inverse)
                   : run_phi<double>(opt, fpath, gpath, inverse);
    if (median_cmd->parsed())
      return exact ? run_median<treeprod::Rational>(opt, fpath, gpath, hpath)
                   : run_median<double>(opt, fpath, gpath, hpath);
    if (type_cmd->parsed())
      return exact ? run_type<treeprod::Rational>(opt, fpath) : run_type<double>(opt, fpath);
    if (realize_cmd->parsed())
      return exact ? run_realize<treeprod::Rational>(opt, type_path, salt, at_path)
                   : run_realize<double>(opt, type_path, salt, at_path);
    if (converge_cmd->parsed()) return run_converge(opt, seed, count, ns, lenient);
    if (suite_cmd->parsed()) return run_suite_cmd(opt, suite_name, seed, samples, inject);
  } catch (const treeprod::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const treeprod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
