#pragma once

#include <string>

#include <json.hpp>

#include "treeprod/group.hpp"
#include "treeprod/qtypes.hpp"

namespace treeprod {

using Json = nlohmann::json;

inline Json spec_to_json(const PieceSpec& spec) {
  if (spec.is_tree()) return Json{{"model", "tree"}};
  const char* norm = spec.norm == Norm::L1 ? "L1"
                     : spec.norm == Norm::L2 ? "L2"
                                             : "Linf";
  return Json{{"model", "plane"}, {"dim", spec.dim}, {"norm", norm}};
}

inline PieceSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
    throw ParseError("spec: expected an object with a model");
  std::string model = j["model"].get<std::string>();
  if (model == "tree") return PieceSpec::tree();
  if (model != "plane") throw ParseError("spec: unknown model '" + model + "'");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("spec: plane needs an integer dim");
  if (!j.contains("norm") || !j["norm"].is_string())
    throw ParseError("spec: plane needs a norm");
  std::string norm = j["norm"].get<std::string>();
  Norm n;
  if (norm == "L1") n = Norm::L1;
  else if (norm == "L2") n = Norm::L2;
  else if (norm == "Linf") n = Norm::Linf;
  else throw ParseError("spec: unknown norm '" + norm + "'");
  return PieceSpec::plane(j["dim"].get<int>(), n);
}

template <class S>
S scalar_from_json(const Json& j) {
  if (j.is_string()) {
    auto v = parse_scalar<S>(j.get<std::string>());
    if (!v) throw ParseError("bad scalar '" + j.get<std::string>() + "'");
    return *v;
  }
  if (j.is_number()) {
    auto v = parse_scalar<S>(j.dump());
    if (!v) throw ParseError("bad numeric scalar " + j.dump());
    return *v;
  }
  throw ParseError("scalar must be a decimal string");
}

template <class S>
Json point_to_json(const PiecePoint<S>& p) {
  Json out = Json::array();
  if (p.is_tree()) {
    for (const auto& l : p.word()) out.push_back(Json::array({l.label, scalar_str(l.length)}));
  } else {
    for (const auto& c : p.coords()) out.push_back(scalar_str(c));
  }
  return out;
}

template <class S>
PiecePoint<S> point_from_json(const Json& j, bool tree) {
  if (!j.is_array()) throw ParseError("point: expected an array");
  if (!tree) {
    std::vector<S> coords;
    coords.reserve(j.size());
    for (const auto& c : j) coords.push_back(scalar_from_json<S>(c));
    return PiecePoint<S>::plane(std::move(coords));
  }
  TreeWord<S> word;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_string())
      throw ParseError("tree point: expected [label, length] pairs");
    word.push_back({l[0].get<std::string>(), scalar_from_json<S>(l[1])});
  }
  return PiecePoint<S>::tree(std::move(word));
}

template <class S>
Json step_to_json(const Step<S>& s) {
  Json out;
  if (s.alpha.is_tree()) {
    out["kind"] = "tree";
  } else {
    out["kind"] = "piece";
    out["spec"] = spec_to_json(s.alpha.spec);
    out["copy"] = s.alpha.copy;
  }
  out["entry"] = point_to_json(s.entry);
  out["exit"] = point_to_json(s.exit);
  return out;
}

template <class S>
Step<S> step_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("step: expected an object with a kind");
  std::string kind = j["kind"].get<std::string>();
  if (!j.contains("entry") || !j.contains("exit"))
    throw ParseError("step: needs entry and exit");
  if (kind == "tree") {
    return Step<S>{Alpha::tree(), point_from_json<S>(j["entry"], true),
                   point_from_json<S>(j["exit"], true)};
  }
  if (kind != "piece") throw ParseError("step: unknown kind '" + kind + "'");
  if (!j.contains("spec")) throw ParseError("step: piece needs a spec");
  PieceSpec spec = spec_from_json(j["spec"]);
  std::string copy = j.contains("copy") ? j["copy"].get<std::string>() : "";
  return Step<S>{Alpha::piece(spec, copy), point_from_json<S>(j["entry"], false),
                 point_from_json<S>(j["exit"], false)};
}

template <class S>
Json descriptor_to_json(const Descriptor<S>& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) steps.push_back(step_to_json(s));
  return Json{{"steps", std::move(steps)}};
}

template <class S>
Descriptor<S> descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw ParseError("descriptor: expected {\"steps\": [...]}");
  std::vector<Step<S>> steps;
  steps.reserve(j["steps"].size());
  for (const auto& s : j["steps"]) steps.push_back(step_from_json<S>(s));
  return Descriptor<S>(std::move(steps));
}

template <class S>
Json cpair_to_json(const CanonicalPair<S>& cp) {
  return Json{{"spec", spec_to_json(cp.spec)},
              {"x", point_to_json(cp.first)},
              {"y", point_to_json(cp.second)}};
}

template <class S>
CanonicalPair<S> cpair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("x") || !j.contains("y"))
    throw ParseError("pair: expected {spec, x, y}");
  PieceSpec spec = spec_from_json(j["spec"]);
  return CanonicalPair<S>{spec, point_from_json<S>(j["x"], spec.is_tree()),
                          point_from_json<S>(j["y"], spec.is_tree())};
}

template <class S>
Json qtype_to_json(const QType<S>& t) {
  Json intervals = Json::array();
  for (const auto& iv : t.intervals)
    intervals.push_back(Json{{"a", scalar_str(iv.a)},
                             {"b", scalar_str(iv.b)},
                             {"cpair", cpair_to_json(iv.cpair)}});
  return Json{{"total", scalar_str(t.total)}, {"intervals", std::move(intervals)}};
}

template <class S>
QType<S> qtype_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("total") || !j.contains("intervals") ||
      !j["intervals"].is_array())
    throw ParseError("type: expected {total, intervals}");
  QType<S> t;
  t.total = scalar_from_json<S>(j["total"]);
  for (const auto& iv : j["intervals"]) {
    if (!iv.is_object() || !iv.contains("a") || !iv.contains("b") || !iv.contains("cpair"))
      throw ParseError("type interval: expected {a, b, cpair}");
    t.intervals.push_back(TypeInterval<S>{scalar_from_json<S>(iv["a"]),
                                          scalar_from_json<S>(iv["b"]),
                                          cpair_from_json<S>(iv["cpair"])});
  }
  return t;
}

template <class S>
Json alpha_to_json(const Alpha& a) {
  if (a.is_tree()) return Json{{"spec", spec_to_json(a.spec)}};
  return Json{{"spec", spec_to_json(a.spec)}, {"copy", a.copy}};
}

template <class S>
Json median_to_json(const Median<S>& m) {
  if (m.is_point) return Json{{"kind", "point"}, {"at", descriptor_to_json(m.point)}};
  return Json{{"kind", "gates"},
              {"prefix", descriptor_to_json(m.placement.prefix)},
              {"alpha", alpha_to_json<S>(m.placement.alpha)},
              {"entry", point_to_json(m.placement.entry)},
              {"gates", Json::array({point_to_json(m.gate_a), point_to_json(m.gate_b),
                                     point_to_json(m.gate_c)})}};
}

inline Json element_to_json(const GroupElement& g) {
  Json syls = Json::array();
  for (const auto& s : g.syllables()) {
    if (s.plane) syls.push_back(Json::array({"A", s.m, s.k}));
    else syls.push_back(Json::array({"B", s.t}));
  }
  return Json{{"syllables", std::move(syls)}};
}

inline GroupElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("syllables") || !j["syllables"].is_array())
    throw ParseError("element: expected {syllables}");
  std::vector<Syllable> syls;
  for (const auto& s : j["syllables"]) {
    if (!s.is_array() || s.empty() || !s[0].is_string())
      throw ParseError("element: bad syllable");
    std::string tag = s[0].get<std::string>();
    if (tag == "A" && s.size() == 3)
      syls.push_back(Syllable::ab(s[1].get<long long>(), s[2].get<long long>()));
    else if (tag == "B" && s.size() == 2)
      syls.push_back(Syllable::tt(s[1].get<long long>()));
    else
      throw ParseError("element: bad syllable");
  }
  return GroupElement::from_syllables(syls);
}

}  // namespace treeprod
