#include "nnn/serialize.hpp"

#include "nnn/error.hpp"

namespace nnn {

namespace {

constexpr std::uint64_t kMaxExactDouble = std::uint64_t{1} << 53;

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad field ") + key + ": " + e.what());
  }
}

Json verdicts_json(const ExistenceVerdicts& v) {
  Json j;
  j["nnn_digraph"] = v.nnn_digraph;
  j["nnn_graph"] = v.nnn_graph;
  j["normal_non_ci_digraph"] = v.normal_non_ci_digraph;
  j["normal_non_ci_graph"] = v.normal_non_ci_graph;
  return j;
}

}  // namespace

Json to_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("permutation must be an array");
  try {
    return Perm(j.get<std::vector<Point>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad permutation: ") + e.what());
  }
}

Json to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(to_json(p));
  j["generators"] = std::move(gens);
  return j;
}

PermGroup perm_group_from_json(const Json& j) {
  const auto degree = field<std::size_t>(j, "degree");
  std::vector<Perm> gens;
  for (const Json& p : j.at("generators")) gens.push_back(perm_from_json(p));
  return PermGroup(degree, std::move(gens));
}

Json to_json(const GroupSpec& g) {
  Json j;
  j["family"] = g.family_name();
  j["n"] = g.n();
  return j;
}

GroupSpec group_from_json(const Json& j) {
  const auto family = field<std::string>(j, "family");
  const int n = field<int>(j, "n");
  if (family == "cyclic") return GroupSpec::cyclic(n);
  if (family == "dihedral") return GroupSpec::dihedral(n);
  throw InvalidArgument("unknown group family: " + family);
}

Json to_json(const ElemSet& s) { return Json(codes_of(s)); }

ElemSet elem_set_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("element set must be an array");
  std::vector<std::uint32_t> codes;
  try {
    codes = j.get<std::vector<std::uint32_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad element set: ") + e.what());
  }
  return make_set(g, codes);
}

Json to_json(const GroupAut& a) {
  Json j;
  const auto r = a.r();
  const auto s = a.s();
  if (r && (a.group().is_cyclic() || s)) {
    j["r"] = *r;
    if (!a.group().is_cyclic()) j["s"] = *s;
  } else {
    j["map"] = a.perm().images();
  }
  return j;
}

GroupAut group_aut_from_json(const GroupSpec& g, const Json& j) {
  if (j.contains("map")) return GroupAut::from_images(g, field<std::vector<Point>>(j, "map"));
  const int r = field<int>(j, "r");
  if (g.is_cyclic()) return GroupAut::cyclic_unit(g, r);
  return GroupAut::dihedral_affine(g, r, field<int>(j, "s"));
}

Json to_json(const CayleyDigraph& c) {
  Json j;
  j["group"] = to_json(c.group());
  j["set"] = to_json(c.connection_set());
  return j;
}

CayleyDigraph digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("set"))
    throw InvalidArgument("digraph needs \"group\" and \"set\"");
  const GroupSpec g = group_from_json(j.at("group"));
  return CayleyDigraph(g, elem_set_from_json(g, j.at("set")));
}

Json count_to_json(const BigCount& c) {
  if (c >= 0 && c <= kMaxExactDouble) return Json(c.convert_to<std::uint64_t>());
  return Json(c.str());
}

BigCount count_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigCount(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigCount(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigCount(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidArgument("bad count: " + j.get<std::string>());
    }
  }
  throw InvalidArgument("count must be an integer or a decimal string");
}

Json to_json(const AutResult& a) {
  Json j;
  j["order"] = count_to_json(a.order);
  Json gens = Json::array();
  for (const Perm& p : a.generators) gens.push_back(to_json(p));
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["group"] = c.group.family_name();
  j["n"] = c.group.n();
  j["set"] = to_json(c.set);
  j["connected"] = c.connected;
  j["graph"] = c.graph;
  j["aut_order"] = count_to_json(c.aut_order);
  j["normal"] = c.normal;
  j["regular_subgroups"] = optional_int(c.regular_subgroups);
  j["nonnormal_regular"] = optional_int(c.nonnormal_regular);
  j["nnn"] = c.nnn;
  if (c.ci == CiVerdict::Skipped)
    j["ci"] = "skipped";
  else
    j["ci"] = c.ci == CiVerdict::Yes;
  return j;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  const auto family = field<std::string>(j, "group");
  const int n = field<int>(j, "n");
  if (family == "cyclic")
    c.group = GroupSpec::cyclic(n);
  else if (family == "dihedral")
    c.group = GroupSpec::dihedral(n);
  else
    throw InvalidArgument("unknown group family: " + family);
  c.set = elem_set_from_json(c.group, j.at("set"));
  c.connected = field<bool>(j, "connected");
  c.graph = field<bool>(j, "graph");
  c.aut_order = count_from_json(j.at("aut_order"));
  c.normal = field<bool>(j, "normal");
  for (auto [key, slot] : {std::pair{"regular_subgroups", &c.regular_subgroups},
                           std::pair{"nonnormal_regular", &c.nonnormal_regular}}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("missing field: ") + key);
    if (!j.at(key).is_null()) *slot = field<int>(j, key);
  }
  c.nnn = field<bool>(j, "nnn");
  if (!j.contains("ci")) throw InvalidArgument("missing field: ci");
  const Json& ci = j.at("ci");
  if (ci.is_boolean())
    c.ci = ci.get<bool>() ? CiVerdict::Yes : CiVerdict::No;
  else if (ci == "skipped")
    c.ci = CiVerdict::Skipped;
  else
    throw InvalidArgument("ci must be true, false or \"skipped\"");
  return c;
}

Json to_json(const SweepSummary& s, const GroupSpec& g) {
  Json j;
  j["summary"] = true;
  j["group"] = g.family_name();
  j["n"] = g.n();
  j["records"] = s.records;
  j["connected"] = s.connected;
  j["graphs"] = s.graphs;
  j["normal"] = s.normal;
  j["nnn"] = s.nnn;
  j["nnn_graphs"] = s.nnn_graphs;
  j["ci"] = s.ci;
  j["non_ci"] = s.non_ci;
  j["ci_skipped"] = s.ci_skipped;
  j["normal_non_ci"] = s.normal_non_ci;
  j["normal_non_ci_graphs"] = s.normal_non_ci_graphs;
  return j;
}

Json to_json(const NonNormalityCertificate& c, const GroupSpec& g) {
  Json j;
  j["condition"] = c.condition;
  Json l = Json::array();
  for (const GroupAut& a : c.l_generators) l.push_back(to_json(a));
  j["l_generators"] = std::move(l);
  j["k"] = to_json(c.k_elements);
  j["fixed"] = to_json(c.fixed);
  j["index"] = c.index;
  if (c.g) j["g"] = format_elem(g, *c.g);
  if (c.k) j["k_element"] = format_elem(g, *c.k);
  if (c.gamma) j["gamma"] = to_json(*c.gamma);
  return j;
}

Json to_json(const WitnessReport& w) {
  Json j;
  j["n"] = w.n;
  j["order"] = w.order;
  j["regular"] = w.regular;
  j["rotation_order"] = w.rotation_order;
  j["dihedral_relation"] = w.dihedral_relation;
  j["aut_order"] = count_to_json(w.aut_order);
  j["contained_in_aut"] = w.contained_in_aut;
  j["normal_in_aut"] = w.normal_in_aut;
  return j;
}

Json to_json(const GroupCheck& c) {
  Json j;
  j["group"] = to_json(c.group);
  j["reduced"] = c.reduced;
  j["passed"] = c.passed;
  j["expected"] = verdicts_json(c.expected);
  j["observed"] = verdicts_json(c.observed);
  j["summary"] = to_json(c.summary, c.group);
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["max_n"] = r.max_n;
  j["passed"] = r.passed;
  Json groups = Json::array();
  for (const GroupCheck& c : r.groups) groups.push_back(to_json(c));
  j["groups"] = std::move(groups);
  return j;
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace nnn
