#include "topolab/json_io.hpp"

#include <fstream>

namespace topolab {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(ErrorKind::InvalidInput, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

const Json& require_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(ErrorKind::InvalidInput, std::string("missing array field \"") + key + "\"");
  return j[key];
}

}  // namespace

Json set_to_json(const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](int p) { out.push_back(p); });
  return out;
}

PointSet set_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "a point set must be an array of indices");
  PointSet s;
  for (const Json& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0)
      fail(ErrorKind::InvalidInput, "point indices must be nonnegative integers");
    s.set(e.get<int>());
  }
  return s;
}

Json space_to_json(const FiniteSpace& x) {
  Json out;
  out["points"] = x.points();
  Json opens = Json::array();
  for (const PointSet& u : x.opens()) opens.push_back(set_to_json(u));
  out["opens"] = std::move(opens);
  if (!x.labels().empty()) out["labels"] = x.labels();
  return out;
}

FiniteSpace space_from_json(const Json& j) {
  int n = require_int(j, "points");
  std::vector<PointSet> opens;
  for (const Json& e : require_array(j, "opens")) opens.push_back(set_from_json(e));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) fail(ErrorKind::InvalidInput, "labels must be an array");
    for (const Json& e : j["labels"]) labels.push_back(e.get<std::string>());
  }
  return make_space(n, opens, std::move(labels));
}

Json map_to_json(const ContinuousMap& f) {
  Json out;
  out["dom"] = space_to_json(f.dom());
  out["cod"] = space_to_json(f.cod());
  out["graph"] = f.graph();
  return out;
}

ContinuousMap map_from_json(const Json& j) {
  if (!j.contains("dom") || !j.contains("cod"))
    fail(ErrorKind::InvalidInput, "a map needs \"dom\" and \"cod\" spaces");
  FiniteSpace dom = space_from_json(j["dom"]);
  FiniteSpace cod = space_from_json(j["cod"]);
  std::vector<int> graph;
  for (const Json& e : require_array(j, "graph")) graph.push_back(e.get<int>());
  return ContinuousMap::make(std::move(dom), std::move(cod), std::move(graph));
}

Json cover_to_json(const DirectedCover& c) {
  Json out;
  out["space"] = space_to_json(c.space);
  Json members = Json::array();
  for (const PointSet& m : c.members) members.push_back(set_to_json(m));
  out["members"] = std::move(members);
  out["target"] = set_to_json(c.target);
  return out;
}

DirectedCover cover_from_json(const Json& j, const FiniteSpace* space) {
  FiniteSpace x;
  if (j.contains("space"))
    x = space_from_json(j["space"]);
  else if (space != nullptr)
    x = *space;
  else
    fail(ErrorKind::InvalidInput, "cover needs a \"space\"");
  std::vector<PointSet> members;
  for (const Json& e : require_array(j, "members")) members.push_back(set_from_json(e));
  PointSet target = set_from_json(require_array(j, "target"));
  return make_directed_cover(std::move(x), std::move(members), std::move(target));
}

Json family_to_json(const IndexedFamily& f) {
  Json out;
  out["index"] = space_to_json(f.index);
  out["target"] = space_to_json(f.target);
  out["role"] = f.role == FamilyRole::Opens ? "opens" : "compacts";
  Json assign = Json::array();
  for (const PointSet& s : f.assign) assign.push_back(set_to_json(s));
  out["assign"] = std::move(assign);
  return out;
}

IndexedFamily family_from_json(const Json& j) {
  if (!j.contains("index") || !j.contains("target") || !j.contains("role"))
    fail(ErrorKind::InvalidInput, "family needs \"index\", \"target\" and \"role\"");
  FiniteSpace index = space_from_json(j["index"]);
  FiniteSpace target = space_from_json(j["target"]);
  std::string role = j["role"].get<std::string>();
  if (role != "opens" && role != "compacts")
    fail(ErrorKind::InvalidInput, "role must be \"opens\" or \"compacts\"");
  std::vector<PointSet> assign;
  for (const Json& e : require_array(j, "assign")) assign.push_back(set_from_json(e));
  return make_indexed_family(std::move(index), std::move(target),
                             role == "opens" ? FamilyRole::Opens : FamilyRole::Compacts,
                             std::move(assign));
}

Json poset_to_json(const FinitePoset& p) {
  Json out;
  out["elements"] = p.n;
  Json leq = Json::array();
  for (int a = 0; a < p.n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < p.n; ++b) row.push_back(p.leq(a, b));
    leq.push_back(std::move(row));
  }
  out["leq"] = std::move(leq);
  return out;
}

FinitePoset poset_from_json(const Json& j) {
  int n = require_int(j, "elements");
  const Json& leq = require_array(j, "leq");
  if (static_cast<int>(leq.size()) != n)
    fail(ErrorKind::InvalidInput, "leq must have one row per element");
  std::vector<PointSet> up(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const Json& row = leq[static_cast<std::size_t>(a)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(ErrorKind::InvalidInput, "leq rows must have one entry per element");
    for (int b = 0; b < n; ++b)
      if (row[static_cast<std::size_t>(b)].get<bool>()) up[static_cast<std::size_t>(a)].set(b);
  }
  return make_poset(n, std::move(up));
}

Json function_space_to_json(const FunctionSpace& fs) {
  Json out;
  out["dom"] = space_to_json(fs.dom);
  out["cod"] = space_to_json(fs.cod);
  out["maps"] = fs.graphs;
  out["space"] = space_to_json(fs.space);
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return j;
}

}  // namespace topolab
