#include "cag/json_io.hpp"

#include <map>
#include <string>

#include "cag/error.hpp"
#include "json.hpp"

namespace cag::json {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::vector<std::string> labels(const json& doc) {
  const json& list = member(doc, "vertices");
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "'vertices' must be an array");
  std::vector<std::string> out;
  for (const auto& item : list) {
    if (!item.is_string()) throw Error(ErrorKind::ParseError, "vertex labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rational(const json& value) {
  if (value.is_string()) return parse_fraction(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error(ErrorKind::ParseError, "rationals must be \"p/q\" strings");
}

Arc parse_arc(const json& item) {
  if (item.contains("full") && item.at("full").is_boolean() && item.at("full").get<bool>()) {
    throw Error(ErrorKind::FullCircleArc, "the whole circle is not an arc");
  }
  const Rational l = rational(member(item, "l"));
  const Rational r = rational(member(item, "r"));
  if (mod_one(l) == mod_one(r)) {
    if (l == r) throw Error(ErrorKind::PointArc, "a single point is not an arc");
    throw Error(ErrorKind::FullCircleArc, "arc spans the whole circle");
  }
  return Arc(TurnPos(l), TurnPos(r));
}

std::map<std::string, std::size_t> index_labels(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorKind::ParseError, "duplicate vertex label '" + names[i] + "'");
    }
  }
  return index;
}

json edge_list(const std::vector<std::pair<std::size_t, std::size_t>>& edges, const Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({g.vertices()[u], g.vertices()[v]});
  return out;
}

}  // namespace

ArcFamily parse_family(std::string_view text) {
  const json doc = parse_document(text);
  auto names = labels(doc);
  index_labels(names);
  const json& list = member(doc, "arcs");
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "'arcs' must be an array");
  std::vector<Arc> arcs;
  for (const auto& item : list) arcs.push_back(parse_arc(item));
  return ArcFamily(std::move(names), std::move(arcs));
}

std::string dump_family(const ArcFamily& f) {
  json arcs = json::array();
  for (const auto& a : f.arcs()) {
    arcs.push_back({{"l", to_fraction_string(a.l().value())}, {"r", to_fraction_string(a.r().value())}});
  }
  json doc{{"vertices", f.vertices()}, {"arcs", std::move(arcs)}};
  return doc.dump(2) + "\n";
}

Graph parse_graph(std::string_view text) {
  const json doc = parse_document(text);
  Graph g(labels(doc));
  const auto index = index_labels(g.vertices());
  const json& list = member(doc, "edges");
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "'edges' must be an array");
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(ErrorKind::ParseError, "edges must be [\"a\",\"b\"] pairs");
    }
    const auto u = index.find(e[0].get<std::string>());
    const auto v = index.find(e[1].get<std::string>());
    if (u == index.end() || v == index.end()) {
      throw Error(ErrorKind::ParseError, "edge refers to an unknown vertex");
    }
    if (u->second == v->second) throw Error(ErrorKind::ParseError, "self-loops are not allowed");
    g.add_edge(u->second, v->second);
  }
  return g;
}

std::string dump_graph(const Graph& g) {
  json doc{{"vertices", g.vertices()}, {"edges", edge_list(g.edges(), g)}};
  return doc.dump(2) + "\n";
}

BoxRep parse_box_rep(std::string_view text) {
  const json doc = parse_document(text);
  BoxRep rep{labels(doc), {}};
  index_labels(rep.vertices);
  const json& dims = member(doc, "dims");
  const json& list = member(doc, "intervals");
  if (!dims.is_number_unsigned() || !list.is_array() || list.size() != dims.get<std::size_t>()) {
    throw Error(ErrorKind::ParseError, "'dims' must match the number of interval lists");
  }
  for (const auto& column : list) {
    if (!column.is_array() || column.size() != rep.vertices.size()) {
      throw Error(ErrorKind::ParseError, "each dimension needs one interval per vertex");
    }
    std::vector<Interval> parsed;
    for (const auto& iv : column) {
      if (!iv.is_array() || iv.size() != 2) {
        throw Error(ErrorKind::ParseError, "intervals must be [\"lo\",\"hi\"] pairs");
      }
      Interval interval{rational(iv[0]), rational(iv[1])};
      if (interval.hi < interval.lo) throw Error(ErrorKind::ParseError, "interval with lo > hi");
      parsed.push_back(std::move(interval));
    }
    rep.intervals.push_back(std::move(parsed));
  }
  return rep;
}

std::string dump_box_rep(const BoxRep& rep) {
  json columns = json::array();
  for (const auto& column : rep.intervals) {
    json out = json::array();
    for (const auto& iv : column) {
      out.push_back({to_fraction_string(iv.lo), to_fraction_string(iv.hi)});
    }
    columns.push_back(std::move(out));
  }
  json doc{{"dims", rep.dims()}, {"vertices", rep.vertices}, {"intervals", std::move(columns)}};
  return doc.dump(2) + "\n";
}

std::string dump_verify_report(const VerifyReport& report, const Graph& g) {
  json doc{{"ok", report.ok},
           {"missing_edges", edge_list(report.missing_edges, g)},
           {"extra_edges", edge_list(report.extra_edges, g)}};
  return doc.dump() + "\n";
}

}  // namespace cag::json
