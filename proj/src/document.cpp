#include "walkmap/document.hpp"

#include <charconv>
#include <limits>

namespace walkmap {

using nlohmann::json;

int DocumentError::exit_code() const {
  switch (kind_) {
    case DocumentErrorKind::Json:
      return 2;
    case DocumentErrorKind::Schema:
      return 3;
    case DocumentErrorKind::Rotation:
      return 4;
  }
  return 2;
}

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw DocumentError(DocumentErrorKind::Schema, "field " + field + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

NodeId node_value(const json& v, const std::string& field, std::size_t node_count) {
  if (!v.is_number_unsigned()) schema_error(field, "expected a non-negative integer");
  auto id = v.get<std::uint64_t>();
  if (id >= node_count) schema_error(field, "node " + std::to_string(id) + " is not below nodes = " + std::to_string(node_count));
  return static_cast<NodeId>(id);
}

}  // namespace

MapDocument parse_map_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string where = e.byte > 0 ? line_column(text, e.byte - 1) : "start of input";
    throw DocumentError(DocumentErrorKind::Json, "malformed JSON at " + where);
  }
  if (!doc.is_object()) schema_error("(root)", "expected an object");
  for (const auto& [key, unused] : doc.items()) {
    if (key != "nodes" && key != "edges" && key != "rotation") schema_error(key, "unknown field");
  }
  if (!doc.contains("nodes")) schema_error("nodes", "missing");
  if (!doc["nodes"].is_number_unsigned()) schema_error("nodes", "expected a non-negative integer");
  const auto node_count = doc["nodes"].get<std::uint64_t>();
  if (node_count > std::numeric_limits<NodeId>::max()) schema_error("nodes", "too large");

  if (!doc.contains("edges")) schema_error("edges", "missing");
  const json& edges = doc["edges"];
  if (!edges.is_array()) schema_error("edges", "expected an array of [source, target] pairs");
  std::vector<std::pair<NodeId, NodeId>> edge_list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) schema_error(field, "expected [source, target]");
    edge_list.emplace_back(node_value(edges[i][0], field + "[0]", node_count),
                           node_value(edges[i][1], field + "[1]", node_count));
  }
  MapDocument out{Graph::build(node_count, edge_list), std::nullopt};

  if (!doc.contains("rotation")) return out;
  const json& rotation = doc["rotation"];
  if (!rotation.is_object()) schema_error("rotation", "expected an object keyed by node");
  std::vector<CyclicOrder> orders(node_count);
  for (const auto& [key, darts] : rotation.items()) {
    const std::string field = "rotation." + key;
    std::uint32_t node = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), node);
    if (ec != std::errc() || ptr != key.data() + key.size() || node >= node_count) {
      schema_error(field, "key is not a node id");
    }
    if (!darts.is_array()) schema_error(field, "expected an array of dart literals");
    std::vector<Dart> elements;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const std::string dfield = field + "[" + std::to_string(i) + "]";
      if (!darts[i].is_string()) schema_error(dfield, "expected a dart literal like \"e3+\"");
      auto d = parse_dart(darts[i].get<std::string>());
      if (!d) schema_error(dfield, "malformed dart literal \"" + darts[i].get<std::string>() + "\"");
      elements.push_back(*d);
    }
    orders[node] = CyclicOrder(std::move(elements));
  }
  try {
    out.map.emplace(out.graph, std::move(orders));
  } catch (const RotationError& e) {
    throw DocumentError(DocumentErrorKind::Rotation, e.what());
  }
  return out;
}

json to_json(const MapDocument& doc) {
  json out;
  out["nodes"] = doc.graph.node_count();
  out["edges"] = json::array();
  for (const auto& e : doc.graph.edges()) out["edges"].push_back({e.source, e.target});
  if (doc.map) {
    json rotation = json::object();
    for (NodeId x = 0; x < doc.graph.node_count(); ++x) {
      json darts = json::array();
      for (Dart d : doc.map->rotation(x).elements()) darts.push_back(to_string(d));
      rotation[std::to_string(x)] = std::move(darts);
    }
    out["rotation"] = std::move(rotation);
  }
  return out;
}

std::string serialize_map_document(const MapDocument& doc) { return to_json(doc).dump(); }

json to_json(const Face& face, const RotationMap& m) {
  json boundary = json::array(), corners = json::array();
  for (Dart d : face.boundary) {
    boundary.push_back(to_string(d));
    corners.push_back(m.graph().tail(d));
  }
  return {{"id", face.id}, {"boundary", boundary}, {"corners", corners}};
}

json to_json(const ReductionStep& step) {
  return {{"rule", to_string(step.rule())},
          {"site", step.site()},
          {"core", to_string(step.core)},
          {"removed", step.removed},
          {"before", to_compact(step.before)},
          {"after", to_compact(step.after)}};
}

json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return steps;
}

json to_json(const HomotopyMove& move) {
  return {{"face", move.face},
          {"a", move.a},
          {"b", move.b},
          {"prefix_len", move.prefix_len},
          {"direction", to_string(move.direction)}};
}

json to_json(const HomotopyCertificate& cert) {
  json moves = json::array();
  for (const auto& m : cert.moves) moves.push_back(to_json(m));
  return {{"source", to_compact(cert.source)}, {"target", to_compact(cert.target)}, {"moves", moves}};
}

json to_json(const SphericityVerdict& verdict) {
  json out = {{"status", to_string(verdict.status)},
              {"method", to_string(verdict.method)},
              {"euler_characteristic", verdict.euler_characteristic},
              {"connected", verdict.connected},
              {"pairs_checked", verdict.pairs_checked},
              {"states_visited", verdict.states_visited}};
  if (verdict.witness) {
    out["witness"] = {to_compact(verdict.witness->first), to_compact(verdict.witness->second)};
  }
  return out;
}

}  // namespace walkmap
